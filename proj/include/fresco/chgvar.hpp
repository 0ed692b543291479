#pragma once

#include "fresco/fresco.hpp"

#include <functional>
#include <optional>

namespace fresco {

// theta_*(E): a acts as theta(a), b as b theta'(a); result is written on the same
// basis in canonical form for the new b (B' = b Id).
AbModule theta_push(const AbModule& m, const ChangeOfVariable& cv);

// Order at which jh_factorize of a pushed realization keeps at least `target` coefficients.
int push_order(const FrescoPresentation& p, int target = 2);

FrescoPresentation push_presentation(const FrescoPresentation& p, const ChangeOfVariable& cv, int order = -1);

// alpha e = mu beta T(beta) e in theta_*(E_mu)
TruncSeries rank1_alpha_series(const Scalar& mu, const ChangeOfVariable& cv, int N);
// S_mu with (alpha - mu beta) S_mu(beta) e = 0
TruncSeries rank1_adapt(const Scalar& mu, const ChangeOfVariable& cv, int N);

// (lambda + q)(lambda + q + 1)...(lambda + q + p - 1), a^p b^q e = c b^(p+q) e in E_lambda
Scalar rank1_monomial_factor(const Scalar& lambda, int p, int q);

using ParamFn = std::function<Scalar(const FrescoPresentation&)>;

struct ProbeReport {
  Scalar before, after, difference;
  std::optional<Scalar> ratio;
  // for theta = xi a: after = xi^w before
  std::optional<int> exponent;
};

ProbeReport quasi_invariance_probe(const ParamFn& f, const FrescoPresentation& p, const ChangeOfVariable& cv,
                                   int order = -1);

}  // namespace fresco
