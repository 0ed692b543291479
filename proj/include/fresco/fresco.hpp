#pragma once

#include "fresco/ahat.hpp"
#include "fresco/linalg.hpp"
#include "fresco/poly.hpp"

#include <climits>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fresco {

struct InvalidPresentation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAGenerator : std::domain_error {
  NotAGenerator() : std::domain_error("vector is not a generator (basis condition fails modulo b)") {}
};
struct ResonanceAtTruncation : std::runtime_error {
  int needed;
  ResonanceAtTruncation(const std::string& what, int needed_order)
      : std::runtime_error(what + " (needs order " + std::to_string(needed_order) + ")"), needed(needed_order) {}
};
struct OrderTooSmall : std::runtime_error {
  int needed;
  OrderTooSmall(const std::string& what, int needed_order)
      : std::runtime_error(what + " (needs order " + std::to_string(needed_order) + ")"), needed(needed_order) {}
};
struct NotPrimitive : std::domain_error {
  NotPrimitive() : std::domain_error("fundamental invariants lie in several classes mod Z") {}
};
struct NotNormal : std::domain_error {
  NotNormal() : std::domain_error("submodule is not normal") {}
};
struct ClassNotSmallest : std::domain_error {
  ClassNotSmallest() : std::domain_error("requested classes are not an initial segment of the class order") {}
};

// representative of x mod Z in (0, 1]
Scalar class_rep(const Scalar& x);
bool same_class(const Scalar& x, const Scalar& y);

struct FrescoPresentation {
  std::vector<Scalar> lambdas;
  std::vector<TruncSeries> S;
  int order = 0;

  int k() const { return static_cast<int>(lambdas.size()); }
  Scalar p(int j) const { return lambdas[j] - lambdas[j - 1] + 1; }  // p_j, 1-based
  bool operator==(const FrescoPresentation& o) const { return lambdas == o.lambdas && S == o.S && order == o.order; }
};

// S defaults to 1 where missing
FrescoPresentation make_presentation(std::vector<Scalar> lambdas, std::vector<TruncSeries> S, int order);
void validate(const FrescoPresentation& p);
int default_order(const std::vector<Scalar>& lambdas);
FrescoPresentation truncated(const FrescoPresentation& p, int m);
FrescoPresentation extended(const FrescoPresentation& p, int m);
bool equal_upto(const FrescoPresentation& x, const FrescoPresentation& y, int m);
// S_j(b) -> S_j(b / xi), the effect of theta(a) = xi a
FrescoPresentation rescale(const FrescoPresentation& p, const Scalar& xi);

// b acts as multiplication (B = b Id); a acts by v -> A v + b^2 v'.
struct AbModule {
  SMatrix A, B;

  int k() const { return A.rows; }
  int order() const { return A.order(); }
};

AbModule make_module(const SMatrix& A);
bool satisfies_commutator(const AbModule& m);
SVec apply_a(const AbModule& m, const SVec& v);
SVec apply_b(const AbModule& m, const SVec& v);
// (a - lambda b) v
SVec sub_a_lambda(const AbModule& m, const SVec& v, const Scalar& lambda);
SVec apply(const AbModule& m, const AhatElement& x, const SVec& v);

struct Submodule {
  SMatrix gens;             // k x r, columns generate
  std::vector<int> pivots;  // rows where gens is the identity when normalized
  bool normal = false;
  int rank() const { return gens.cols; }
};

Submodule make_submodule(const SMatrix& gens);

AbModule realize(const FrescoPresentation& p);
AbModule realize(const FrescoPresentation& p, int order);
SVec standard_generator(const AbModule& m);

// f(realize(p, N)), realizing again at a larger order while f reports one is needed
template <class F>
auto on_realization(const FrescoPresentation& p, int N, F f) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f(realize(p, N));
    } catch (const OrderTooSmall& e) {
      if (attempt == 4) throw;
      N = std::max(e.needed, N + 1);
    } catch (const ResonanceAtTruncation& e) {
      if (attempt == 4) throw;
      N = std::max(e.needed, N + 1);
    }
  }
}
AhatElement bernstein_element(const FrescoPresentation& p, int order = -1);
// (a - l1 b) S1^-1 ... (a - lk b) Sk^-1
AhatElement presentation_element(const FrescoPresentation& p, int order = -1);

// a^k g = sum_i T_i a^i g with G = [g, ag, ..., a^(k-1) g]
struct Companion {
  SMatrix G;
  std::vector<TruncSeries> T;
};
Companion companion(const AbModule& m, const SVec& gen);
MonicAnnihilator annihilator(const AbModule& m, const SVec& gen);
SVec find_generator(const AbModule& m);

// b^-1 a on the basis b^-j a^j g of the saturation is D + b d/db
struct SaturationData {
  Companion comp;
  SMatrix D;
};
SaturationData saturation_data(const AbModule& m, const SVec& gen);
AbModule saturation(const AbModule& m, const SVec& gen);
// coordinates on b^-j a^j g -> ambient coordinates; requires val(f_j) >= j
SVec from_saturation(const SaturationData& s, const SVec& f);

Poly bernstein_polynomial(const AbModule& m, const SVec& gen, bool minimal = false);
// roots shifted back to (lambda_1 ... lambda_k) in principal order
std::vector<Scalar> fundamental_invariants(const AbModule& m, const SVec& gen);
std::vector<Scalar> nu_from_lambdas(const std::vector<Scalar>& lambdas);

// Hom(E2, E1) as b^-1 a equivariant maps of saturations that send E2 into E1.
struct HomSpace {
  std::vector<SMatrix> basis;  // k1 x k2 in saturation coordinates
  int order = 0;
};
HomSpace hom_space(const SaturationData& s1, const std::vector<Scalar>& nu1, const SaturationData& s2,
                   const std::vector<Scalar>& nu2);

Submodule kernel_K(const AbModule& m, const Scalar& mu);
std::vector<SVec> kernel_vectors(const AbModule& m, const SVec& gen, const std::vector<Scalar>& lambdas, const Scalar& mu);

FrescoPresentation jh_factorize(const AbModule& m, const SVec& gen);

AbModule quotient(const AbModule& m, const Submodule& sub);
SVec project(const Submodule& sub, const SVec& v);

Submodule semisimple_part(const AbModule& m);
int delta(const AbModule& m);
int ss_depth(const AbModule& m);

FrescoPresentation primitive_part(const FrescoPresentation& p, const std::vector<Scalar>& classes);

AbModule dual_twisted(const AbModule& m, const Scalar& delta);

struct IsoResult {
  enum class Outcome { Isomorphic, NotIsomorphic, Inconclusive } outcome = Outcome::Inconclusive;
  std::optional<SVec> witness;  // generator of realize(p1) with presentation p2
  int order = 0;
  std::string reason;
  bool is_true() const { return outcome == Outcome::Isomorphic; }
};
IsoResult is_isomorphic(const FrescoPresentation& p1, const FrescoPresentation& p2, int order = -1);

std::set<int> Y_support(const std::vector<Scalar>& lambdas, int j);

struct VersalResult {
  FrescoPresentation pres;
  SVec generator;  // in the standard basis of realize(input)
  int order = 0;
};
VersalResult reduce_to_versal(const FrescoPresentation& p, int order = -1);

constexpr long kInfiniteIndex = LONG_MAX;
long sharp_filtration_index(const AbModule& m, const SVec& v);

std::string format_presentation(const FrescoPresentation& p);

}  // namespace fresco
