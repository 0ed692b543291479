#include "fresco/chgvar.hpp"

#include <algorithm>

namespace fresco {

namespace {

// p(a) v for p given by stored coefficients
SVec apply_poly(const AbModule& m, const TruncSeries& p, const SVec& v) {
  int d = p.degree();
  if (d < 0) return scale(Scalar(0), v);
  SVec r = scale(p[d], v);
  for (int i = d - 1; i >= 0; --i) r = add(apply_a(m, r), scale(p[i], v));
  return r;
}

bool is_pure_scaling(const ChangeOfVariable& cv) { return cv.theta.degree() == 1; }

}  // namespace

AbModule theta_push(const AbModule& m, const ChangeOfVariable& cv) {
  int k = m.k(), N = m.order();
  TruncSeries dtheta = derive(cv.theta);
  auto beta = [&](const SVec& v) {
    SVec r = apply_poly(m, dtheta, v);
    for (auto& x : r) x = shift_up(x, 1);
    return r;
  };
  // w[n][i] = beta^n e_i; its b^n coefficient block is invertible
  std::vector<std::vector<SVec>> w(N + 1);
  std::vector<QMatrix> lead_inv;
  for (int n = 0; n <= N; ++n) {
    for (int i = 0; i < k; ++i) w[n].push_back(n == 0 ? unit_vector(k, i, N) : beta(w[n - 1][i]));
    QMatrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int r = 0; r < k; ++r) lead(r, i) = w[n][i][r][n];
    lead_inv.push_back(inverse(lead));
  }
  SMatrix A(k, k, N);
  for (int j = 0; j < k; ++j) {
    SVec r = apply_poly(m, cv.theta, unit_vector(k, j, N));
    for (int n = 0; n <= N; ++n) {
      QMatrix c = lead_inv[n] * coeff(r, n);
      for (int i = 0; i < k; ++i) {
        if (c(i, 0) == 0) continue;
        A(i, j)[n] = c(i, 0);
        r = sub(r, scale(c(i, 0), w[n][i]));
      }
    }
  }
  return make_module(A);
}

int push_order(const FrescoPresentation& p, int target) {
  int k = p.k();
  return std::max(default_order(p.lambdas), target + k * k + k);
}

FrescoPresentation push_presentation(const FrescoPresentation& p, const ChangeOfVariable& cv, int order) {
  int N = order < 0 ? push_order(p) : order;
  AbModule m = theta_push(realize(p, N), cv);
  return jh_factorize(m, standard_generator(m));
}

TruncSeries rank1_alpha_series(const Scalar& mu, const ChangeOfVariable& cv, int N) {
  if (mu == 0) return TruncSeries::one(N);
  SMatrix A(1, 1, N + 1);
  A(0, 0) = TruncSeries::monomial(mu, 1, N + 1);
  AbModule pushed = theta_push(make_module(A), cv);
  return scale(1 / mu, shift_down(pushed.A(0, 0), 1));
}

TruncSeries rank1_adapt(const Scalar& mu, const ChangeOfVariable& cv, int N) {
  TruncSeries t = rank1_alpha_series(mu, cv, N);
  TruncSeries s(N);
  s[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Scalar acc = 0;
    for (int j = 1; j <= n; ++j) acc += t[j] * s[n - j];
    s[n] = -mu * acc / n;
  }
  return s;
}

Scalar rank1_monomial_factor(const Scalar& lambda, int p, int q) {
  Scalar c = 1;
  for (int i = 0; i < p; ++i) c *= lambda + q + i;
  return c;
}

ProbeReport quasi_invariance_probe(const ParamFn& f, const FrescoPresentation& p, const ChangeOfVariable& cv,
                                   int order) {
  ProbeReport r;
  r.before = f(p);
  r.after = f(push_presentation(p, cv, order));
  r.difference = r.after - r.before;
  if (r.before != 0) r.ratio = r.after / r.before;
  if (is_pure_scaling(cv) && r.before != 0 && r.after != 0) {
    Scalar xi = cv.chi();
    for (int w = -64; w <= 64 && !r.exponent; ++w) {
      Scalar pw = 1;
      Scalar base = w >= 0 ? xi : 1 / xi;
      for (int i = 0; i < std::abs(w); ++i) pw *= base;
      if (pw * r.before == r.after) r.exponent = w;
    }
  }
  return r;
}

}  // namespace fresco
