#include "fresco/fresco.hpp"

#include <algorithm>

namespace fresco {

namespace {

using Params = std::vector<QMatrix>;  // one k1 x k2 block per free parameter

Params substitute(const Params& h, const QMatrix& z) {
  Params r;
  for (int c2 = 0; c2 < z.cols; ++c2) {
    QMatrix acc(h.empty() ? 0 : h[0].rows, h.empty() ? 0 : h[0].cols);
    for (int c = 0; c < z.rows; ++c)
      if (z(c, c2) != 0)
        for (size_t i = 0; i < acc.a.size(); ++i) acc.a[i] += z(c, c2) * h[c].a[i];
    r.push_back(acc);
  }
  return r;
}

QMatrix vec_columns(const Params& h, int m) {
  QMatrix r(m, static_cast<int>(h.size()));
  for (size_t c = 0; c < h.size(); ++c)
    for (int i = 0; i < m; ++i) r(i, static_cast<int>(c)) = h[c].a[i];
  return r;
}

QMatrix unvec(const QMatrix& x, int col, int k1, int k2) {
  QMatrix r(k1, k2);
  for (int i = 0; i < k1 * k2; ++i) r.a[i] = x(i, col);
  return r;
}

int resonance_top(const std::vector<Scalar>& nu1, const std::vector<Scalar>& nu2) {
  int top = 0;
  for (const auto& y : nu2)
    for (const auto& x : nu1) {
      Scalar d = y - x;
      if (is_integer(d) && d > 0) top = std::max(top, static_cast<int>(to_long(d)));
    }
  return top;
}

}  // namespace

HomSpace hom_space(const SaturationData& s1, const std::vector<Scalar>& nu1, const SaturationData& s2,
                   const std::vector<Scalar>& nu2) {
  int k1 = s1.D.rows, k2 = s2.D.rows, m = k1 * k2;
  int navail = std::min(s1.D.order(), s2.D.order());
  int ntop = std::max({0, k1 - 2, resonance_top(nu1, nu2)});
  if (navail < ntop) throw ResonanceAtTruncation("Hom solver cannot reach the last resonance", ntop + std::max(k1, k2));
  std::vector<QMatrix> d1, d2;
  for (int n = 0; n <= navail; ++n) {
    d1.push_back(s1.D.coeff(n));
    d2.push_back(s2.D.coeff(n));
  }
  std::vector<Params> H;
  int P = 0;
  for (int n = 0; n <= navail; ++n) {
    QMatrix L(m, m);
    for (int i = 0; i < k1; ++i)
      for (int j = 0; j < k2; ++j) {
        L(i * k2 + j, i * k2 + j) += n;
        for (int l = 0; l < k1; ++l) L(i * k2 + j, l * k2 + j) += d1[0](i, l);
        for (int l = 0; l < k2; ++l) L(i * k2 + j, i * k2 + l) -= d2[0](l, j);
      }
    Params rhs;
    for (int c = 0; c < P; ++c) {
      QMatrix acc(k1, k2);
      for (int t = 0; t < n; ++t) acc = acc + H[t][c] * d2[n - t] - d1[n - t] * H[t][c];
      rhs.push_back(acc);
    }
    QMatrix R = vec_columns(rhs, m);
    bool singular = rank(L) < m;
    if (singular && P > 0) {
      QMatrix C = left_nullspace(L) * R;
      QMatrix Z = nullspace(C);
      for (auto& h : H) h = substitute(h, Z);
      R = R * Z;
      P = Z.cols;
    }
    Params hn;
    if (P > 0) {
      QMatrix X;
      if (!solve(L, R, X)) throw std::logic_error("Hom solver: inconsistent system after elimination");
      for (int c = 0; c < P; ++c) hn.push_back(unvec(X, c, k1, k2));
    }
    if (singular) {
      QMatrix K = nullspace(L);
      for (int c = 0; c < K.cols; ++c) {
        for (auto& h : H) h.push_back(QMatrix(k1, k2));
        hn.push_back(unvec(K, c, k1, k2));
      }
      P += K.cols;
    }
    H.push_back(hn);
  }
  // H must send E2 (val f_j >= j) into E1 (val f_i >= i)
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < k1; ++i)
    for (int j = 0; j < k2; ++j)
      for (int n = 0; n < i - j && n <= navail; ++n) {
        std::vector<Scalar> row;
        for (int c = 0; c < P; ++c) row.push_back(H[n][c](i, j));
        rows.push_back(row);
      }
  if (!rows.empty() && P > 0) {
    QMatrix C(static_cast<int>(rows.size()), P);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < P; ++c) C(static_cast<int>(r), c) = rows[r][c];
    QMatrix Z = nullspace(C);
    for (auto& h : H) h = substitute(h, Z);
    P = Z.cols;
  }
  HomSpace out;
  out.order = navail;
  for (int c = 0; c < P; ++c) {
    SMatrix s(k1, k2, navail);
    for (int n = 0; n <= navail; ++n)
      for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k2; ++j) s(i, j)[n] = H[n][c](i, j);
    out.basis.push_back(s);
  }
  return out;
}

namespace {

int kernel_order_needed(const std::vector<Scalar>& lambdas, const Scalar& mu) {
  int k = static_cast<int>(lambdas.size());
  int top = std::max(k - 2, resonance_top(nu_from_lambdas(lambdas), {mu}));
  return std::max(top + k, static_cast<int>(ceil_of(mu - lambdas[0] + k)));
}

}  // namespace

std::vector<SVec> kernel_vectors(const AbModule& m, const SVec& gen, const std::vector<Scalar>& lambdas,
                                 const Scalar& mu) {
  int need = kernel_order_needed(lambdas, mu);
  if (m.order() < need) throw OrderTooSmall("kernel of a - mu b", need);
  SaturationData s1 = saturation_data(m, gen);
  SaturationData s2;
  s2.D = SMatrix(1, 1, s1.D.order());
  s2.D(0, 0) = TruncSeries::constant(mu, s1.D.order());
  HomSpace hs = hom_space(s1, nu_from_lambdas(lambdas), s2, {mu});
  std::vector<SVec> out;
  for (const auto& h : hs.basis) out.push_back(from_saturation(s1, h.column(0)));
  return out;
}

Submodule kernel_K(const AbModule& m, const Scalar& mu) {
  SVec gen = find_generator(m);
  auto lambdas = fundamental_invariants(m, gen);
  auto vs = kernel_vectors(m, gen, lambdas, mu);
  Submodule s;
  if (vs.empty()) {
    s.gens = SMatrix(m.k(), 0, m.order());
    s.normal = true;
    return s;
  }
  s.gens = SMatrix::from_columns(vs);
  s.normal = rank(s.gens.coeff(0)) == s.gens.cols;
  return s;
}

IsoResult is_isomorphic(const FrescoPresentation& p1, const FrescoPresentation& p2, int order) {
  IsoResult res;
  int N = std::max({p1.order, p2.order, order});
  res.order = N;
  if (p1.k() != p2.k() || p1.lambdas != p2.lambdas) {
    res.outcome = IsoResult::Outcome::NotIsomorphic;
    res.reason = "fundamental invariants differ";
    return res;
  }
  int k = p1.k();
  if (extended(p1, N) == extended(p2, N)) {
    res.outcome = IsoResult::Outcome::Isomorphic;
    res.witness = unit_vector(k, k - 1, N);
    res.reason = "identical presentations";
    return res;
  }
  auto nu = nu_from_lambdas(p1.lambdas);
  int ntop = std::max({0, k - 2, resonance_top(nu, nu)});
  if (N - k < ntop) {
    res.reason = "order " + std::to_string(N) + " below the last resonance; need " + std::to_string(ntop + k);
    return res;
  }
  AbModule m1 = realize(p1, N), m2 = realize(p2, N);
  SaturationData s1 = saturation_data(m1, standard_generator(m1));
  SaturationData s2 = saturation_data(m2, standard_generator(m2));
  HomSpace hs = hom_space(s1, nu, s2, nu);
  for (const auto& h : hs.basis) {
    if (h(0, 0)[0] == 0) continue;
    res.outcome = IsoResult::Outcome::Isomorphic;
    res.witness = from_saturation(s1, h.column(0));
    res.reason = "generator found";
    return res;
  }
  res.outcome = IsoResult::Outcome::NotIsomorphic;
  res.reason = "every morphism sends the generator into a.E + b.E";
  return res;
}

}  // namespace fresco
