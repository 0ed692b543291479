#pragma once

#include "fresco/fresco.hpp"
#include "fresco/io.hpp"

#include <random>
#include <string>
#include <vector>

namespace fresco::testing {

inline TruncSeries ser(const std::string& sparse, int order) { return parse_sparse(sparse, order); }

inline Scalar q(long n, long d = 1) {
  Scalar x(n, d);
  x.canonicalize();
  return x;
}

class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Scalar small_rational(int span = 3) {
    int d = uniform(1, 3);
    return q(uniform(-span * d, span * d), d);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  // unit with S(0) = 1 and up to `terms` further coefficients
  TruncSeries unit(int order, int terms) {
    TruncSeries s = TruncSeries::one(order);
    for (int e = 1; e <= std::min(order, terms); ++e) s[e] = small_rational();
    return s;
  }

 private:
  std::mt19937 g_;
};

// lambdas from lambda_1 and the gaps p_j = lambda_{j+1} - lambda_j + 1
inline std::vector<Scalar> lambdas_from(const Scalar& l1, const std::vector<Scalar>& p) {
  std::vector<Scalar> l{l1};
  for (const auto& pj : p) l.push_back(l.back() + pj - 1);
  return l;
}

// single class, p_j in [0, pmax], S_k = 1
inline FrescoPresentation random_primitive(Rng& r, int k, int pmax = 3, int terms = 3) {
  static const std::vector<Scalar> starts{Scalar(7, 2), Scalar(10, 3), Scalar(9, 4), Scalar(5, 2)};
  std::vector<Scalar> p;
  for (int j = 1; j < k; ++j) p.push_back(r.uniform(0, pmax));
  auto l = lambdas_from(r.pick(starts), p);
  int N = default_order(l);
  std::vector<TruncSeries> S;
  for (int j = 0; j < k - 1; ++j) S.push_back(r.unit(N, terms));
  return make_presentation(l, S, N);
}

// classes 1/3 and 1/2 may both occur; S_k may differ from 1
inline FrescoPresentation random_mixed(Rng& r, int k, int terms = 3) {
  std::vector<Scalar> l;
  int split = r.uniform(0, k);
  Scalar x = Scalar(4, 3);
  for (int j = 0; j < k; ++j) {
    if (j == split) x = Scalar(5, 2);
    else if (j > 0) x += r.uniform(0, 2);
    l.push_back(x);
  }
  int N = default_order(l);
  std::vector<TruncSeries> S;
  for (int j = 0; j < k; ++j) S.push_back(r.unit(N, terms));
  return make_presentation(l, S, N);
}

// dim of Ker(a - mu b) on E, read through E/b^M E: the flat kernel is taken on
// E/b^M' E with M' = max(M + k + 2, mu - nu_min + 2) and then projected.
// A is transcribed from the presentation (S_k = 1 required).
inline int brute_force_kernel_dim(const FrescoPresentation& p, const Scalar& mu, int M) {
  int k = p.k();
  Scalar num = mu - (p.lambdas[0] + 1 - k);
  int Mp = std::max<long>(M + k + 2, ceil_of(num) + 2);
  auto S = [&](int j, int n) { return p.S[j].coeff(n); };
  // coordinate (i, n) of b^n e_i
  auto idx = [&](int i, int n) { return n * k + i; };
  int dim = k * Mp;
  QMatrix L(dim, dim);
  for (int n = 0; n < Mp; ++n)
    for (int j = 0; j < k; ++j) {
      int col = idx(j, n);
      // a (b^n e_j) = b^n a e_j + n b^(n+1) e_j, a e_j = lambda_j b e_j + S_{j-1} e_{j-1}
      if (n + 1 < Mp) L(idx(j, n + 1), col) += p.lambdas[j] + n - mu;
      if (j > 0)
        for (int t = 0; n + t < Mp; ++t) L(idx(j - 1, n + t), col) += S(j - 1, t);
    }
  QMatrix K = nullspace(L);
  QMatrix proj(k * M, K.cols);
  for (int r = 0; r < k * M; ++r)
    for (int c = 0; c < K.cols; ++c) proj(r, c) = K(r, c);
  return rank(proj);
}

}  // namespace fresco::testing

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<fresco::TruncSeries> {
  static String convert(const fresco::TruncSeries& s) {
    return ("[" + fresco::format_sparse(s) + " | order " + std::to_string(s.order()) + "]").c_str();
  }
};
template <>
struct StringMaker<fresco::Scalar> {
  static String convert(const fresco::Scalar& s) { return fresco::to_string(s).c_str(); }
};
}  // namespace doctest
#endif

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<fresco::AhatElement> {
  static String convert(const fresco::AhatElement& x) {
    return (fresco::to_string(x) + " | order " + std::to_string(x.order())).c_str();
  }
};
}  // namespace doctest
#endif
