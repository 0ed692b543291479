#include "fresco/fresco.hpp"

#include <algorithm>
#include <sstream>

namespace fresco {

Scalar class_rep(const Scalar& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Scalar r = x - Scalar(f);
  return r == 0 ? Scalar(1) : r;
}

bool same_class(const Scalar& x, const Scalar& y) { return is_integer(x - y); }

FrescoPresentation make_presentation(std::vector<Scalar> lambdas, std::vector<TruncSeries> S, int order) {
  FrescoPresentation p;
  p.order = order;
  int k = static_cast<int>(lambdas.size());
  p.lambdas = std::move(lambdas);
  for (int j = 0; j < k; ++j)
    p.S.push_back(j < static_cast<int>(S.size()) ? S[j].extended(order) : TruncSeries::one(order));
  validate(p);
  return p;
}

void validate(const FrescoPresentation& p) {
  int k = p.k();
  if (k < 1) throw InvalidPresentation("rank must be at least 1");
  if (static_cast<int>(p.S.size()) != k) throw InvalidPresentation("expected one series per fundamental invariant");
  if (p.order < 0) throw InvalidPresentation("negative order");
  for (int j = 0; j < k; ++j)
    if (p.S[j][0] != 1) throw InvalidPresentation("S_" + std::to_string(j + 1) + "(0) must equal 1");
  for (int j = 1; j < k; ++j) {
    const Scalar &x = p.lambdas[j - 1], &y = p.lambdas[j];
    if (same_class(x, y)) {
      if (y + 1 < x) throw InvalidPresentation("lambda_j + j must be non-decreasing within a class");
    } else {
      if (class_rep(y) < class_rep(x)) throw InvalidPresentation("classes mod Z must appear in increasing order");
      for (int i = 0; i < j - 1; ++i)
        if (same_class(p.lambdas[i], y)) throw InvalidPresentation("classes mod Z must form contiguous blocks");
    }
  }
}

int default_order(const std::vector<Scalar>& lambdas) {
  int k = static_cast<int>(lambdas.size());
  if (k == 0) return 4;
  auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
  return static_cast<int>(ceil_of(*hi - *lo)) + 3 * k + 4;
}

FrescoPresentation truncated(const FrescoPresentation& p, int m) {
  FrescoPresentation r = p;
  r.order = m;
  for (auto& s : r.S) s = s.truncated(m);
  return r;
}

FrescoPresentation extended(const FrescoPresentation& p, int m) {
  FrescoPresentation r = p;
  r.order = m;
  for (auto& s : r.S) s = s.extended(m);
  return r;
}

bool equal_upto(const FrescoPresentation& x, const FrescoPresentation& y, int m) {
  if (x.lambdas != y.lambdas) return false;
  for (int j = 0; j < x.k(); ++j)
    if (!equal_upto(x.S[j], y.S[j], m)) return false;
  return true;
}

FrescoPresentation rescale(const FrescoPresentation& p, const Scalar& xi) {
  FrescoPresentation r = p;
  for (auto& s : r.S) s = rescale_var(s, 1 / xi);
  return r;
}

AbModule make_module(const SMatrix& A) {
  AbModule m;
  m.A = A;
  m.B = SMatrix(A.rows, A.rows, A.order());
  for (int i = 0; i < A.rows; ++i) m.B(i, i) = TruncSeries::monomial(1, 1, A.order());
  return m;
}

bool satisfies_commutator(const AbModule& m) {
  int n = m.order();
  SMatrix lhs = m.A * m.B - m.B * m.A;
  SMatrix sq = m.B * m.B;
  // a.(b v) - b.(a v) = b^2 v for the operator a v = A v + b^2 v'
  SMatrix deriv(m.k(), m.k(), n);
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.k(); ++j) {
      TruncSeries d = derive(m.B(i, j));
      TruncSeries t(n);
      for (int e = 0; e + 2 <= n && e <= d.order(); ++e) t[e + 2] = d[e];
      deriv(i, j) = t;
    }
  return lhs + deriv == sq;
}

SVec apply_a(const AbModule& m, const SVec& v) {
  SVec r = m.A * v;
  SVec d = derive_shift2(v);
  return add(r, d);
}

SVec apply_b(const AbModule& m, const SVec& v) { return m.B * v; }

SVec apply(const AbModule& m, const AhatElement& x, const SVec& v) {
  int top = x.a_degree();
  int n = std::min(order_of(v), x.order());
  SVec acc(v.size(), TruncSeries(n));
  for (int i = top; i >= 0; --i) {
    if (i < top) acc = apply_a(m, acc);
    SVec w(v.size(), TruncSeries(n));
    for (const auto& [key, c] : x.terms()) {
      if (key.first != i) continue;
      for (size_t r = 0; r < v.size(); ++r) w[r] += scale(c, shift_up(v[r].truncated(n), key.second));
    }
    acc = add(acc, w);
  }
  return acc;
}

Submodule make_submodule(const SMatrix& gens) {
  Submodule s;
  int r = gens.cols;
  QMatrix g0 = gens.coeff(0);
  Rref rr = rref(transpose(g0));
  s.normal = static_cast<int>(rr.pivots.size()) == r;
  if (!s.normal) {
    s.gens = gens;
    return s;
  }
  s.pivots = rr.pivots;
  SMatrix P(r, r, gens.order());
  for (int q = 0; q < r; ++q)
    for (int c = 0; c < r; ++c) P(q, c) = gens(s.pivots[q], c);
  s.gens = gens * inverse(P);
  return s;
}

AbModule realize(const FrescoPresentation& p) { return realize(p, p.order); }

AbModule realize(const FrescoPresentation& p, int N) {
  validate(p);
  int k = p.k();
  SMatrix A(k, k, N);
  for (int j = 0; j < k; ++j) {
    A(j, j) = TruncSeries::monomial(p.lambdas[j], 1, N);
    if (j > 0) A(j - 1, j) = p.S[j - 1].extended(N);
  }
  TruncSeries Sk = p.S[k - 1].extended(N);
  if (Sk != TruncSeries::one(N)) {
    TruncSeries d = mul(derive(Sk).extended(N), invert(Sk));
    A(k - 1, k - 1) += shift_up(d, 2);
    if (k > 1) A(k - 2, k - 1) = mul(A(k - 2, k - 1), Sk);
  }
  return make_module(A);
}

SVec standard_generator(const AbModule& m) { return unit_vector(m.k(), m.k() - 1, m.order()); }

AhatElement bernstein_element(const FrescoPresentation& p, int order) {
  int n = std::max(order < 0 ? p.order : order, p.k());
  AhatElement r = AhatElement::constant(1, n);
  for (const auto& l : p.lambdas) r = r * (AhatElement::a(n) - l * AhatElement::b(n));
  return r;
}

AhatElement presentation_element(const FrescoPresentation& p, int order) {
  int n = order < 0 ? p.order : order;
  AhatElement r = AhatElement::constant(1, n);
  for (int j = 0; j < p.k(); ++j) {
    r = r * (AhatElement::a(n) - p.lambdas[j] * AhatElement::b(n));
    r = r * AhatElement::series_in_b(invert(p.S[j].extended(n)), n);
  }
  return r;
}

Companion companion(const AbModule& m, const SVec& gen) {
  int k = m.k();
  std::vector<SVec> w{truncated(gen, std::min(order_of(gen), m.order()))};
  for (int i = 1; i <= k; ++i) w.push_back(apply_a(m, w.back()));
  Companion c;
  c.G = SMatrix::from_columns(std::vector<SVec>(w.begin(), w.begin() + k));
  if (rank(c.G.coeff(0)) < k) throw NotAGenerator();
  c.T = inverse(c.G) * w[k];
  return c;
}

MonicAnnihilator annihilator(const AbModule& m, const SVec& gen) { return MonicAnnihilator{companion(m, gen).T}; }

SVec find_generator(const AbModule& m) {
  int k = m.k(), n = m.order();
  std::vector<SVec> cands;
  for (int i = k - 1; i >= 0; --i) cands.push_back(unit_vector(k, i, n));
  for (int i = k - 1; i >= 0; --i)
    for (int j = i - 1; j >= 0; --j) cands.push_back(add(unit_vector(k, i, n), unit_vector(k, j, n)));
  SVec all(k, TruncSeries::one(n));
  cands.push_back(all);
  for (const auto& c : cands) {
    try {
      companion(m, c);
      return c;
    } catch (const NotAGenerator&) {
    }
  }
  throw NotAGenerator();
}

SaturationData saturation_data(const AbModule& m, const SVec& gen) {
  SaturationData s;
  s.comp = companion(m, gen);
  int k = m.k(), n = s.comp.G.order() - k;
  if (n < 0) throw OrderTooSmall("saturation needs order at least the rank", k);
  s.D = SMatrix(k, k, n);
  for (int j = 0; j < k; ++j) {
    s.D(j, j) = TruncSeries::constant(-j, n);
    if (j + 1 < k) s.D(j + 1, j) = TruncSeries::one(n);
  }
  for (int i = 0; i < k; ++i) {
    TruncSeries t = shift_down(s.comp.T[i], k - i).truncated(n);
    s.D(i, k - 1) += t;
  }
  return s;
}

AbModule saturation(const AbModule& m, const SVec& gen) {
  SaturationData s = saturation_data(m, gen);
  SMatrix A = s.D;
  for (auto& x : A.a) x = shift_up(x, 1);
  return make_module(A);
}

SVec from_saturation(const SaturationData& s, const SVec& f) {
  SVec U;
  for (size_t j = 0; j < f.size(); ++j) U.push_back(shift_down(f[j], static_cast<int>(j)));
  return s.comp.G * U;
}

Poly bernstein_polynomial(const AbModule& m, const SVec& gen, bool minimal) {
  SaturationData s = saturation_data(m, gen);
  QMatrix d = s.D.coeff(0);
  for (auto& x : d.a) x = -x;
  return minimal ? minpoly(d) : charpoly(d);
}

std::vector<Scalar> nu_from_lambdas(const std::vector<Scalar>& lambdas) {
  int k = static_cast<int>(lambdas.size());
  std::vector<Scalar> nu;
  for (int i = 0; i < k; ++i) nu.push_back(lambdas[i] + i + 1 - k);
  return nu;
}

namespace {

std::vector<Scalar> principal_from_nu(std::vector<Scalar> nu) {
  std::sort(nu.begin(), nu.end(), [](const Scalar& x, const Scalar& y) {
    Scalar cx = class_rep(x), cy = class_rep(y);
    if (cx != cy) return cx < cy;
    return x < y;
  });
  int k = static_cast<int>(nu.size());
  for (int i = 0; i < k; ++i) nu[i] += k - 1 - i;
  return nu;
}

}  // namespace

std::vector<Scalar> fundamental_invariants(const AbModule& m, const SVec& gen) {
  Poly rest;
  auto roots = rational_roots(bernstein_polynomial(m, gen), &rest);
  if (poly_degree(rest) > 0) throw std::domain_error("Bernstein polynomial has non-rational roots");
  std::vector<Scalar> nu;
  for (const auto& [r, mult] : roots)
    for (int i = 0; i < mult; ++i) nu.push_back(-r);
  return principal_from_nu(nu);
}

std::set<int> Y_support(const std::vector<Scalar>& lambdas, int j) {
  int k = static_cast<int>(lambdas.size());
  if (j == k) return {0};
  std::set<int> y;
  for (int h = 0; h < k - j; ++h) y.insert(h);
  // run of lambdas in the class of lambda_j, 1-based indices j..j+l_j
  int lj = 0;
  while (j + lj < k && same_class(lambdas[j - 1], lambdas[j + lj])) ++lj;
  Scalar q = 0;
  for (int l = 0; l < lj; ++l) {
    q += lambdas[j + l] - lambdas[j + l - 1] + 1;
    if (q >= k - j) y.insert(static_cast<int>(to_long(q)));
  }
  return y;
}

long sharp_filtration_index(const AbModule& m, const SVec& v) {
  int k = m.k();
  long best = kInfiniteIndex;
  for (int i = 0; i < k; ++i) {
    if (v[i].is_zero()) continue;
    long idx = static_cast<long>(v[i].valuation()) * k + (k - 1 - i);
    best = std::min(best, idx);
  }
  return best;
}

AbModule dual_twisted(const AbModule& m, const Scalar& delta) {
  int k = m.k(), n = m.order();
  SMatrix A(k, k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) A(i, j) = -m.A(j, i);
  for (int i = 0; i < k; ++i) A(i, i) += TruncSeries::monomial(delta, 1, n);
  return make_module(A);
}

std::string format_presentation(const FrescoPresentation& p) {
  std::ostringstream os;
  os << "rank " << p.k() << " order " << p.order << "\n";
  os << "lambdas";
  for (const auto& l : p.lambdas) os << " " << to_string(l);
  os << "\n";
  for (int j = 0; j < p.k(); ++j) os << "S " << j + 1 << " " << format_sparse(p.S[j]) << "\n";
  return os.str();
}

}  // namespace fresco
