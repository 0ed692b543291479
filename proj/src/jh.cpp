#include "fresco/fresco.hpp"

#include <algorithm>

namespace fresco {

namespace {

std::vector<int> complement(int k, const std::vector<int>& pivots) {
  std::vector<int> c;
  for (int i = 0; i < k; ++i)
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) c.push_back(i);
  return c;
}

int common_order(const std::vector<TruncSeries>& s) {
  int n = s.front().order();
  for (const auto& x : s) n = std::min(n, x.order());
  return n;
}

FrescoPresentation jh_rec(const AbModule& m, const SVec& g, const std::vector<Scalar>& lambdas) {
  int k = m.k();
  auto ker = kernel_vectors(m, g, lambdas, lambdas[0]);
  if (ker.size() != 1) throw std::runtime_error("kernel of a - lambda_1 b is not one-dimensional");
  SVec psi = ker[0];
  int p = -1;
  for (int i = k - 1; i >= 0; --i)
    if (psi[i][0] != 0) {
      p = i;
      break;
    }
  if (p < 0) throw std::runtime_error("first Jordan-Hoelder term is not normal");

  FrescoPresentation out;
  out.lambdas = lambdas;
  SVec z = truncated(g, std::min(order_of(g), order_of(psi)));
  if (k > 1) {
    SMatrix gens = SMatrix::from_columns({psi});
    Submodule sub = make_submodule(gens);
    AbModule q = quotient(m, sub);
    SVec gq = project(sub, g);
    FrescoPresentation rest = jh_rec(q, gq, std::vector<Scalar>(lambdas.begin() + 1, lambdas.end()));
    z = g;
    for (int j = k - 1; j >= 1; --j) {
      z = scale(invert(rest.S[j - 1]), truncated(z, std::min(order_of(z), rest.S[j - 1].order())));
      z = sub_a_lambda(m, z, lambdas[j]);
    }
    out.S.push_back(TruncSeries(0));
    for (const auto& s : rest.S) out.S.push_back(s);
  } else {
    out.S.push_back(TruncSeries(0));
  }
  int n = std::min(z[p].order(), psi[p].order());
  TruncSeries u = mul(z[p].truncated(n), invert(psi[p].truncated(n)));
  if (u[0] == 0) throw std::runtime_error("generator does not reach the first Jordan-Hoelder term");
  out.S[0] = scale(1 / u[0], u);
  out.order = common_order(out.S);
  for (auto& s : out.S) s = s.truncated(out.order);
  return out;
}

}  // namespace

SVec sub_a_lambda(const AbModule& m, const SVec& v, const Scalar& lambda) {
  SVec av = apply_a(m, v);
  SVec bv;
  for (const auto& x : v) bv.push_back(shift_up(x, 1));
  return sub(av, scale(lambda, bv));
}

FrescoPresentation jh_factorize(const AbModule& m, const SVec& gen) {
  return jh_rec(m, gen, fundamental_invariants(m, gen));
}

SVec project(const Submodule& sub, const SVec& v) {
  if (!sub.normal) throw NotNormal();
  int k = static_cast<int>(v.size());
  auto comp = complement(k, sub.pivots);
  SVec r;
  for (int c : comp) {
    TruncSeries x = v[c];
    for (int q = 0; q < sub.rank(); ++q) x -= mul(sub.gens(c, q), v[sub.pivots[q]]);
    r.push_back(x);
  }
  return r;
}

AbModule quotient(const AbModule& m, const Submodule& sub) {
  if (!sub.normal) throw NotNormal();
  int k = m.k();
  auto comp = complement(k, sub.pivots);
  std::vector<SVec> cols;
  for (int c : comp) cols.push_back(project(sub, m.A.column(c)));
  int r = static_cast<int>(comp.size());
  if (r == 0) return make_module(SMatrix(0, 0, m.order()));
  return make_module(SMatrix::from_columns(cols));
}

namespace {

Submodule semisimple_with(const AbModule& m, const SVec& gen) {
  auto lambdas = fundamental_invariants(m, gen);
  for (const auto& l : lambdas)
    if (!same_class(l, lambdas[0])) throw NotPrimitive();
  int k = m.k();
  Scalar mu = lambdas[k - 1] + k - 1;
  auto xs = kernel_vectors(m, gen, lambdas, mu);
  // normal hull of the b-span
  while (true) {
    SMatrix X = SMatrix::from_columns(xs);
    QMatrix x0 = X.coeff(0);
    QMatrix ns = nullspace(x0);
    if (ns.cols == 0) break;
    int j = -1;
    for (int i = ns.rows - 1; i >= 0; --i)
      if (ns(i, 0) != 0) {
        j = i;
        break;
      }
    SVec comb(k, TruncSeries(X.order()));
    for (int i = 0; i < ns.rows; ++i)
      if (ns(i, 0) != 0) comb = add(comb, scale(ns(i, 0), X.column(i)));
    int v = valuation(comb);
    if (v > order_of(comb)) throw OrderTooSmall("semi-simple part exhausted the working order", 2 * m.order());
    for (auto& c : comb) c = shift_down(c, v);
    xs[j] = comb;
    int n = order_of(comb);
    for (auto& x : xs) x = truncated(x, std::min(n, order_of(x)));
  }
  return make_submodule(SMatrix::from_columns(xs));
}

}  // namespace

Submodule semisimple_part(const AbModule& m) { return semisimple_with(m, find_generator(m)); }

int delta(const AbModule& m) { return semisimple_part(m).rank(); }

int ss_depth(const AbModule& m) {
  AbModule cur = m;
  int d = 0;
  while (true) {
    Submodule s = semisimple_part(cur);
    ++d;
    if (s.rank() == cur.k()) return d;
    cur = quotient(cur, s);
  }
}

FrescoPresentation primitive_part(const FrescoPresentation& p, const std::vector<Scalar>& classes) {
  validate(p);
  if (classes.empty()) throw ClassNotSmallest();
  std::set<Scalar> want;
  for (const auto& c : classes) want.insert(class_rep(c));
  std::set<Scalar> seen;
  int m = 0;
  while (m < p.k() && want.count(class_rep(p.lambdas[m]))) seen.insert(class_rep(p.lambdas[m++]));
  if (seen != want) throw ClassNotSmallest();
  if (m == p.k()) return p;
  FrescoPresentation r;
  r.order = p.order;
  r.lambdas.assign(p.lambdas.begin(), p.lambdas.begin() + m);
  r.S.assign(p.S.begin(), p.S.begin() + m);
  r.S[m - 1] = TruncSeries::one(p.order);
  return r;
}

}  // namespace fresco
