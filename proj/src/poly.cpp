#include "fresco/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fresco {

Poly poly_trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
  return p;
}

int poly_degree(const Poly& p) {
  Poly q = poly_trim(p);
  return (q.size() == 1 && q[0] == 0) ? -1 : static_cast<int>(q.size()) - 1;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q) {
  Poly a = poly_trim(p), b = poly_trim(q);
  int db = poly_degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  int da = poly_degree(a);
  if (da < db) return {Poly{0}, a};
  Poly quo(da - db + 1);
  for (int i = da - db; i >= 0; --i) {
    Scalar f = a[i + db] / b[db];
    quo[i] = f;
    for (int j = 0; j <= db; ++j) a[i + j] -= f * b[j];
  }
  return {poly_trim(quo), poly_trim(a)};
}

Poly poly_monic(Poly p) {
  p = poly_trim(p);
  if (poly_degree(p) < 0) return p;
  Scalar lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = poly_trim(p), b = poly_trim(q);
  while (poly_degree(b) >= 0) {
    Poly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{0};
  Poly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return poly_trim(d);
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

int sign(const Scalar& x) { return sgn(x); }

int sign_changes(const std::vector<Poly>& seq, const Scalar& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign(poly_eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{poly_trim(p), poly_derivative(p)};
  while (poly_degree(seq.back()) > 0) {
    Poly r = poly_divmod(seq[seq.size() - 2], seq.back()).second;
    if (poly_degree(r) < 0) break;
    for (auto& c : r) c = -c;
    seq.push_back(r);
  }
  return seq;
}

mpz_class lcm_den(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

}  // namespace

std::vector<std::pair<Scalar, int>> rational_roots(const Poly& p0, Poly* rest) {
  Poly p = poly_monic(p0);
  if (poly_degree(p) < 0) throw std::domain_error("roots of the zero polynomial");
  std::vector<std::pair<Scalar, int>> out;
  // factor out z
  int zero_mult = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  Poly sf = p;
  if (poly_degree(p) > 0) sf = poly_divmod(p, poly_gcd(p, poly_derivative(p))).first;
  sf = poly_monic(sf);
  std::vector<Scalar> candidates;
  if (poly_degree(sf) > 0) {
    // a rational root of a monic polynomial lies in (1/L)Z, L the lcm of the coefficient denominators
    mpz_class L = lcm_den(sf);
    Scalar width = Scalar(1) / Scalar(2 * L);
    Scalar bound = 1;
    for (const auto& c : sf) bound = std::max(bound, Scalar(abs(c)));
    bound += 1;
    auto seq = sturm_sequence(sf);
    std::vector<std::pair<Scalar, Scalar>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      int n = sign_changes(seq, lo) - sign_changes(seq, hi);
      if (n == 0) continue;
      if (hi - lo < width) {
        // at most one lattice point in (lo, hi]
        mpz_class k;
        Scalar t = hi * L;
        mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        Scalar cand = Scalar(k) / Scalar(L);
        if (cand > lo && cand <= hi && poly_eval(sf, cand) == 0) candidates.push_back(cand);
        continue;
      }
      Scalar mid = (lo + hi) / 2;
      stack.push_back({lo, mid});
      stack.push_back({mid, hi});
    }
  }
  Poly q = p;
  for (const auto& r : candidates) {
    int mult = 0;
    Poly lin{-r, 1};
    while (true) {
      auto [quo, rem] = poly_divmod(q, lin);
      if (poly_degree(rem) >= 0) break;
      q = quo;
      ++mult;
    }
    out.push_back({r, mult});
  }
  if (zero_mult > 0) out.push_back({Scalar(0), zero_mult});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (rest) *rest = poly_monic(q);
  return out;
}

Poly minpoly(const QMatrix& m) {
  int n = m.rows;
  Poly result{1};
  for (int v = 0; v < n; ++v) {
    QMatrix x(n, 1);
    x(v, 0) = 1;
    QMatrix basis(n, 0);
    Poly local;
    for (int d = 0; d <= n; ++d) {
      QMatrix coeffs;
      if (d > 0 && solve(basis, x, coeffs)) {
        local.assign(d + 1, 0);
        local[d] = 1;
        for (int i = 0; i < d; ++i) local[i] = -coeffs(i, 0);
        break;
      }
      basis = hstack(basis, x);
      x = m * x;
    }
    Poly g = poly_gcd(result, local);
    result = poly_monic(poly_divmod(poly_mul(result, local), g).first);
  }
  return result;
}

std::string format_poly(const Poly& p0, const std::string& var) {
  Poly p = poly_trim(p0);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    const Scalar& c = p[i];
    if (c == 0) continue;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    Scalar a = abs(c);
    if (i == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fresco
