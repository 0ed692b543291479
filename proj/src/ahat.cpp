#include "fresco/ahat.hpp"

#include <algorithm>
#include <sstream>

namespace fresco {

namespace {

// b^nu a^j = sum_l c_l a^(j-l) b^(nu+l), c_l = (-1)^l C(j,l) nu(nu+1)...(nu+l-1)
std::vector<Scalar> commute_coeffs(int nu, int j) {
  std::vector<Scalar> c(j + 1);
  Scalar binom = 1, rising = 1;
  for (int l = 0; l <= j; ++l) {
    c[l] = (l % 2 ? -1 : 1) * binom * rising;
    binom = binom * (j - l) / (l + 1);
    rising *= nu + l;
  }
  return c;
}

}  // namespace

AhatElement AhatElement::a(int order) { return monomial(1, 1, 0, order); }
AhatElement AhatElement::b(int order) { return monomial(1, 0, 1, order); }
AhatElement AhatElement::constant(const Scalar& c, int order) { return monomial(c, 0, 0, order); }

AhatElement AhatElement::monomial(const Scalar& c, int i, int nu, int order) {
  AhatElement x(order);
  x.add_term(i, nu, c);
  return x;
}

AhatElement AhatElement::series_in_b(const TruncSeries& s, int order) {
  AhatElement x(order);
  for (int n = 0; n <= std::min(order, s.order()); ++n) x.add_term(0, n, s[n]);
  return x;
}

AhatElement AhatElement::series_in_a(const TruncSeries& p, int order) {
  AhatElement x(order);
  for (int n = 0; n <= std::min(order, p.order()); ++n) x.add_term(n, 0, p[n]);
  return x;
}

Scalar AhatElement::coeff(int i, int nu) const {
  auto it = terms_.find({i, nu});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void AhatElement::add_term(int i, int nu, const Scalar& c) {
  if (c == 0 || i + nu > order_) return;
  auto [it, inserted] = terms_.try_emplace({i, nu}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int AhatElement::a_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

AhatElement AhatElement::truncated(int m) const {
  AhatElement r(m);
  for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c);
  return r;
}

AhatElement operator+(const AhatElement& x, const AhatElement& y) {
  AhatElement r(std::min(x.order(), y.order()));
  for (const auto& [k, c] : x.terms()) r.add_term(k.first, k.second, c);
  for (const auto& [k, c] : y.terms()) r.add_term(k.first, k.second, c);
  return r;
}

AhatElement operator-(const AhatElement& x, const AhatElement& y) {
  AhatElement r(std::min(x.order(), y.order()));
  for (const auto& [k, c] : x.terms()) r.add_term(k.first, k.second, c);
  for (const auto& [k, c] : y.terms()) r.add_term(k.first, k.second, -c);
  return r;
}

AhatElement operator*(const Scalar& s, const AhatElement& x) {
  AhatElement r(x.order());
  for (const auto& [k, c] : x.terms()) r.add_term(k.first, k.second, s * c);
  return r;
}

AhatElement mul(const AhatElement& x, const AhatElement& y) {
  int n = std::min(x.order(), y.order());
  AhatElement r(n);
  for (const auto& [kx, cx] : x.terms()) {
    auto [i, nu] = kx;
    for (const auto& [ky, cy] : y.terms()) {
      auto [j, mu] = ky;
      if (i + nu + j + mu > n) continue;
      Scalar c = cx * cy;
      if (nu == 0) {
        r.add_term(i + j, mu, c);
        continue;
      }
      auto cc = commute_coeffs(nu, j);
      for (int l = 0; l <= j; ++l) r.add_term(i + j - l, nu + l + mu, c * cc[l]);
    }
  }
  return r;
}

AhatElement operator*(const AhatElement& x, const AhatElement& y) { return mul(x, y); }

ChangeOfVariable::ChangeOfVariable(TruncSeries t) : theta(std::move(t)) {
  if (theta.order() < 1) throw std::invalid_argument("change of variable needs order >= 1");
  if (theta[0] != 0) throw std::invalid_argument("change of variable must satisfy theta(0) = 0");
  if (theta[1] == 0) throw std::invalid_argument("change of variable must satisfy theta'(0) != 0");
}

ChangeOfVariable ChangeOfVariable::identity(int order) { return ChangeOfVariable(TruncSeries::monomial(1, 1, order)); }

ChangeOfVariable ChangeOfVariable::after(const ChangeOfVariable& inner) const {
  int n = std::max(order(), inner.order());
  return ChangeOfVariable(compose(theta.extended(n), inner.theta.extended(n)));
}

ChangeOfVariable ChangeOfVariable::inverse() const { return ChangeOfVariable(reversion(theta)); }

AhatElement theta_morphism(const ChangeOfVariable& cv, const AhatElement& x) {
  int n = x.order();
  TruncSeries th = cv.theta.extended(std::max(n, 1));
  AhatElement alpha = AhatElement::series_in_a(th, n);
  AhatElement beta = mul(AhatElement::b(n), AhatElement::series_in_a(derive(th).extended(n), n));
  int maxi = 0, maxnu = 0;
  for (const auto& [k, c] : x.terms()) {
    maxi = std::max(maxi, k.first);
    maxnu = std::max(maxnu, k.second);
  }
  std::vector<AhatElement> ap{AhatElement::constant(1, n)}, bp{AhatElement::constant(1, n)};
  for (int i = 1; i <= maxi; ++i) ap.push_back(mul(ap.back(), alpha));
  for (int i = 1; i <= maxnu; ++i) bp.push_back(mul(bp.back(), beta));
  AhatElement r(n);
  for (const auto& [k, c] : x.terms()) r = r + c * mul(ap[k.first], bp[k.second]);
  return r;
}

AhatElement eta_morphism(const AhatElement& x) {
  int n = x.order();
  AhatElement r(n);
  for (const auto& [k, c] : x.terms()) {
    auto [i, nu] = k;
    Scalar s = (nu % 2 ? -c : c);
    r = r + s * mul(AhatElement::monomial(1, 0, nu, n), AhatElement::monomial(1, i, 0, n));
  }
  return r;
}

AhatElement MonicAnnihilator::element(int order) const {
  AhatElement p = AhatElement::monomial(1, k(), 0, order);
  for (int j = 0; j < k(); ++j)
    for (int n = 0; n <= T[j].order() && n + j <= order; ++n)
      if (T[j][n] != 0) p = p - mul(AhatElement::monomial(T[j][n], 0, n, order), AhatElement::monomial(1, j, 0, order));
  return p;
}

AhatElement reduce_mod_annihilator(const AhatElement& u, const MonicAnnihilator& P, int order) {
  int k = P.k();
  for (int j = 0; j < k; ++j)
    if (P.T[j].valuation() < std::min(k - j, P.T[j].order() + 1))
      throw BadAnnihilatorShape("coefficient T_" + std::to_string(j) + " has b-valuation below " + std::to_string(k - j));
  AhatElement p = P.element(order);
  AhatElement v = u.truncated(std::min(order, u.order()));
  while (true) {
    int top = v.a_degree();
    if (top < k) break;
    // highest a-degree term, smallest b-exponent first
    auto it = std::find_if(v.terms().begin(), v.terms().end(), [&](const auto& kv) { return kv.first.first == top; });
    auto [i, nu] = it->first;
    Scalar c = it->second;
    AhatElement x = AhatElement::monomial(c, i - k, nu, v.order());
    v = v - mul(x, p);
  }
  return v;
}

std::string to_string(const AhatElement& x) {
  std::vector<std::pair<AhatElement::Key, Scalar>> ts(x.terms().begin(), x.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& p, const auto& q) {
    int dp = p.first.first + p.first.second, dq = q.first.first + q.first.second;
    if (dp != dq) return dp < dq;
    return p.first.first > q.first.first;
  });
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    Scalar a = abs(c);
    bool need = true;
    if (a != 1 || (k.first == 0 && k.second == 0)) {
      os << to_string(a);
      need = false;
    }
    auto put = [&](const char* sym, int e) {
      if (e == 0) return;
      if (!need) os << "·";
      os << sym;
      if (e > 1) os << "^" << e;
      need = false;
    };
    put("a", k.first);
    put("b", k.second);
    first = false;
  }
  return os.str();
}

}  // namespace fresco
