#include "fresco/series.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace fresco {

Obstruction::Obstruction(long m_, const Scalar& r_, const std::string& where)
    : std::runtime_error("obstruction: resonant coefficient b^" + std::to_string(m_) + " = " + to_string(r_) +
                         (where.empty() ? "" : " in " + where)),
      m(m_),
      r(r_) {}

Scalar parse_scalar(const std::string& text) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad rational literal '" + text + "'");
  mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den = m[2].matched ? mpz_class(m[2].str()) : mpz_class(1);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

long ceil_of(const Scalar& x) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return c.get_si();
}

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

long to_long(const Scalar& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) throw std::domain_error("not a machine integer: " + to_string(x));
  return x.get_num().get_si();
}

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.assign(order + 1, Scalar(0));
}

TruncSeries::TruncSeries(int order, std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.resize(order + 1, Scalar(0));
}

TruncSeries TruncSeries::constant(const Scalar& c, int order) {
  TruncSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(const Scalar& c, int e, int order) {
  TruncSeries s(order);
  if (e <= order) s.c_[e] = c;
  return s;
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x == 0; });
}

int TruncSeries::valuation() const {
  for (int i = 0; i <= order(); ++i)
    if (c_[i] != 0) return i;
  return order() + 1;
}

int TruncSeries::degree() const {
  for (int i = order(); i >= 0; --i)
    if (c_[i] != 0) return i;
  return -1;
}

TruncSeries TruncSeries::truncated(int m) const {
  if (m > order()) throw std::invalid_argument("truncated: cannot raise order " + std::to_string(order()) + " to " + std::to_string(m));
  return TruncSeries(m, std::vector<Scalar>(c_.begin(), c_.begin() + m + 1));
}

TruncSeries TruncSeries::extended(int m) const {
  if (m <= order()) return truncated(m);
  return TruncSeries(m, c_);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& y) {
  if (y.order() < order()) c_.resize(y.order() + 1);
  for (int i = 0; i <= order(); ++i) c_[i] += y.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& y) {
  if (y.order() < order()) c_.resize(y.order() + 1);
  for (int i = 0; i <= order(); ++i) c_[i] -= y.c_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

TruncSeries add(const TruncSeries& x, const TruncSeries& y) {
  TruncSeries r = x;
  r += y;
  return r;
}

TruncSeries sub(const TruncSeries& x, const TruncSeries& y) {
  TruncSeries r = x;
  r -= y;
  return r;
}

TruncSeries mul(const TruncSeries& x, const TruncSeries& y) {
  int n = std::min(x.order(), y.order());
  TruncSeries r(n);
  int vx = x.valuation(), vy = y.valuation();
  Scalar t;
  for (int i = vx; i <= n; ++i) {
    if (x[i] == 0) continue;
    for (int j = vy; i + j <= n; ++j) {
      if (y[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), x[i].get_mpq_t(), y[j].get_mpq_t());
      r[i + j] += t;
    }
  }
  return r;
}

TruncSeries scale(const Scalar& s, const TruncSeries& x) {
  TruncSeries r = x;
  r *= s;
  return r;
}

TruncSeries invert(const TruncSeries& x) {
  if (!x.is_unit()) throw NotAUnit();
  int n = x.order();
  TruncSeries r(n);
  Scalar inv0 = 1 / x[0];
  r[0] = inv0;
  for (int i = 1; i <= n; ++i) {
    Scalar acc = 0;
    for (int j = 1; j <= i; ++j)
      if (x[j] != 0) acc += x[j] * r[i - j];
    r[i] = -acc * inv0;
  }
  return r;
}

TruncSeries derive(const TruncSeries& x) {
  if (x.order() == 0) return TruncSeries(0);
  TruncSeries r(x.order() - 1);
  for (int i = 1; i <= x.order(); ++i) r[i - 1] = x[i] * i;
  return r;
}

TruncSeries solve_euler(const Scalar& m, const TruncSeries& r) {
  TruncSeries y(r.order());
  for (int i = 0; i <= r.order(); ++i) {
    Scalar d = Scalar(i) - m;
    if (d == 0) {
      if (r[i] != 0) throw Obstruction(i, r[i]);
      continue;
    }
    y[i] = r[i] / d;
  }
  return y;
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) { return add(x, y); }
TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) { return sub(x, y); }
TruncSeries operator-(const TruncSeries& x) { return scale(-1, x); }
TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) { return mul(x, y); }
TruncSeries operator*(const Scalar& s, const TruncSeries& x) { return scale(s, x); }

TruncSeries shift_up(const TruncSeries& x, int m) {
  TruncSeries r(x.order());
  for (int i = 0; i + m <= x.order(); ++i) r[i + m] = x[i];
  return r;
}

TruncSeries shift_down(const TruncSeries& x, int m) {
  if (m == 0) return x;
  if (x.valuation() < m) throw std::domain_error("shift_down: valuation below " + std::to_string(m));
  if (m > x.order()) throw std::domain_error("shift_down: order exhausted");
  return TruncSeries(x.order() - m, std::vector<Scalar>(x.coeffs().begin() + m, x.coeffs().end()));
}

TruncSeries rescale_var(const TruncSeries& x, const Scalar& c) {
  TruncSeries r = x;
  Scalar p = 1;
  for (int i = 0; i <= x.order(); ++i) {
    r[i] *= p;
    p *= c;
  }
  return r;
}

TruncSeries compose(const TruncSeries& x, const TruncSeries& y) {
  if (y[0] != 0) throw std::domain_error("compose: inner series must vanish at 0");
  int n = std::min(x.order(), y.order());
  TruncSeries r(n);
  TruncSeries yy = y.truncated(n);
  // Horner
  for (int i = n; i >= 0; --i) {
    r = mul(r, yy);
    r[0] += x[i];
  }
  return r;
}

TruncSeries reversion(const TruncSeries& y) {
  if (y[0] != 0 || y.order() < 1 || y[1] == 0) throw std::domain_error("reversion needs y(0)=0, y'(0)!=0");
  int n = y.order();
  // Newton-free fixed point: x = (t - (y(x) - y1 x)) / y1, one new coefficient per pass
  TruncSeries x = TruncSeries::monomial(1 / y[1], 1, n);
  for (int pass = 2; pass <= n; ++pass) {
    TruncSeries e = compose(y, x);
    e[1] -= 1;
    x[pass] -= e[pass] / y[1];
  }
  return x;
}

bool equal_upto(const TruncSeries& x, const TruncSeries& y, int m) {
  if (m > x.order() || m > y.order()) throw std::invalid_argument("equal_upto beyond known order");
  for (int i = 0; i <= m; ++i)
    if (x[i] != y[i]) return false;
  return true;
}

std::string format_sparse(const TruncSeries& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= x.order(); ++i) {
    if (x[i] == 0) continue;
    if (!first) os << ' ';
    os << i << ':' << to_string(x[i]);
    first = false;
  }
  if (first) os << "0:0";
  return os.str();
}

TruncSeries parse_sparse(const std::string& text, int order) {
  TruncSeries s(order);
  std::istringstream is(text);
  std::string tok;
  std::vector<bool> seen(order + 1, false);
  while (is >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected exponent:coefficient, got '" + tok + "'");
    std::string es = tok.substr(0, colon);
    if (es.empty() || !std::all_of(es.begin(), es.end(), ::isdigit)) throw std::invalid_argument("bad exponent in '" + tok + "'");
    long e = std::stol(es);
    Scalar c = parse_scalar(tok.substr(colon + 1));
    if (e > order) {
      if (c != 0) throw std::invalid_argument("exponent " + es + " exceeds order " + std::to_string(order));
      continue;
    }
    if (seen[e]) throw std::invalid_argument("exponent " + es + " repeated");
    seen[e] = true;
    s[e] = c;
  }
  return s;
}

std::string format_pretty(const TruncSeries& x, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= x.order(); ++i) {
    Scalar c = x[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
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
