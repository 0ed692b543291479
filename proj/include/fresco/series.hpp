#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fresco {

using Scalar = mpq_class;

struct NotAUnit : std::domain_error {
  NotAUnit() : std::domain_error("series is not a unit (zero constant term)") {}
};

// Raised by solve_euler when the resonant coefficient of the right hand side is nonzero.
struct Obstruction : std::runtime_error {
  long m;
  Scalar r;
  Obstruction(long m_, const Scalar& r_, const std::string& where = "");
};

Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& x);
bool is_integer(const Scalar& x);
long to_long(const Scalar& x);
long ceil_of(const Scalar& x);

// Power series in one variable, known modulo var^(order+1).
class TruncSeries {
 public:
  TruncSeries() : TruncSeries(0) {}
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<Scalar> coeffs);

  static TruncSeries constant(const Scalar& c, int order);
  static TruncSeries monomial(const Scalar& c, int e, int order);
  static TruncSeries one(int order) { return constant(1, order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }
  // zero for i > order is only meaningful for polynomial data
  Scalar coeff(int i) const { return i <= order() ? c_[i] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_unit() const { return c_[0] != 0; }
  bool is_zero() const;
  // order()+1 when every known coefficient vanishes
  int valuation() const;
  int degree() const;

  TruncSeries truncated(int m) const;
  // Reads the stored coefficients as a polynomial and pads with zeros.
  TruncSeries extended(int m) const;

  TruncSeries& operator+=(const TruncSeries& y);
  TruncSeries& operator-=(const TruncSeries& y);
  TruncSeries& operator*=(const Scalar& s);

  bool operator==(const TruncSeries& y) const { return c_ == y.c_; }
  bool operator!=(const TruncSeries& y) const { return !(*this == y); }

 private:
  std::vector<Scalar> c_;
};

TruncSeries add(const TruncSeries& x, const TruncSeries& y);
TruncSeries sub(const TruncSeries& x, const TruncSeries& y);
TruncSeries mul(const TruncSeries& x, const TruncSeries& y);
TruncSeries scale(const Scalar& s, const TruncSeries& x);
TruncSeries invert(const TruncSeries& x);
TruncSeries derive(const TruncSeries& x);
TruncSeries solve_euler(const Scalar& m, const TruncSeries& r);

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);
TruncSeries operator-(const TruncSeries& x, const TruncSeries& y);
TruncSeries operator-(const TruncSeries& x);
TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);
TruncSeries operator*(const Scalar& s, const TruncSeries& x);

// x * var^m, same order
TruncSeries shift_up(const TruncSeries& x, int m);
// x / var^m, requires valuation >= m; order drops by m
TruncSeries shift_down(const TruncSeries& x, int m);
// x(c * var)
TruncSeries rescale_var(const TruncSeries& x, const Scalar& c);
// x(y(var)), y(0) = 0
TruncSeries compose(const TruncSeries& x, const TruncSeries& y);
// compositional inverse of y with y(0)=0, y'(0) != 0 (Lagrange reversion)
TruncSeries reversion(const TruncSeries& y);

bool equal_upto(const TruncSeries& x, const TruncSeries& y, int m);

// "e:c" pairs, zero coefficients omitted, e.g. "0:1 2:-3/2"
std::string format_sparse(const TruncSeries& x);
TruncSeries parse_sparse(const std::string& text, int order);
// "1 + 2*b - b^3"
std::string format_pretty(const TruncSeries& x, const std::string& var = "b");

}  // namespace fresco
