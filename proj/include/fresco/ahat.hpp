#pragma once

#include "fresco/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fresco {

struct BadAnnihilatorShape : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Element of Â, sum of c * a^i b^nu (all a's to the left), i + nu <= order.
class AhatElement {
 public:
  using Key = std::pair<int, int>;  // (i, nu)

  explicit AhatElement(int order = 0) : order_(order) {}
  static AhatElement a(int order);
  static AhatElement b(int order);
  static AhatElement constant(const Scalar& c, int order);
  static AhatElement monomial(const Scalar& c, int i, int nu, int order);
  // S(b) as an element
  static AhatElement series_in_b(const TruncSeries& s, int order);
  // P(a), polynomial in a with stored coefficients of p
  static AhatElement series_in_a(const TruncSeries& p, int order);

  int order() const { return order_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coeff(int i, int nu) const;
  void add_term(int i, int nu, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  int a_degree() const;
  AhatElement truncated(int m) const;

  bool operator==(const AhatElement& o) const { return order_ == o.order_ && terms_ == o.terms_; }
  bool operator!=(const AhatElement& o) const { return !(*this == o); }

 private:
  int order_;
  std::map<Key, Scalar> terms_;
};

AhatElement operator+(const AhatElement& x, const AhatElement& y);
AhatElement operator-(const AhatElement& x, const AhatElement& y);
AhatElement operator*(const Scalar& s, const AhatElement& x);
AhatElement mul(const AhatElement& x, const AhatElement& y);
AhatElement operator*(const AhatElement& x, const AhatElement& y);

// theta(a) = theta_1 a + theta_2 a^2 + ...
struct ChangeOfVariable {
  TruncSeries theta;

  explicit ChangeOfVariable(TruncSeries t);
  static ChangeOfVariable identity(int order);
  Scalar chi() const { return theta[1]; }
  bool unimodular() const { return chi() == 1; }
  int order() const { return theta.order(); }
  // (this ∘ inner)(a) = this(inner(a))
  ChangeOfVariable after(const ChangeOfVariable& inner) const;
  ChangeOfVariable inverse() const;
};

// a -> theta(a), b -> b theta'(a)
AhatElement theta_morphism(const ChangeOfVariable& cv, const AhatElement& x);
// a -> a, b -> -b, order of factors reversed
AhatElement eta_morphism(const AhatElement& x);

// Monic annihilator a^k - sum_j T_j(b) a^j, coefficients written to the left.
struct MonicAnnihilator {
  std::vector<TruncSeries> T;  // T[0..k-1]
  int k() const { return static_cast<int>(T.size()); }
  AhatElement element(int order) const;
};

// v of a-degree < k with u - v in Â·P, exact up to total order `order`.
AhatElement reduce_mod_annihilator(const AhatElement& u, const MonicAnnihilator& P, int order);

// "c·a^i·b^nu + ..." in degree-lexicographic order
std::string to_string(const AhatElement& x);

}  // namespace fresco
