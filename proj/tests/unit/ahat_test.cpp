#include "doctest.h"
#include "support.hpp"

using namespace fresco;
using fresco::testing::ser;

namespace {

// x acting on f(b) e in E_lambda, where a (g e) = (lambda b g + b^2 g') e
TruncSeries act(const AhatElement& x, const TruncSeries& f, const Scalar& lambda) {
  int N = f.order();
  TruncSeries out(N);
  for (const auto& [key, c] : x.terms()) {
    TruncSeries g = shift_up(f, key.second);
    for (int i = 0; i < key.first; ++i) {
      TruncSeries h(N);
      for (int n = 0; n < N; ++n) h[n + 1] = (lambda + n) * g[n];
      g = h;
    }
    out += scale(c, g);
  }
  return out;
}

AhatElement random_element(fresco::testing::Rng& r, int order) {
  AhatElement x(order);
  for (int t = 0; t < 4; ++t) {
    int i = r.uniform(0, 3), nu = r.uniform(0, 3);
    x.add_term(i, nu, r.small_rational());
  }
  return x;
}

}  // namespace

TEST_SUITE("ahat") {
  const int N = 8;
  const AhatElement a = AhatElement::a(N), b = AhatElement::b(N);

  TEST_CASE("commutation rule") {
    CHECK(a * b == AhatElement::monomial(1, 1, 1, N));
    CHECK(b * a == AhatElement::monomial(1, 1, 1, N) - AhatElement::monomial(1, 0, 2, N));
    CHECK(a * b - b * a == b * b);
  }

  TEST_CASE("a S(b) = S(b) a + b^2 S'(b)") {
    TruncSeries S = ser("0:1 2:1", N);
    AhatElement Sb = AhatElement::series_in_b(S, N);
    AhatElement lhs = a * Sb;
    CHECK(lhs == Sb * a + b * b * AhatElement::series_in_b(derive(S).extended(N), N));
    CHECK(lhs == a + AhatElement::monomial(1, 1, 2, N));
    CHECK(Sb * a == a + AhatElement::monomial(1, 1, 2, N) - AhatElement::monomial(2, 0, 3, N));
  }

  TEST_CASE("a^n b - b a^n = n b a^(n-1) b") {
    for (int n : {2, 3}) {
      AhatElement an = AhatElement::constant(1, N), an1 = AhatElement::constant(1, N);
      for (int i = 0; i < n; ++i) an = an * a;
      for (int i = 0; i < n - 1; ++i) an1 = an1 * a;
      AhatElement lhs = an * b - b * an;
      AhatElement rhs = Scalar(n) * (b * an1 * b);
      CHECK(lhs == rhs);
      for (const auto& f : {ser("0:1", 6), ser("0:1 1:2 3:-1", 6)})
        CHECK(act(lhs, f, Scalar(1, 3)) == act(rhs, f, Scalar(1, 3)));
    }
  }

  TEST_CASE("product agrees with the action on a rank-one module") {
    fresco::testing::Rng r(5);
    for (int t = 0; t < 20; ++t) {
      AhatElement x = random_element(r, 12), y = random_element(r, 12), z = random_element(r, 12);
      TruncSeries f = r.unit(12, 3);
      CHECK(act(x * y, f, Scalar(2, 7)) == act(x, act(y, f, Scalar(2, 7)), Scalar(2, 7)));
      CHECK((x * y) * z == x * (y * z));
      AhatElement c = x * y - y * x;
      for (const auto& [key, v] : c.terms()) CHECK(key.second >= 2);
    }
  }

  TEST_CASE("theta morphism") {
    ChangeOfVariable id = ChangeOfVariable::identity(N);
    AhatElement x = a * a * b + Scalar(3) * b * b;
    CHECK(theta_morphism(id, x) == x);

    ChangeOfVariable cv(ser("1:1 2:1", N));
    CHECK(theta_morphism(cv, b) == b + Scalar(2) * AhatElement::monomial(1, 1, 1, N) - Scalar(2) * b * b);
    AhatElement alpha = theta_morphism(cv, a), beta = theta_morphism(cv, b);
    CHECK(alpha * beta - beta * alpha == beta * beta);
  }

  TEST_CASE("theta morphism is multiplicative and respects composition") {
    fresco::testing::Rng r(9);
    ChangeOfVariable c1(ser("1:1 2:1/2", 10)), c2(ser("1:2 3:-1", 10));
    for (int t = 0; t < 10; ++t) {
      AhatElement x = random_element(r, 10), y = random_element(r, 10);
      CHECK(theta_morphism(c1, x * y) == theta_morphism(c1, x) * theta_morphism(c1, y));
      CHECK(theta_morphism(c2.after(c1), x) == theta_morphism(c1, theta_morphism(c2, x)));
    }
    CHECK(c1.after(c1.inverse()).theta == ser("1:1", 10));
    CHECK(c1.unimodular());
    CHECK(!c2.unimodular());
    CHECK(c2.chi() == 2);
  }

  TEST_CASE("eta anti-automorphism") {
    CHECK(eta_morphism(a) == a);
    CHECK(eta_morphism(b) == Scalar(-1) * b);
    CHECK(eta_morphism(a * b) == Scalar(-1) * AhatElement::monomial(1, 1, 1, N) + b * b);
    fresco::testing::Rng r(3);
    for (int t = 0; t < 10; ++t) {
      AhatElement x = random_element(r, N), y = random_element(r, N);
      CHECK(eta_morphism(eta_morphism(x)) == x);
      CHECK(eta_morphism(x * y) == eta_morphism(y) * eta_morphism(x));
    }
  }

  TEST_CASE("reduction modulo a monic annihilator") {
    MonicAnnihilator P{{ser("2:1", N), ser("1:3", N)}};
    CHECK(reduce_mod_annihilator(a, P, N) == a);
    AhatElement v = reduce_mod_annihilator(a * a, P, N);
    CHECK(v == Scalar(3) * AhatElement::monomial(1, 1, 1, N) - Scalar(2) * b * b);
    CHECK(v == AhatElement::series_in_b(ser("1:3", N), N) * a + AhatElement::series_in_b(ser("2:1", N), N));
    CHECK_THROWS_AS(reduce_mod_annihilator(a, MonicAnnihilator{{ser("1:1", N), ser("0:1", N)}}, N), BadAnnihilatorShape);
  }

  TEST_CASE("reduction acts like the original on a realized generator") {
    FrescoPresentation p = make_presentation({Scalar(5, 2), Scalar(7, 2)}, {ser("0:1 1:1", 10)}, 10);
    AbModule m = realize(p, 10);
    SVec e = standard_generator(m);
    MonicAnnihilator P = annihilator(m, e);
    AhatElement u = a * a * a + Scalar(2) * b * a * a * b;
    AhatElement v = reduce_mod_annihilator(u, P, 10);
    CHECK(v.a_degree() < 2);
    CHECK(truncated(apply(m, v, e), 6) == truncated(apply(m, u, e), 6));
  }

  TEST_CASE("debug rendering") {
    CHECK(to_string(a * b - Scalar(1, 2) * b) == "-1/2·b + a·b");
  }
}
