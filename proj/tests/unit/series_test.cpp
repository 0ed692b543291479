#include "doctest.h"
#include "support.hpp"

using namespace fresco;
using fresco::testing::ser;

TEST_SUITE("series") {
  TEST_CASE("rationals stay in lowest terms") {
    Scalar x = parse_scalar("6/4");
    CHECK(to_string(x) == "3/2");
    CHECK(to_string(parse_scalar("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
    CHECK(ceil_of(Scalar(7, 2)) == 4);
    CHECK(ceil_of(Scalar(-7, 2)) == -3);
  }

  TEST_CASE("add") {
    CHECK(ser("0:1 1:1", 3) + ser("0:1 1:-1", 3) == ser("0:2", 3));
    CHECK(TruncSeries(4) + ser("0:1 3:5", 4) == ser("0:1 3:5", 4));
    CHECK(ser("0:1 1:2", 2) + ser("2:3", 2) == ser("0:1 1:2 2:3", 2));
    CHECK((ser("0:1", 5) + ser("0:1", 2)).order() == 2);
  }

  TEST_CASE("mul") {
    CHECK(ser("0:1 1:1", 2) * ser("0:1 1:-1", 2) == ser("0:1 2:-1", 2));
    CHECK(ser("0:2 1:3 4:1", 5) * TruncSeries::one(5) == ser("0:2 1:3 4:1", 5));
    CHECK(ser("0:1 1:1", 1) * ser("0:1 1:1", 1) == ser("0:1 1:2", 1));
  }

  TEST_CASE("invert") {
    CHECK(invert(ser("0:1 1:1", 2)) == ser("0:1 1:-1 2:1", 2));
    CHECK(invert(ser("0:4", 3)) == ser("0:1/4", 3));
    CHECK_THROWS_AS(invert(ser("1:1", 3)), NotAUnit);
  }

  TEST_CASE("derive") {
    CHECK(derive(ser("0:1 1:3 2:1", 2)) == ser("0:3 1:2", 1));
    CHECK(derive(ser("0:5", 3)).is_zero());
    CHECK(derive(ser("4:1", 6)) == ser("3:4", 5));
    CHECK(derive(ser("0:7", 0)) == TruncSeries(0));
  }

  TEST_CASE("solve_euler") {
    CHECK(solve_euler(2, ser("1:1", 4)) == ser("1:-1", 4));
    try {
      solve_euler(1, ser("1:1", 4));
      FAIL("expected an obstruction");
    } catch (const Obstruction& e) {
      CHECK(e.m == 1);
      CHECK(e.r == 1);
    }
    TruncSeries R = ser("0:1 1:1", 1);
    TruncSeries Y = solve_euler(Scalar(5, 2), R);
    CHECK(Y == ser("0:-2/5 1:-2/3", 1));
    // substitute back: b Y' - m Y
    TruncSeries back(1);
    for (int i = 0; i <= 1; ++i) back[i] = (i - Scalar(5, 2)) * Y[i];
    CHECK(back == R);
  }

  TEST_CASE("solve_euler fixes the resonant coefficient to zero") {
    TruncSeries Y = solve_euler(3, ser("0:1 2:4 4:1", 6));
    CHECK(Y[3] == 0);
    for (int i = 0; i <= 6; ++i) CHECK((i - 3) * Y[i] == ser("0:1 2:4 4:1", 6)[i]);
  }

  TEST_CASE("ring axioms and Leibniz rule on random series") {
    fresco::testing::Rng r(11);
    for (int t = 0; t < 30; ++t) {
      int N = r.uniform(0, 7);
      TruncSeries x = r.unit(N, N), y = r.unit(N, N), z = r.unit(N, N);
      x[0] = r.small_rational();
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(y * invert(y) == TruncSeries::one(N));
      CHECK(invert(y) * y == TruncSeries::one(N));
      if (N >= 1) CHECK(derive(x * y) == derive(x) * y.truncated(N - 1) + x.truncated(N - 1) * derive(y));
    }
  }

  TEST_CASE("composition and reversion") {
    TruncSeries y = ser("1:1 2:1/2 3:-1", 6);
    TruncSeries inv = reversion(y);
    CHECK(compose(y, inv) == ser("1:1", 6));
    CHECK(compose(inv, y) == ser("1:1", 6));
    CHECK(rescale_var(ser("0:1 1:1 2:1", 2), 2) == ser("0:1 1:2 2:4", 2));
  }

  TEST_CASE("shifts and valuation") {
    CHECK(shift_up(ser("0:1 1:2", 3), 2) == ser("2:1 3:2", 3));
    CHECK(shift_down(ser("2:1 3:2", 3), 2) == ser("0:1 1:2", 1));
    CHECK(ser("3:1", 5).valuation() == 3);
    CHECK(TruncSeries(4).valuation() == 5);
    CHECK(ser("0:1 2:3", 2).extended(4) == ser("0:1 2:3", 4));
  }

  TEST_CASE("sparse text round trip") {
    TruncSeries s = ser("0:1 2:-3/2 5:7", 6);
    CHECK(format_sparse(s) == "0:1 2:-3/2 5:7");
    CHECK(parse_sparse(format_sparse(s), 6) == s);
    CHECK(format_pretty(s) == "1 - 3/2*b^2 + 7*b^5");
    CHECK_THROWS_AS(parse_sparse("1:2 1:3", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_sparse("7:1", 3), std::invalid_argument);
  }
}
