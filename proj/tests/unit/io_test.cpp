#include "doctest.h"
#include "support.hpp"

using namespace fresco;
using fresco::testing::q;
using fresco::testing::ser;

TEST_SUITE("io") {
  TEST_CASE("presentation text") {
    FrescoPresentation p = parse_presentation(
        "# rank three\n"
        "rank 3 order 8\n"
        "\n"
        "lambdas 7/2 9/2 13/2   # p1 = 2, p2 = 3\n"
        "S 2 0:1 1:2\n"
        "S 1 0:1 1:1 3:-1/4\n");
    CHECK(p.order == 8);
    CHECK(p.lambdas == std::vector<Scalar>{q(7, 2), q(9, 2), q(13, 2)});
    CHECK(p.S[0] == ser("0:1 1:1 3:-1/4", 8));
    CHECK(p.S[1] == ser("0:1 1:2", 8));
    CHECK(p.S[2] == TruncSeries::one(8));
  }

  TEST_CASE("format and parse round trip") {
    fresco::testing::Rng r(71);
    for (int t = 0; t < 10; ++t) {
      FrescoPresentation p = t % 2 ? fresco::testing::random_mixed(r, 1 + t % 4) : fresco::testing::random_primitive(r, 1 + t % 4);
      CHECK(parse_presentation(format_presentation(p)) == p);
    }
  }

  TEST_CASE("presentation errors carry the line") {
    auto line_of = [](const std::string& text) {
      try {
        parse_presentation(text);
      } catch (const ParseError& e) {
        return e.line;
      }
      return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("rank 2 order 4\n") == 1);
    CHECK(line_of("rank two order 4\nlambdas 1 2\n") == 1);
    CHECK(line_of("rank 2 order 4 extra\nlambdas 1 2\n") == 1);
    CHECK(line_of("rank 2 order 4\nlambdas 7/2\n") == 2);
    CHECK(line_of("rank 2 order 4\nlambdas 7/2 x\n") == 2);
    CHECK(line_of("rank 2 order 4\n\nlambdas 7/2 9/2\nS 3 0:1\n") == 4);
    CHECK(line_of("rank 2 order 4\nlambdas 7/2 9/2\nS 1 0:1\nS 1 0:1 1:1\n") == 4);
    CHECK(line_of("rank 2 order 4\nlambdas 7/2 9/2\nS 1 0:2\n") == 3);
    CHECK(line_of("rank 2 order 4\nlambdas 7/2 9/2\nT 1 0:1\n") == 3);
    CHECK(line_of("rank 2 order 4\nlambdas 7/2 9/2\nS 1 0:1 1:\n") == 3);
    CHECK(line_of("rank 2 order 4\nlambdas 1/2 1/3\n") == 2);
    CHECK_THROWS_AS(read_presentation("/nonexistent/p.txt"), ParseError);
  }

  TEST_CASE("theta text") {
    ChangeOfVariable cv = parse_theta("# a + a^2 / 2\ntheta 1:1 2:1/2\n");
    CHECK(cv.theta == TruncSeries(2, {0, 1, q(1, 2)}));
    CHECK(format_theta(cv) == "theta 1:1 2:1/2");
    CHECK(parse_theta(format_theta(ChangeOfVariable(ser("1:-3 4:2", 4)))).theta == ser("1:-3 4:2", 4));
    CHECK(parse_theta("theta 1:2").theta.order() == 1);
    CHECK_THROWS_AS(parse_theta("theta 0:1 1:1"), ParseError);
    CHECK_THROWS_AS(parse_theta("theta 2:1"), ParseError);
    CHECK_THROWS_AS(parse_theta("theta 1:1\ntheta 1:2"), ParseError);
    CHECK_THROWS_AS(parse_theta("theta 1"), ParseError);
    CHECK_THROWS_AS(parse_theta(""), ParseError);
    CHECK_THROWS_AS(read_theta("/nonexistent/t.txt"), ParseError);
  }
}
