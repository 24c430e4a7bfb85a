#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "qknot/jones.hpp"
#include "qknot/knot.hpp"
#include "qknot/takata.hpp"

using namespace qknot;
using oracle::poly;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_knot_spec(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing knot specs") {
  CHECK(parse_knot_spec("K(-2,1)") == KnotSpec{DoubleTwist{-2, 1}});
  CHECK(parse_knot_spec("  K ( 3 , -4 ) ") == KnotSpec{DoubleTwist{3, -4}});
  CHECK(parse_knot_spec("b(7,5)") == KnotSpec{TwoBridge{7, 5}});
  CHECK(parse_knot_spec("T(2,5)") == KnotSpec{Torus2{2}});
  CHECK(parse_knot_spec("T(2,3)") == KnotSpec{Torus2{1}});
}

TEST_CASE("render is the inverse of parsing") {
  for (const char* s : {"K(-2,1)", "K(1,1)", "b(7,5)", "b(3,1)", "T(2,5)", "T(2,9)"})
    CHECK(render(parse_knot_spec(s)) == s);
}

TEST_CASE("syntax errors carry a position") {
  CHECK(parse_error("K(1,x)") == "knot spec parse error at position 4: expected an integer, found 'x'");
  CHECK(parse_error("K(1 x") == "knot spec parse error at position 4: expected ',', found 'x'");
  CHECK(parse_error("Q(1,1)") == "knot spec parse error at position 0: expected knot type 'K', 'b' or 'T', found 'Q'");
  CHECK(parse_error("K(1,1") == "knot spec parse error at position 5: expected ')', found end of input");
  CHECK(parse_error("K(1,1))") == "knot spec parse error at position 6: unexpected trailing input, found ')'");
  CHECK(parse_error("") == "knot spec parse error at position 0: expected knot type 'K', 'b' or 'T', found end of input");
  CHECK_THROWS_AS(parse_knot_spec("K(99999999999,1)"), std::invalid_argument);
}

TEST_CASE("bad parameters are domain errors") {
  CHECK_THROWS_AS(parse_knot_spec("K(0,1)"), std::domain_error);
  CHECK_THROWS_AS(parse_knot_spec("b(9,3)"), std::domain_error);
  CHECK_THROWS_AS(parse_knot_spec("b(4,1)"), std::domain_error);
  CHECK_THROWS_AS(parse_knot_spec("T(3,5)"), std::domain_error);
  CHECK_THROWS_AS(parse_knot_spec("T(2,4)"), std::domain_error);
  CHECK_THROWS_AS(parse_knot_spec("T(2,1)"), std::domain_error);
  CHECK_THROWS_AS(validate(KnotSpec{Torus2{0}}), std::domain_error);
}

TEST_CASE("formula names") {
  for (auto f : {Formula::Auto, Formula::Cyclotomic, Formula::Theorem, Formula::Takata})
    CHECK(parse_formula(formula_name(f)) == f);
  CHECK_THROWS_AS(parse_formula("Auto"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("magic"), std::invalid_argument);
}

TEST_CASE("routing by sign pattern") {
  const int N = 3;
  CHECK(jones_any({1, 2}, N, Formula::Auto) == jones_cyclotomic_pp(1, 2, N));
  CHECK(jones_any({-1, -2}, N, Formula::Auto) == jones_thm1(1, 2, N));
  CHECK(jones_any({-1, -2}, N, Formula::Takata) == jones_thm1(1, 2, N));
  CHECK(jones_any({2, -1}, N, Formula::Auto) == jones_cyclotomic_pm(2, 1, N));
  CHECK(jones_any({-1, 2}, N, Formula::Auto) == jones_thm2(1, 2, N));
  CHECK(jones_any({-2, 1}, N, Formula::Auto) == jones_thm2(2, 1, N));
  CHECK(jones_any({-2, 1}, N, Formula::Cyclotomic) == jones_cyclotomic_pm(1, 2, N));
  CHECK(jones_any({1, -2}, N, Formula::Theorem) == jones_thm2(2, 1, N));
  CHECK(jones_any({1, -2}, N, Formula::Takata) == jones_thm2(2, 1, N));
}

TEST_CASE("every available formula agrees") {
  for (int m = -2; m <= 2; ++m)
    for (int p = -2; p <= 2; ++p) {
      if (m == 0 || p == 0) continue;
      for (int N = 1; N <= 3; ++N) {
        const auto reference = jones_any({m, p}, N, Formula::Auto);
        CHECK(jones_any({p, m}, N, Formula::Auto) == reference);
        for (auto f : {Formula::Cyclotomic, Formula::Theorem, Formula::Takata}) {
          const bool available = (m > 0 && p > 0) ? f == Formula::Cyclotomic
                                 : (m < 0 && p < 0) ? f != Formula::Cyclotomic
                                                    : true;
          if (available)
            CHECK(jones_any({m, p}, N, f) == reference);
          else
            CHECK_THROWS_AS(jones_any({m, p}, N, f), std::invalid_argument);
        }
      }
    }
}

TEST_CASE("knots outside the double twist family") {
  CHECK(jones_knot(TwoBridge{3, 1}, 2, Formula::Auto) == poly({{1, 1}, {3, 1}, {4, -1}}));
  CHECK(jones_knot(TwoBridge{7, 5}, 2, Formula::Takata) == jones_cyclotomic_pp(2, 1, 2));
  CHECK(jones_knot(Torus2{1}, 2, Formula::Auto) == poly({{-4, -1}, {-3, 1}, {-1, 1}}));
  CHECK(jones_knot(Torus2{2}, 3, Formula::Auto) == oracle::torus_2k(5, 3));
  CHECK_THROWS_AS(jones_knot(TwoBridge{3, 1}, 2, Formula::Theorem), std::invalid_argument);
  CHECK_THROWS_AS(jones_knot(Torus2{1}, 2, Formula::Cyclotomic), std::invalid_argument);
  CHECK_THROWS_AS(jones_knot(DoubleTwist{1, 1}, 0, Formula::Auto), std::invalid_argument);
  CHECK_THROWS_AS(jones_knot(DoubleTwist{0, 1}, 2, Formula::Auto), std::domain_error);
}
