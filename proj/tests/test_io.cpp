#include <doctest.h>

#include "oracles.hpp"
#include "qknot/io.hpp"

using namespace qknot;
using oracle::poly;

TEST_CASE("polynomial JSON") {
  const auto p = poly({{-4, -1}, {-3, 1}, {-1, 1}});
  const auto j = to_json(p);
  CHECK(j.dump() == R"([[-4,"-1"],[-3,"1"],[-1,"1"]])");
  CHECK(laurent_from_json(j) == p);
  CHECK(to_json(LaurentPolynomial()).dump() == "[]");
}

TEST_CASE("large coefficients survive JSON") {
  LaurentPolynomial p = poly({{0, 1}, {1, 1}});
  LaurentPolynomial acc = 1;
  for (int i = 0; i < 100; ++i) acc *= p;
  CHECK(laurent_from_json(nlohmann::json::parse(to_json(acc).dump())) == acc);
}

TEST_CASE("quotient JSON") {
  const QuotientElement x(3, {Integer(2), Integer(-1), Integer(0)});
  const auto j = to_json(x);
  CHECK(j.dump() == R"({"N":3,"coeffs":["2","-1","0"]})");
  CHECK(quotient_from_json(j) == x);
}

TEST_CASE("malformed JSON input") {
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse("[[1,2]]")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"([["a","2"]])")), std::invalid_argument);
  CHECK_THROWS_AS(laurent_from_json(nlohmann::json::parse(R"([[1,"2x"]])")), std::invalid_argument);
  CHECK_THROWS_AS(quotient_from_json(nlohmann::json::parse(R"({"N":2})")), std::invalid_argument);
  CHECK_THROWS_AS(quotient_from_json(nlohmann::json::parse(R"({"N":2,"coeffs":["1"]})")),
                  std::invalid_argument);
}

TEST_CASE("CSV") {
  CHECK(to_csv(poly({{-1, 3}, {2, -5}})) == "exponent,coefficient\n-1,3\n2,-5\n");
  CHECK(to_csv(QuotientElement(2, {Integer(2), Integer(-1)})) == "exponent,coefficient\n0,2\n1,-1\n");
  CHECK(to_csv(LaurentPolynomial()) == "exponent,coefficient\n");
}
