#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "qknot/laurent.hpp"
#include "qknot/quotient.hpp"

using namespace qknot;
using oracle::poly;

namespace {

LaurentPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), ex(-6, 6), co(-9, 9);
  std::map<long, long> t;
  for (int i = len(rng); i > 0; --i) t[ex(rng)] += co(rng);
  return poly(t);
}

}  // namespace

TEST_CASE("addition") {
  const auto p = poly({{-2, 3}, {1, -1}});
  CHECK(LaurentPolynomial() + p == p);
  CHECK(poly({{1, 1}, {0, -1}}) + poly({{0, 1}, {1, -1}}) == LaurentPolynomial());
  CHECK((poly({{1, 1}, {0, -1}}) + poly({{0, 1}, {1, -1}})).is_zero());
  CHECK(poly({{1, 1}, {3, 1}}) + poly({{4, -1}}) == poly({{1, 1}, {3, 1}, {4, -1}}));
  CHECK(p - p == LaurentPolynomial());
}

TEST_CASE("multiplication") {
  const auto p = poly({{-2, 3}, {1, -1}, {5, 7}});
  CHECK(LaurentPolynomial(1) * p == p);
  CHECK(poly({{0, 1}, {-1, -1}}) * poly({{0, 1}, {3, -1}}) ==
        poly({{0, 1}, {-1, -1}, {2, 1}, {3, -1}}));
  CHECK(poly({{-2, 1}}) * poly({{5, 1}}) == poly({{3, 1}}));
  CHECK((LaurentPolynomial() * p).is_zero());
}

TEST_CASE("coefficients do not overflow") {
  LaurentPolynomial p = poly({{0, 1}, {1, 1}});
  LaurentPolynomial acc = 1;
  for (int i = 0; i < 200; ++i) acc *= p;
  CHECK(acc.coefficient(100) == oracle::binomial(200, 100));
  CHECK(evaluate_at_one(acc) == mpz_class(1) << 200);
}

TEST_CASE("canonical form drops zeros") {
  CHECK(LaurentPolynomial::from_terms({{3, 0}}).is_zero());
  CHECK(LaurentPolynomial::from_terms({{3, 2}, {3, -2}}).is_zero());
  const auto p = poly({{-1, 1}, {0, 0}, {4, 2}});
  CHECK(p.term_count() == 2);
  CHECK(p.min_exponent() == -1);
  CHECK(p.max_exponent() == 4);
  CHECK(p.coefficient(2) == 0);
  CHECK(poly({{-1, 1}, {4, 2}}) == p);
}

TEST_CASE("string form is ascending") {
  CHECK(poly({{1, 1}, {3, 1}, {4, -1}}).to_string() == "q+q^3-q^4");
  CHECK(poly({{-1, 1}, {-3, 1}, {-4, -1}}).to_string() == "-q^-4+q^-3+q^-1");
  CHECK(poly({{0, 2}, {2, -3}}).to_string() == "2-3*q^2");
  CHECK(poly({{3, 2}}).to_string() == "2*q^3");
  CHECK(LaurentPolynomial().to_string() == "0");
  CHECK(LaurentPolynomial(1).to_string() == "1");
  std::ostringstream os;
  os << poly({{-2, 1}});
  CHECK(os.str() == "q^-2");
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(poly({{1, 1}, {3, 1}, {4, -1}}), -1) ==
        poly({{-1, 1}, {-3, 1}, {-4, -1}}));
  const auto p = poly({{-2, 3}, {1, -1}});
  CHECK(substitute_power(p, 1) == p);
  CHECK(substitute_power(poly({{0, 1}, {1, -1}}), 2) == poly({{0, 1}, {2, -1}}));
  CHECK_THROWS_AS(substitute_power(p, 0), std::invalid_argument);
}

TEST_CASE("reduce_mod_qN") {
  CHECK(reduce_mod_qN(poly({{5, 1}}), 4) == reduce_mod_qN(poly({{1, 1}}), 4));
  CHECK(reduce_mod_qN(poly({{5, 1}}), 4).coeffs()[1] == 1);
  CHECK(reduce_mod_qN(poly({{-1, 1}}), 4)[3] == 1);
  CHECK(reduce_mod_qN(poly({{4, 1}, {0, -1}}), 4).is_zero());
  CHECK_THROWS_AS(reduce_mod_qN(poly({{1, 1}}), 0), std::invalid_argument);
  CHECK_THROWS_AS(reduce_mod_qN(poly({{1, 1}}), -3), std::invalid_argument);
}

TEST_CASE("evaluate_at_one") {
  CHECK(evaluate_at_one(poly({{1, 1}, {3, 1}, {4, -1}})) == 1);
  CHECK(evaluate_at_one(LaurentPolynomial()) == 0);
  CHECK(evaluate_at_one(poly({{-2, 1}})) == 1);
}

TEST_CASE("truncation and shifting") {
  const auto p = poly({{-1, 1}, {2, 3}, {5, -1}});
  CHECK(p.truncated_above(2) == poly({{-1, 1}, {2, 3}}));
  CHECK(p.truncated_above(-5).is_zero());
  CHECK(p.shifted(3) == poly({{2, 1}, {5, 3}, {8, -1}}));
  LaurentPolynomial q;
  q.add_shifted(p, -1, 2);
  CHECK(q == -p.shifted(2));
}

TEST_CASE("accumulator matches repeated addition") {
  std::mt19937 rng(7);
  PolynomialAccumulator acc;
  LaurentPolynomial sum;
  std::uniform_int_distribution<int> shift(-10, 10);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(rng);
    const int s = shift(rng);
    const int sign = i % 3 == 0 ? -1 : 1;
    acc.add_shifted(p, sign, s);
    sum.add_shifted(p, sign, s);
  }
  CHECK(std::move(acc).finish() == sum);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("product agrees with schoolbook oracle") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    std::map<long, mpz_class> ma, mb;
    for (const auto& [e, c] : a.terms()) ma[e] = c;
    for (const auto& [e, c] : b.terms()) mb[e] = c;
    CHECK(a * b == oracle::from_map(oracle::mul(ma, mb)));
  }
}

TEST_CASE("mirror substitution is an involution") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng);
    CHECK(substitute_power(substitute_power(p, -1), -1) == p);
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    for (int N = 1; N <= 6; ++N) {
      CHECK(reduce_mod_qN(a * b, N) == reduce_mod_qN(a, N) * reduce_mod_qN(b, N));
      CHECK(reduce_mod_qN(a + b, N) == reduce_mod_qN(a, N) + reduce_mod_qN(b, N));
    }
  }
}

TEST_CASE("mirror then reduce is index reversal") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng);
    for (int N = 1; N <= 7; ++N)
      CHECK(reduce_mod_qN(substitute_power(p, -1), N) == reduce_mod_qN(p, N).reversed());
  }
}

TEST_CASE("quotient element basics") {
  QuotientElement z(3);
  CHECK(z.is_zero());
  CHECK(z.to_string() == "[0,0,0]");
  QuotientElement x(2, {Integer(2), Integer(-1)});
  CHECK(x.to_string() == "[2,-1]");
  CHECK(x.reversed() == x);
  QuotientElement y(3, {Integer(1), Integer(2), Integer(3)});
  CHECK(y.reversed().to_string() == "[1,3,2]");
  CHECK(y.to_laurent() == poly({{0, 1}, {1, 2}, {2, 3}}));
  CHECK_THROWS_AS(QuotientElement(3, {Integer(1)}), std::invalid_argument);
  QuotientElement w(4);
  w.add_shifted(poly({{0, 1}, {1, 1}}), -1, 7);
  CHECK(w.to_string() == "[-1,0,0,-1]");
}
