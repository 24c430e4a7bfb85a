#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "qknot/laurent.hpp"

namespace qknot {

/**
 * Monomial weight (-1)^{sum of n at sign positions} q^{exponent(n)} of a
 * chain, where exponent(n) is a quadratic form with integer coefficients
 * plus multiples of n(n+1)/2. Positions are 1-based.
 */
struct ChainForm {
  Exponent constant = 0;
  std::vector<Exponent> linear;                      // index 1..k
  std::vector<std::tuple<int, int, Exponent>> pairs;  // c * n_i * n_j
  std::vector<std::pair<int, Exponent>> triangles;    // c * n_i(n_i+1)/2
  std::vector<int> sign_positions;

  explicit ChainForm(int length) : linear(static_cast<std::size_t>(length + 1), 0) {}

  void add_pair(int i, int j, Exponent c);
  Exponent exponent(std::span<const int> chain) const;
  int sign(std::span<const int> chain) const;
};

/// sum over n = n_m >= ... >= n_1 >= 0 of prod_{i<m} q^{n_i^2+n_i} [n_{i+1}, n_i]
LaurentPolynomial cyclotomic_inner_positive(int length, int top);
/// sum over n = s_p >= ... >= s_1 >= 0 of prod_{j<p} q^{-s_j - s_{j+1}s_j} [s_{j+1}, s_j]
LaurentPolynomial cyclotomic_inner_negative(int length, int top);

/// J_N(K_(m,p)) for m, p > 0 from its cyclotomic expansion.
LaurentPolynomial jones_cyclotomic_pp(int m, int p, int N);
/// J_N(K_(m,-p)) for m, p > 0 from its cyclotomic expansion.
LaurentPolynomial jones_cyclotomic_pm(int m, int p, int N);
/// J_N(K_(-m,-p)) for m, p > 0: nested sum over chains of length 2mp-1.
LaurentPolynomial jones_thm1(int m, int p, int N);
/// J_N(K_(-m,p)) for m, p > 0: nested sum over chains of length 2mp.
LaurentPolynomial jones_thm2(int m, int p, int N);

enum class TwistSign { Positive, Negative };
/// Mirrors of the twist knots K_(1,p) (Positive) and K_(1,-p) (Negative),
/// written out in their m = 1 simplified form.
LaurentPolynomial jones_twist_m1(TwistSign sign, int p, int N);

enum class DisplayExample { Km2m2, Km3p1 };
/// The two worked examples K_(-2,-2) and K_(-3,1), transcribed term by term.
LaurentPolynomial jones_display_example(DisplayExample which, int N);

namespace detail {

/// The weight applied to chains in jones_thm1 / jones_thm2, without the
/// Pochhammer seed.
ChainForm thm1_form(int m, int p, int N);
ChainForm thm2_form(int m, int p, int N);

/// Partial sums restricted to chains with top entry in [top_lo, top_hi].
LaurentPolynomial jones_thm1_band(int m, int p, int N, int top_lo, int top_hi);
LaurentPolynomial jones_thm2_band(int m, int p, int N, int top_lo, int top_hi);
LaurentPolynomial jones_cyclotomic_pp_band(int m, int p, int N, int n_lo, int n_hi);
LaurentPolynomial jones_cyclotomic_pm_band(int m, int p, int N, int n_lo, int n_hi);

void require_positive(const char* what, std::initializer_list<int> values);

}  // namespace detail

}  // namespace qknot
