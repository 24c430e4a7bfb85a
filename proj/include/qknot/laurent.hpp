#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qknot {

using Integer = mpz_class;
using Exponent = std::int64_t;

class QuotientElement;

/**
 * LaurentPolynomial: finitely supported Z-linear combination of powers of q.
 *
 * Stored densely as coeffs_[i] * q^(offset_ + i). Both ends of coeffs_ are
 * nonzero (or coeffs_ is empty for the zero polynomial), so two equal
 * polynomials always have identical storage and equality is structural.
 */
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  /// c * q^e
  static LaurentPolynomial monomial(const Integer& c, Exponent e);

  /// Builds from (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPolynomial from_terms(
      const std::vector<std::pair<Exponent, Integer>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  Integer coefficient(Exponent e) const;

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<Exponent, Integer>> terms() const;
  std::size_t term_count() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  /// this += sign * q^shift * other, without materializing the shifted copy.
  void add_shifted(const LaurentPolynomial& other, int sign, Exponent shift);

  /// Multiplies by q^shift.
  LaurentPolynomial shifted(Exponent shift) const;

  /// Drops every term with exponent > max_exponent.
  LaurentPolynomial truncated_above(Exponent max_exponent) const;

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }

  /// Canonical text form, ascending exponents: "-q^-4+q^-3+q^-1", "2-3*q^2".
  std::string to_string() const;

 private:
  friend class PolynomialAccumulator;
  friend class QuotientElement;

  void trim();

  Exponent offset_ = 0;
  std::vector<Integer> coeffs_;
};

/**
 * Growable dense buffer for summing many shifted, signed polynomials.
 * Cheaper than repeated LaurentPolynomial::add_shifted because it never
 * trims until finish().
 */
class PolynomialAccumulator {
 public:
  void add_shifted(const LaurentPolynomial& p, int sign, Exponent shift);
  void add(const LaurentPolynomial& p) { add_shifted(p, 1, 0); }
  LaurentPolynomial finish() &&;

 private:
  void reserve_range(Exponent lo, Exponent hi);

  Exponent offset_ = 0;
  std::vector<Integer> coeffs_;
};

/// Substitutes q -> q^k (k = -1 is the mirror substitution).
LaurentPolynomial substitute_power(const LaurentPolynomial& p, Exponent k);

/// Image in Z[q]/(q^N - 1); negative exponents wrap into [0, N).
QuotientElement reduce_mod_qN(const LaurentPolynomial& p, Exponent modulus);

/// p(1), the sum of all coefficients.
Integer evaluate_at_one(const LaurentPolynomial& p);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace qknot
