#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qknot/laurent.hpp"

namespace qknot {

/**
 * Element of Z[q]/(q^N - 1), stored as its N coefficients.
 *
 * Two Laurent polynomials agree at every Nth root of unity exactly when
 * their images here are equal, which is how all root-of-unity identities
 * are checked.
 */
class QuotientElement {
 public:
  /// Zero element of Z[q]/(q^N - 1).
  explicit QuotientElement(Exponent modulus);
  QuotientElement(Exponent modulus, std::vector<Integer> coeffs);

  Exponent modulus() const { return static_cast<Exponent>(coeffs_.size()); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](Exponent e) const;
  bool is_zero() const;

  QuotientElement& operator+=(const QuotientElement& other);
  QuotientElement& operator-=(const QuotientElement& other);
  QuotientElement& operator*=(const QuotientElement& other);

  /// this += sign * q^shift * p, folding exponents mod N.
  void add_shifted(const LaurentPolynomial& p, int sign, Exponent shift);

  /// Image of q -> q^-1: coefficient e moves to (N - e) mod N.
  QuotientElement reversed() const;

  /// Lift to the representative of degree < N.
  LaurentPolynomial to_laurent() const;

  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) {
    a += b;
    return a;
  }
  friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) {
    a -= b;
    return a;
  }
  friend QuotientElement operator*(QuotientElement a, const QuotientElement& b) {
    a *= b;
    return a;
  }
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Dense list form, e.g. "[2,-1]".
  std::string to_string() const;

 private:
  void check_same_modulus(const QuotientElement& other) const;

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QuotientElement& x);

}  // namespace qknot
