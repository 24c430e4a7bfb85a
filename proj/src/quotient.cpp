#include "qknot/quotient.hpp"

#include <ostream>
#include <stdexcept>

namespace qknot {

namespace {

std::size_t fold(Exponent e, Exponent modulus) {
  Exponent r = e % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::size_t>(r);
}

}  // namespace

QuotientElement::QuotientElement(Exponent modulus) {
  if (modulus <= 0)
    throw std::invalid_argument("QuotientElement: modulus must be positive");
  coeffs_.assign(static_cast<std::size_t>(modulus), Integer(0));
}

QuotientElement::QuotientElement(Exponent modulus, std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (modulus <= 0 || static_cast<Exponent>(coeffs_.size()) != modulus)
    throw std::invalid_argument(
        "QuotientElement: need exactly N coefficients for modulus N");
}

const Integer& QuotientElement::operator[](Exponent e) const {
  return coeffs_[fold(e, modulus())];
}

bool QuotientElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void QuotientElement::check_same_modulus(const QuotientElement& other) const {
  if (other.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("QuotientElement: modulus mismatch");
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QuotientElement& QuotientElement::operator*=(const QuotientElement& other) {
  check_same_modulus(other);
  const std::size_t n = coeffs_.size();
  std::vector<Integer> out(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      mpz_addmul(out[(i + j) % n].get_mpz_t(), coeffs_[i].get_mpz_t(),
                 other.coeffs_[j].get_mpz_t());
  }
  coeffs_ = std::move(out);
  return *this;
}

void QuotientElement::add_shifted(const LaurentPolynomial& p, int sign,
                                  Exponent shift) {
  if (p.is_zero() || sign == 0) return;
  const Exponent n = modulus();
  std::size_t slot = fold(p.offset_ + shift, n);
  for (const auto& c : p.coeffs_) {
    if (sign > 0)
      coeffs_[slot] += c;
    else
      coeffs_[slot] -= c;
    if (++slot == coeffs_.size()) slot = 0;
  }
}

QuotientElement QuotientElement::reversed() const {
  const Exponent n = modulus();
  QuotientElement out(n);
  for (Exponent e = 0; e < n; ++e)
    out.coeffs_[fold(-e, n)] = coeffs_[static_cast<std::size_t>(e)];
  return out;
}

LaurentPolynomial QuotientElement::to_laurent() const {
  std::vector<std::pair<Exponent, Integer>> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) terms.emplace_back(static_cast<Exponent>(i), coeffs_[i]);
  return LaurentPolynomial::from_terms(terms);
}

std::string QuotientElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const QuotientElement& x) {
  return os << x.to_string();
}

}  // namespace qknot
