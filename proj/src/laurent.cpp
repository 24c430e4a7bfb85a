#include "qknot/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "qknot/quotient.hpp"

namespace qknot {

LaurentPolynomial::LaurentPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, Exponent e) {
  LaurentPolynomial p;
  if (c != 0) {
    p.offset_ = e;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(
    const std::vector<std::pair<Exponent, Integer>>& terms) {
  std::map<Exponent, Integer> merged;
  for (const auto& [e, c] : terms) merged[e] += c;
  std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
  LaurentPolynomial p;
  if (merged.empty()) return p;
  p.offset_ = merged.begin()->first;
  p.coeffs_.resize(
      static_cast<std::size_t>(merged.rbegin()->first - p.offset_ + 1));
  for (const auto& [e, c] : merged)
    p.coeffs_[static_cast<std::size_t>(e - p.offset_)] = c;
  return p;
}

Exponent LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw std::domain_error("min_exponent of zero polynomial");
  return offset_;
}

Exponent LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw std::domain_error("max_exponent of zero polynomial");
  return offset_ + static_cast<Exponent>(coeffs_.size()) - 1;
}

Integer LaurentPolynomial::coefficient(Exponent e) const {
  if (is_zero() || e < offset_ || e > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

std::vector<std::pair<Exponent, Integer>> LaurentPolynomial::terms() const {
  std::vector<std::pair<Exponent, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out.emplace_back(offset_ + static_cast<Exponent>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPolynomial::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto lead = first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
  offset_ += lead;
}

void LaurentPolynomial::add_shifted(const LaurentPolynomial& other, int sign,
                                    Exponent shift) {
  if (other.is_zero() || sign == 0) return;
  const Exponent lo = other.offset_ + shift;
  const Exponent hi = lo + static_cast<Exponent>(other.coeffs_.size()) - 1;
  if (is_zero()) {
    offset_ = lo;
    coeffs_.assign(other.coeffs_.size(), Integer(0));
  } else {
    const Exponent cur_hi = max_exponent();
    if (lo < offset_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo),
                     Integer(0));
      offset_ = lo;
    }
    if (hi > cur_hi)
      coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(hi - cur_hi));
  }
  auto base = static_cast<std::size_t>(lo - offset_);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    if (sign > 0)
      coeffs_[base + i] += other.coeffs_[i];
    else
      coeffs_[base + i] -= other.coeffs_[i];
  }
  trim();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  add_shifted(other, 1, 0);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  add_shifted(other, -1, 0);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.offset_ = a.offset_ + b.offset_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
  }
  out.trim();
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent shift) const {
  LaurentPolynomial out = *this;
  if (!out.is_zero()) out.offset_ += shift;
  return out;
}

LaurentPolynomial LaurentPolynomial::truncated_above(Exponent max_exp) const {
  if (is_zero() || max_exponent() <= max_exp) return *this;
  LaurentPolynomial out;
  if (offset_ > max_exp) return out;
  out.offset_ = offset_;
  out.coeffs_.assign(coeffs_.begin(),
                     coeffs_.begin() + (max_exp - offset_ + 1));
  out.trim();
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : terms()) {
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (negative)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (e == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += 'q';
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << p.to_string();
}

void PolynomialAccumulator::reserve_range(Exponent lo, Exponent hi) {
  if (coeffs_.empty()) {
    offset_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    return;
  }
  const Exponent cur_hi = offset_ + static_cast<Exponent>(coeffs_.size()) - 1;
  if (lo < offset_) {
    // Grow geometrically toward negative exponents as well.
    const Exponent grow = std::max<Exponent>(
        offset_ - lo, static_cast<Exponent>(coeffs_.size()));
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(grow), Integer(0));
    offset_ -= grow;
  }
  if (hi > cur_hi) coeffs_.resize(static_cast<std::size_t>(hi - offset_ + 1));
}

void PolynomialAccumulator::add_shifted(const LaurentPolynomial& p, int sign,
                                        Exponent shift) {
  if (p.is_zero() || sign == 0) return;
  const Exponent lo = p.offset_ + shift;
  reserve_range(lo, lo + static_cast<Exponent>(p.coeffs_.size()) - 1);
  auto base = static_cast<std::size_t>(lo - offset_);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (sign > 0)
      coeffs_[base + i] += p.coeffs_[i];
    else
      coeffs_[base + i] -= p.coeffs_[i];
  }
}

LaurentPolynomial PolynomialAccumulator::finish() && {
  LaurentPolynomial out;
  out.offset_ = offset_;
  out.coeffs_ = std::move(coeffs_);
  out.trim();
  return out;
}

LaurentPolynomial substitute_power(const LaurentPolynomial& p, Exponent k) {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
  std::vector<std::pair<Exponent, Integer>> terms;
  for (auto& [e, c] : p.terms()) terms.emplace_back(e * k, std::move(c));
  return LaurentPolynomial::from_terms(terms);
}

QuotientElement reduce_mod_qN(const LaurentPolynomial& p, Exponent modulus) {
  if (modulus <= 0) throw std::invalid_argument("reduce_mod_qN: N must be positive");
  QuotientElement out(modulus);
  out.add_shifted(p, 1, 0);
  return out;
}

Integer evaluate_at_one(const LaurentPolynomial& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

}  // namespace qknot
