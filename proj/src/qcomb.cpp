#include "qknot/qcomb.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

namespace qknot {

MonomialUnit::MonomialUnit(int s, Exponent e) : sign(s), exponent(e) {
  if (s != 1 && s != -1)
    throw std::invalid_argument("MonomialUnit: sign must be +1 or -1");
}

LaurentPolynomial MonomialUnit::to_polynomial() const {
  return LaurentPolynomial::monomial(sign, exponent);
}

LaurentPolynomial pochhammer(const MonomialUnit& a, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be nonnegative");
  LaurentPolynomial out = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    // 1 - s q^(e+k)
    LaurentPolynomial factor = 1;
    factor.add_shifted(1, -a.sign, a.exponent + k);
    out *= factor;
    if (out.is_zero()) break;
  }
  return out;
}

std::int64_t triangle(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("triangle: n must be nonnegative");
  return n * (n + 1) / 2;
}

QBinomialTable::QBinomialTable(std::optional<std::size_t> entry_limit)
    : limit_(entry_limit),
      zero_(std::make_shared<const LaurentPolynomial>()),
      one_(std::make_shared<const LaurentPolynomial>(1)) {}

QBinomialTable& QBinomialTable::shared() {
  static QBinomialTable table(parse_memo_limit(std::getenv("QKNOT_MEMO_LIMIT")));
  return table;
}

std::size_t QBinomialTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

QBinomialTable::Value QBinomialTable::lookup(std::int64_t n,
                                             std::int64_t k) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find({n, k});
  return it == table_.end() ? nullptr : it->second;
}

QBinomialTable::Value QBinomialTable::get(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (k == 0 || k == n) return one_;
  // [n,k] = [n,n-k]; store only the smaller lower index.
  if (2 * k > n) k = n - k;
  if (auto hit = lookup(n, k)) return hit;
  return compute(n, k);
}

QBinomialTable::Value QBinomialTable::compute(std::int64_t n, std::int64_t k) {
  // Fill the column of rows needed iteratively so deep rows do not recurse.
  std::int64_t row = n;
  while (row > k + 1 && !lookup(row - 1, std::min(k, row - 1 - k))) --row;
  Value result;
  for (std::int64_t r = row; r <= n; ++r) {
    const std::int64_t kk = std::min(k, r - k);
    if (kk <= 0) continue;
    if (auto hit = lookup(r, kk)) {
      result = hit;
      continue;
    }
    const auto left = get(r - 1, k - 1);
    const auto right = get(r - 1, k);
    LaurentPolynomial value = *left;
    value.add_shifted(*right, 1, k);
    auto made = std::make_shared<const LaurentPolynomial>(std::move(value));
    {
      std::unique_lock lock(mutex_);
      auto [it, inserted] = table_.try_emplace({r, kk}, nullptr);
      if (inserted) {
        if (limit_ && table_.size() > *limit_) {
          table_.erase(it);
        } else {
          it->second = made;
        }
      } else {
        made = it->second;
      }
    }
    result = made;
  }
  return result;
}

LaurentPolynomial qbinomial(std::int64_t n, std::int64_t k) {
  return *QBinomialTable::shared().get(n, k);
}

std::optional<std::size_t> parse_memo_limit(const char* text) {
  if (text == nullptr || *text == '\0') return std::nullopt;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("QKNOT_MEMO_LIMIT: not a count: ") +
                                text);
  }
  if (text[used] != '\0')
    throw std::invalid_argument(std::string("QKNOT_MEMO_LIMIT: not a count: ") +
                                text);
  return static_cast<std::size_t>(value);
}

}  // namespace qknot
