#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "qknot/laurent.hpp"

namespace qknot {

/// s * q^e with s = +1 or -1.
struct MonomialUnit {
  int sign = 1;
  Exponent exponent = 0;

  MonomialUnit() = default;
  MonomialUnit(int s, Exponent e);

  LaurentPolynomial to_polynomial() const;
  /// x^-1 = s * q^-e
  MonomialUnit inverse() const { return {sign, -exponent}; }
  /// -x * q^shift, the argument of (-xq)_n style products.
  MonomialUnit negated_shifted(Exponent shift) const {
    return {-sign, exponent + shift};
  }

  friend bool operator==(const MonomialUnit&, const MonomialUnit&) = default;
};

/// (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k). Throws on n < 0.
LaurentPolynomial pochhammer(const MonomialUnit& a, std::int64_t n);

/// n(n+1)/2. Throws on n < 0.
std::int64_t triangle(std::int64_t n);

/**
 * Memo table for Gaussian binomials [n, k]_q, filled through the Pascal
 * recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
 *
 * Readers share a lock; each key is inserted at most once. When an entry
 * cap is set (QKNOT_MEMO_LIMIT), values past the cap are still computed
 * but not retained.
 */
class QBinomialTable {
 public:
  using Value = std::shared_ptr<const LaurentPolynomial>;

  explicit QBinomialTable(std::optional<std::size_t> entry_limit = std::nullopt);

  /// Zero when k < 0, k > n or n < 0.
  Value get(std::int64_t n, std::int64_t k);

  std::size_t size() const;
  std::optional<std::size_t> entry_limit() const { return limit_; }

  /// Process-wide table; its cap is read from QKNOT_MEMO_LIMIT on first use.
  static QBinomialTable& shared();

 private:
  Value lookup(std::int64_t n, std::int64_t k) const;
  Value compute(std::int64_t n, std::int64_t k);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, Value> table_;
  std::optional<std::size_t> limit_;
  Value zero_;
  Value one_;
};

/// [n, k]_q from the shared table.
LaurentPolynomial qbinomial(std::int64_t n, std::int64_t k);

/// Parses a QKNOT_MEMO_LIMIT value; empty/absent means unbounded.
std::optional<std::size_t> parse_memo_limit(const char* text);

}  // namespace qknot
