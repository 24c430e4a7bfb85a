#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qknot/laurent.hpp"
#include "qknot/qcomb.hpp"

namespace qknot {

/// Weakly increasing tuple 0 <= n_1 <= ... <= n_k <= bound, stored 0-based.
struct ChainVector {
  std::vector<int> entries;
  int bound = 0;

  std::size_t length() const { return entries.size(); }
  /// 1-based access with n_s = 0 for s <= 0.
  int at(int s) const { return s <= 0 ? 0 : entries[static_cast<std::size_t>(s - 1)]; }
};

/// Calls visit(chain) for every weakly increasing k-tuple bounded by bound,
/// in lexicographic order of (n_k, n_{k-1}, ..., n_1).
void for_each_chain(int k, int bound,
                    const std::function<void(std::span<const int>)>& visit);

/// Materialized list; the count is C(bound + k, k).
std::vector<ChainVector> enumerate_chains(int k, int bound);

/**
 * Depth-first walk over chains of length k whose top n_k lies in
 * [top_lo, top_hi]. The running product
 *     seed(n_k) * prod_{i=1}^{k-1} [n_{i+1}, n_i]_q
 * is kept per depth so shared prefixes are multiplied once. visit receives
 * the 0-based chain and the finished product.
 *
 * Branches whose running product is already zero are pruned.
 */
template <class Seed, class Visit>
void visit_binomial_chains(int k, int top_lo, int top_hi, Seed&& seed,
                           Visit&& visit) {
  if (k < 1) throw std::invalid_argument("chain length must be positive");
  if (top_lo < 0) top_lo = 0;
  std::vector<int> chain(static_cast<std::size_t>(k), 0);
  std::vector<LaurentPolynomial> prefix(static_cast<std::size_t>(k));
  auto& table = QBinomialTable::shared();

  // Fill position idx (0-based) given position idx+1 already set.
  auto descend = [&](auto&& self, int idx) -> void {
    const auto up = static_cast<std::size_t>(idx + 1);
    const int upper = chain[up];
    for (int v = 0; v <= upper; ++v) {
      chain[static_cast<std::size_t>(idx)] = v;
      auto& cur = prefix[static_cast<std::size_t>(idx)];
      cur = prefix[up] * *table.get(upper, v);
      if (cur.is_zero()) continue;
      if (idx == 0)
        visit(std::span<const int>(chain), std::as_const(cur));
      else
        self(self, idx - 1);
    }
  };

  for (int top = top_lo; top <= top_hi; ++top) {
    chain.back() = top;
    prefix.back() = seed(top);
    if (prefix.back().is_zero()) continue;
    if (k == 1)
      visit(std::span<const int>(chain), std::as_const(prefix.back()));
    else
      descend(descend, k - 2);
  }
}

}  // namespace qknot
