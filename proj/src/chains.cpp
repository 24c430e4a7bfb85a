#include "qknot/chains.hpp"

namespace qknot {

void for_each_chain(int k, int bound,
                    const std::function<void(std::span<const int>)>& visit) {
  if (k < 1) throw std::invalid_argument("for_each_chain: k must be positive");
  if (bound < 0) return;
  std::vector<int> chain(static_cast<std::size_t>(k), 0);
  auto fill = [&](auto&& self, int idx, int upper) -> void {
    for (int v = 0; v <= upper; ++v) {
      chain[static_cast<std::size_t>(idx)] = v;
      if (idx == 0)
        visit(std::span<const int>(chain));
      else
        self(self, idx - 1, v);
    }
  };
  fill(fill, k - 1, bound);
}

std::vector<ChainVector> enumerate_chains(int k, int bound) {
  std::vector<ChainVector> out;
  for_each_chain(k, bound, [&](std::span<const int> c) {
    out.push_back({std::vector<int>(c.begin(), c.end()), bound});
  });
  return out;
}

}  // namespace qknot
