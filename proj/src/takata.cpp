#include "qknot/takata.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qknot/jones.hpp"
#include "qknot/qcomb.hpp"

namespace qknot {

namespace {

Exponent halve_exact(Exponent twice, const char* what) {
  if (twice % 2 != 0)
    throw std::logic_error(std::string(what) + " is not an integer");
  return twice / 2;
}

struct Coefficients {
  Exponent a = 0;
  Exponent b1 = 0;
  Exponent b2 = 0;
};

/// Everything in a(n), b1(n), b2(n) that depends only on (l,t), laid out
/// so that evaluating one chain is a handful of linear passes.
class TakataPlan {
 public:
  explicit TakataPlan(const SigmaTable& table) : table_(table) {
    const int pp = table.p_prime;
    const int h = (table.l - table.t) / 2;
    auto sik = [&](int k) { return table.sigma_of_i(k); };

    // S_j = sum_{k=r'(j)}^{p'} (sigma_{i_k} + sigma_{i_{p'+1-k}})
    std::vector<Exponent> tail(static_cast<std::size_t>(pp + 2), 0);
    for (int k = pp; k >= 1; --k)
      tail[static_cast<std::size_t>(k)] =
          tail[static_cast<std::size_t>(k + 1)] + sik(k) + sik(pp + 1 - k);
    a_delta_.assign(static_cast<std::size_t>(pp + 1), 0);
    for (int j = 1; j <= pp; ++j)
      a_delta_[static_cast<std::size_t>(j)] =
          -tail[static_cast<std::size_t>(table.r_prime[static_cast<std::size_t>(j)])];

    // Linear terms of 2a in n_j.
    a_linear_.assign(static_cast<std::size_t>(pp + 1), 0);
    for (int j = 1; j <= pp - 1; ++j)
      a_linear_[static_cast<std::size_t>(j)] -=
          table.sigma_at(j + 1) + table.sigma_at(pp + 1 - j);
    a_linear_[static_cast<std::size_t>(pp)] -= table.sigma_at(pp) + 1;
    for (int j = 1; j <= pp; ++j) a_constant_ -= 2 * table.sigma_at(j);

    // Linear terms of 2*b1 (without the -2a part); indices may be 0 (n_0 = 0).
    b1_linear_.assign(static_cast<std::size_t>(pp + 1), 0);
    auto add_b1 = [&](int idx, Exponent c) {
      if (idx >= 1) b1_linear_[static_cast<std::size_t>(idx)] += c;
    };
    for (int k = 1; k <= h && k <= pp; ++k) add_b1(table.i_at(k) - 1, 1 - sik(k));
    for (int k = h + 1; k <= pp; ++k) {
      add_b1(table.i_at(k) - 1, -2);
      add_b1(table.i_at(k), 1 + sik(k));
    }
    add_b1(pp, -2 * (1 + table.sigma_at(pp)));
    for (int j = 1; j <= pp - 1; ++j)
      add_b1(j, table.sigma_at(j + 1) - table.sigma_at(j));

    // -(1/2) sum_{k<k'} [i_k > i_k'] (sig_k - sig_k') D_{i_k} D_{i_k'}, doubled.
    for (int k = 1; k <= pp - 1; ++k)
      for (int kp = k + 1; kp <= pp; ++kp) {
        if (table.i_at(k) <= table.i_at(kp)) continue;
        const Exponent c = -(sik(k) - sik(kp));
        if (c != 0) b1_cross_.emplace_back(table.i_at(k), table.i_at(kp), c);
      }

    // 2*b2
    b2_linear_.assign(static_cast<std::size_t>(pp + 1), 0);
    auto add_b2 = [&](int idx, Exponent c) {
      if (idx >= 1) b2_linear_[static_cast<std::size_t>(idx)] += c;
    };
    if (table.l < 2 * table.t) {
      for (int k = h + 1; k <= (table.t - 1) / 2; ++k)
        add_b2(table.i_at(k) - 1, 1 + sik(k));
    } else if (table.l > 2 * table.t) {
      for (int k = (table.t + 1) / 2 + 1; k <= h; ++k)
        add_b2(table.i_at(k) - 1, -(1 + sik(k)));
    } else {
      throw std::invalid_argument("b2 undefined for l = 2t");
    }
  }

  Coefficients evaluate(std::span<const int> chain) const {
    const int pp = table_.p_prime;
    auto n = [&](int s) -> Exponent {
      return s <= 0 ? 0 : chain[static_cast<std::size_t>(s - 1)];
    };
    auto d = [&](int s) -> Exponent { return n(s) - n(s - 1); };

    Exponent two_a = a_constant_;
    for (int j = 1; j <= pp; ++j) {
      two_a += a_delta_[static_cast<std::size_t>(j)] * d(j);
      two_a += a_linear_[static_cast<std::size_t>(j)] * n(j);
    }
    const Exponent a = halve_exact(two_a, "a(n)");

    Exponent two_b1 = -2 * a;
    for (int j = 1; j <= pp; ++j)
      two_b1 += b1_linear_[static_cast<std::size_t>(j)] * n(j);
    for (const auto& [ik, ikp, c] : b1_cross_) two_b1 += c * d(ik) * d(ikp);
    // 2 * sum_j sigma_j (sum_{k=1}^{r'(j)} D_{i_k}) n_{j-1}
    std::vector<Exponent> prefix(static_cast<std::size_t>(pp + 1), 0);
    for (int k = 1; k <= pp; ++k)
      prefix[static_cast<std::size_t>(k)] =
          prefix[static_cast<std::size_t>(k - 1)] + d(table_.i_at(k));
    for (int j = 2; j <= pp; ++j)
      two_b1 += 2 * table_.sigma_at(j) *
                prefix[static_cast<std::size_t>(table_.r_prime[static_cast<std::size_t>(j)])] *
                n(j - 1);

    Exponent two_b2 = 0;
    for (int j = 1; j <= pp; ++j)
      two_b2 += b2_linear_[static_cast<std::size_t>(j)] * n(j);

    return {a, halve_exact(two_b1, "b1(n)"), halve_exact(two_b2, "b2(n)")};
  }

  /// Sign and q-exponent of the monomial part of X(n): (-1)^{n_p'} q^kappa
  /// times the tau(j) factors.
  std::pair<int, Exponent> x_monomial(std::span<const int> chain, int N) const {
    const int pp = table_.p_prime;
    auto n = [&](int s) -> Exponent {
      return s <= 0 ? 0 : chain[static_cast<std::size_t>(s - 1)];
    };
    Exponent parity = n(pp);
    Exponent e = table_.sigma_at(pp) == -1 ? -static_cast<Exponent>(N) * n(pp) : 0;
    for (int j = 1; j <= pp; ++j) {
      const Exponent dj = n(j) - n(j - 1);
      if (table_.sigma_at(j) == -1)
        parity += dj;
      else
        e += dj * (dj + 1) / 2;
    }
    return {parity % 2 == 0 ? 1 : -1, e};
  }

 private:
  const SigmaTable& table_;
  Exponent a_constant_ = 0;
  std::vector<Exponent> a_delta_;
  std::vector<Exponent> a_linear_;
  std::vector<Exponent> b1_linear_;
  std::vector<std::tuple<int, int, Exponent>> b1_cross_;
  std::vector<Exponent> b2_linear_;
};

void check_chain(const ChainVector& chain, const SigmaTable& table) {
  if (static_cast<int>(chain.length()) != table.p_prime)
    throw std::invalid_argument("chain length must equal p' = (l-1)/2");
}

/// (q)_{N-1} / (q)_{N-1-top} = (q^{N-top})_top
LaurentPolynomial falling_pochhammer(int N, int top) {
  return pochhammer(MonomialUnit(1, N - top), top);
}

}  // namespace

Exponent a_coeff(const ChainVector& chain, const SigmaTable& table) {
  check_chain(chain, table);
  return TakataPlan(table).evaluate(chain.entries).a;
}

std::pair<Exponent, Exponent> b_coeffs(const ChainVector& chain,
                                       const SigmaTable& table) {
  check_chain(chain, table);
  const auto c = TakataPlan(table).evaluate(chain.entries);
  return {c.b1, c.b2};
}

LaurentPolynomial x_factor(const ChainVector& chain, const SigmaTable& table,
                           int N) {
  check_chain(chain, table);
  if (N < 1) throw std::invalid_argument("x_factor: N must be positive");
  for (int v : chain.entries)
    if (v < 0 || v > N - 1)
      throw std::invalid_argument("x_factor: chain entries must lie in [0, N-1]");
  const TakataPlan plan(table);
  const auto [sign, e] = plan.x_monomial(chain.entries, N);
  LaurentPolynomial prod = falling_pochhammer(N, chain.entries.back());
  for (std::size_t j = 1; j < chain.entries.size(); ++j)
    prod *= qbinomial(chain.entries[j], chain.entries[j - 1]);
  LaurentPolynomial out;
  out.add_shifted(prod, sign, e);
  return out;
}

namespace detail {

LaurentPolynomial jones_takata_band(int l, int t, int N, int top_lo, int top_hi) {
  const SigmaTable table = build_sigma_table(TwoBridgeParams(l, t));
  const TakataPlan plan(table);
  PolynomialAccumulator acc;
  visit_binomial_chains(
      table.p_prime, top_lo, top_hi,
      [N](int top) { return falling_pochhammer(N, top); },
      [&](std::span<const int> chain, const LaurentPolynomial& prod) {
        const auto c = plan.evaluate(chain);
        const auto [sign, e] = plan.x_monomial(chain, N);
        acc.add_shifted(prod, sign, c.a * N + c.b1 + c.b2 + e);
      });
  return std::move(acc).finish();
}

}  // namespace detail

LaurentPolynomial jones_takata(int l, int t, int N) {
  const TwoBridgeParams params(l, t);
  if (N < 1) throw std::invalid_argument("jones_takata: N must be positive");
  return detail::jones_takata_band(params.l, params.t, N, 0, N - 1);
}

Exponent a_closed_form(const ChainVector& chain, int m, int p,
                       DoubleTwistFamily family) {
  Exponent alt = 0;
  for (int j = 1; j <= 2 * p - 1; ++j)
    alt += (j % 2 == 0 ? 1 : -1) * static_cast<Exponent>(chain.at(m * j));
  return family == DoubleTwistFamily::MinusMinus ? alt - 1 : -alt;
}

}  // namespace qknot
