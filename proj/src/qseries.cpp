#include "qknot/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qknot/chains.hpp"
#include "qknot/jones.hpp"
#include "qknot/sign_tables.hpp"

namespace qknot {

namespace {

Exponent tri(Exponent n) { return n * (n + 1) / 2; }

bool is_minus_one(const MonomialUnit& x) { return x.sign == -1 && x.exponent == 0; }

void require_minus_one(const char* what, const MonomialUnit& x) {
  if (!is_minus_one(x))
    throw std::invalid_argument(std::string(what) +
                                ": root-of-unity evaluation is only defined at x = -1");
}

/// (-xq)_n (-x^{-1}q)_n
LaurentPolynomial pair_pochhammer(const MonomialUnit& x, int n) {
  return pochhammer(x.negated_shifted(1), n) *
         pochhammer(x.inverse().negated_shifted(1), n);
}

LaurentPolynomial q_pochhammer(int n) { return pochhammer(MonomialUnit(1, 1), n); }

/// F_{m,p} weight, excluding the leading factor q.
ChainForm f_form(int m, int p) {
  const int k = 2 * m * p - 1;
  ChainForm form(k);
  form.triangles.emplace_back(k, -1);
  form.sign_positions.push_back(k);
  for (int i = 1; i <= k; ++i) {
    if (i % m == 0) continue;
    for (int j = i + 1; j <= k; ++j) form.add_pair(i, j, epsilon(i, j, m));
  }
  for (int i = 1; i <= 2 * p - 1; ++i) {
    form.triangles.emplace_back(m * i, 1);
    form.sign_positions.push_back(m * i);
  }
  for (int i = 1; i <= k - 1; ++i) {
    form.add_pair(i, i + 1, -1);
    form.linear[static_cast<std::size_t>(i)] += gamma(i, m);
  }
  return form;
}

ChainForm cal_f_form(int m, int p) {
  const int k = 2 * m * p;
  ChainForm form(k);
  form.triangles.emplace_back(k, -1);
  form.sign_positions.push_back(k);
  for (int i = 1; i <= k; ++i) {
    if (i % m == 0) continue;
    for (int j = i + 1; j <= k; ++j) form.add_pair(i, j, delta(i, j, m));
  }
  for (int i = 1; i <= 2 * p - 1; ++i) {
    form.triangles.emplace_back(m * i, 1);
    form.sign_positions.push_back(m * i);
  }
  for (int i = 1; i <= k - 1; ++i)
    form.linear[static_cast<std::size_t>(i)] += beta(i, m);
  return form;
}

QuotientElement sum_form_mod(int length, const ChainForm& form, Exponent shift,
                             int N, int lo, int hi) {
  QuotientElement acc(N);
  visit_binomial_chains(
      length, lo, hi, [](int top) { return q_pochhammer(top); },
      [&](std::span<const int> chain, const LaurentPolynomial& prod) {
        acc.add_shifted(prod, form.sign(chain), shift + form.exponent(chain));
      });
  return acc;
}

/// Visits 1 <= k_1 <= ... <= k_t with k_t in [lo, hi].
template <class Visit>
void for_each_positive_chain(int t, int lo, int hi, Visit&& visit) {
  std::vector<int> k(static_cast<std::size_t>(t), 0);
  for (int top = std::max(lo, 1); top <= hi; ++top) {
    k.back() = top;
    if (t == 1) {
      visit(std::span<const int>(k));
      continue;
    }
    for_each_chain(t - 1, top - 1, [&](std::span<const int> lower) {
      for (std::size_t i = 0; i < lower.size(); ++i) k[i] = lower[i] + 1;
      visit(std::span<const int>(k));
    });
  }
}

/// prod_{i<t} q^{k_i^2} [k_{i+1} + k_i - i + 2 sum_{j<i} k_j, k_{i+1} - k_i] times q^{k_t - t}
LaurentPolynomial u_t_chain_weight(std::span<const int> k) {
  const int t = static_cast<int>(k.size());
  Exponent e = static_cast<Exponent>(k.back()) - t;
  LaurentPolynomial prod = 1;
  Exponent running = 0;  // sum_{j<i} k_j
  for (int i = 1; i <= t - 1; ++i) {
    const Exponent ki = k[static_cast<std::size_t>(i - 1)];
    const Exponent kn = k[static_cast<std::size_t>(i)];
    e += ki * ki;
    prod *= qbinomial(kn + ki - i + 2 * running, kn - ki);
    running += ki;
  }
  return prod.shifted(e);
}

}  // namespace

namespace detail {

Exponent pair_pochhammer_floor(const MonomialUnit& x, int n) {
  Exponent floor = 0;
  for (Exponent k = 0; k < n; ++k)
    floor += std::min<Exponent>(0, x.exponent + 1 + k) +
             std::min<Exponent>(0, 1 - x.exponent + k);
  return floor;
}

int u_mp_series_cutoff(const MonomialUnit& x, int M) {
  // floor(n+1) - floor(n) >= 1 once n >= |e|, so the scan terminates.
  const Exponent settle = std::abs(x.exponent);
  int cutoff = -1;
  for (int n = 0;; ++n) {
    const Exponent lowest = n + pair_pochhammer_floor(x, n);
    if (lowest <= M)
      cutoff = n;
    else if (n >= settle)
      break;
  }
  return cutoff;
}

int u_t_series_cutoff(int, const MonomialUnit& x, int M) {
  // The k_t term starts at or above (k_t - 1) + floor(k_t - 1).
  return u_mp_series_cutoff(x, M) + 1;
}

QuotientElement f_mp_band(int m, int p, int N, int lo, int hi) {
  return sum_form_mod(2 * m * p - 1, f_form(m, p), 1, N, lo, hi);
}

QuotientElement cal_f_mp_band(int m, int p, int N, int lo, int hi) {
  return sum_form_mod(2 * m * p, cal_f_form(m, p), 0, N, lo, hi);
}

QuotientElement u_mp_root_band(int m, int p, int N, int lo, int hi) {
  QuotientElement acc(N);
  const MonomialUnit x = minus_one();
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    LaurentPolynomial term = pair_pochhammer(x, n);
    term *= cyclotomic_inner_positive(m, n);
    term *= cyclotomic_inner_positive(p, n);
    acc.add_shifted(term, 1, n);
  }
  return acc;
}

QuotientElement cal_u_mp_root_band(int m, int p, int N, int lo, int hi) {
  QuotientElement acc(N);
  const MonomialUnit x = minus_one();
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    LaurentPolynomial term = pair_pochhammer(x, n);
    term *= cyclotomic_inner_positive(m, n);
    term *= cyclotomic_inner_negative(p, n);
    acc.add_shifted(term, n % 2 == 0 ? 1 : -1, -tri(n));
  }
  return acc;
}

QuotientElement f_t_band(int t, int N, int lo, int hi) {
  QuotientElement acc(N);
  visit_binomial_chains(
      t, lo, hi, [](int top) { return q_pochhammer(top); },
      [&](std::span<const int> k, const LaurentPolynomial& prod) {
        Exponent e = t;
        for (std::size_t i = 0; i + 1 < k.size(); ++i)
          e += static_cast<Exponent>(k[i]) * (k[i] + 1);
        acc.add_shifted(prod, 1, e);
      });
  return acc;
}

QuotientElement u_t_root_band(int t, int N, int lo, int hi) {
  QuotientElement acc(N);
  const MonomialUnit x = minus_one();
  for_each_positive_chain(t, lo, hi, [&](std::span<const int> k) {
    acc.add_shifted(pair_pochhammer(x, k.back() - 1) * u_t_chain_weight(k), 1, 0);
  });
  return acc;
}

QuotientElement kz_f_band(int N, int lo, int hi) {
  QuotientElement acc(N);
  for (int n = std::max(lo, 0); n <= hi; ++n) acc.add_shifted(q_pochhammer(n), 1, 0);
  return acc;
}

LaurentPolynomial u_mp_series_upto(int m, int p, const MonomialUnit& x, int hi) {
  PolynomialAccumulator acc;
  for (int n = 0; n <= hi; ++n) {
    LaurentPolynomial term = pair_pochhammer(x, n);
    if (term.is_zero()) continue;
    term *= cyclotomic_inner_positive(m, n);
    term *= cyclotomic_inner_positive(p, n);
    acc.add_shifted(term, 1, n);
  }
  return std::move(acc).finish();
}

LaurentPolynomial u_t_series_upto(int t, const MonomialUnit& x, int hi) {
  PolynomialAccumulator acc;
  for_each_positive_chain(t, 1, hi, [&](std::span<const int> k) {
    acc.add(pair_pochhammer(x, k.back() - 1) * u_t_chain_weight(k));
  });
  return std::move(acc).finish();
}

}  // namespace detail

QuotientElement f_mp(int m, int p, int N) {
  detail::require_positive("f_mp", {m, p, N});
  return detail::f_mp_band(m, p, N, 0, N - 1);
}

SeriesValue u_mp(int m, int p, const MonomialUnit& x, const EvalMode& mode) {
  detail::require_positive("u_mp", {m, p});
  if (const auto* root = std::get_if<RootOfUnity>(&mode)) {
    detail::require_positive("u_mp", {root->N});
    require_minus_one("u_mp", x);
    return detail::u_mp_root_band(m, p, root->N, 0, root->N - 1);
  }
  const int M = std::get<Series>(mode).M;
  const int cutoff = detail::u_mp_series_cutoff(x, M);
  return detail::u_mp_series_upto(m, p, x, cutoff).truncated_above(M);
}

QuotientElement cal_f_mp(int m, int p, int N) {
  detail::require_positive("cal_f_mp", {m, p, N});
  return detail::cal_f_mp_band(m, p, N, 0, N - 1);
}

QuotientElement cal_u_mp(int m, int p, const MonomialUnit& x, const EvalMode& mode) {
  detail::require_positive("cal_u_mp", {m, p});
  const auto* root = std::get_if<RootOfUnity>(&mode);
  if (root == nullptr)
    throw std::invalid_argument("cal_u_mp: only defined at roots of unity");
  detail::require_positive("cal_u_mp", {root->N});
  require_minus_one("cal_u_mp", x);
  return detail::cal_u_mp_root_band(m, p, root->N, 0, root->N - 1);
}

QuotientElement f_t_torus(int t, int N) {
  detail::require_positive("f_t_torus", {t, N});
  return detail::f_t_band(t, N, 0, N - 1);
}

SeriesValue u_t_torus(int t, const MonomialUnit& x, const EvalMode& mode) {
  detail::require_positive("u_t_torus", {t});
  if (const auto* root = std::get_if<RootOfUnity>(&mode)) {
    detail::require_positive("u_t_torus", {root->N});
    require_minus_one("u_t_torus", x);
    // (q)_{k_t - 1}^2 vanishes mod q^N - 1 once k_t - 1 >= N.
    return detail::u_t_root_band(t, root->N, 1, root->N);
  }
  const int M = std::get<Series>(mode).M;
  const int cutoff = detail::u_t_series_cutoff(t, x, M);
  return detail::u_t_series_upto(t, x, cutoff).truncated_above(M);
}

QuotientElement kz_f(int N) {
  detail::require_positive("kz_f", {N});
  return detail::kz_f_band(N, 0, N - 1);
}

SeriesValue u_base(const MonomialUnit& x, const EvalMode& mode) {
  if (const auto* root = std::get_if<RootOfUnity>(&mode)) {
    detail::require_positive("u_base", {root->N});
    require_minus_one("u_base", x);
    QuotientElement acc(root->N);
    for (int n = 0; n < root->N; ++n) acc.add_shifted(pair_pochhammer(x, n), 1, n + 1);
    return acc;
  }
  const int M = std::get<Series>(mode).M;
  // The n-th term starts at or above n + 1 + floor(n).
  const int cutoff = detail::u_mp_series_cutoff(x, M - 1);
  PolynomialAccumulator acc;
  for (int n = 0; n <= cutoff; ++n) acc.add_shifted(pair_pochhammer(x, n), 1, n + 1);
  return std::move(acc).finish().truncated_above(M);
}

}  // namespace qknot
