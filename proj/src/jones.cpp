#include "qknot/jones.hpp"

#include <stdexcept>
#include <string>

#include "qknot/chains.hpp"
#include "qknot/qcomb.hpp"
#include "qknot/sign_tables.hpp"

namespace qknot {

namespace detail {

void require_positive(const char* what, std::initializer_list<int> values) {
  for (int v : values)
    if (v < 1)
      throw std::invalid_argument(std::string(what) +
                                  ": parameters must be positive integers");
}

}  // namespace detail

namespace {

int parity_sign(Exponent s) { return (s % 2 == 0) ? 1 : -1; }

Exponent tri(Exponent n) { return n * (n + 1) / 2; }

/// (q^{1-N})_n, which vanishes for n >= N.
LaurentPolynomial truncating_pochhammer(int N, int n) {
  return pochhammer(MonomialUnit(1, 1 - N), n);
}

template <class Weight>
LaurentPolynomial sum_chains(int length, int top_lo, int top_hi, int N,
                             const Weight& weight) {
  PolynomialAccumulator acc;
  visit_binomial_chains(
      length, top_lo, top_hi,
      [N](int top) { return truncating_pochhammer(N, top); },
      [&](std::span<const int> chain, const LaurentPolynomial& prod) {
        const auto [sign, exp] = weight(chain);
        acc.add_shifted(prod, sign, exp);
      });
  return std::move(acc).finish();
}

}  // namespace

void ChainForm::add_pair(int i, int j, Exponent c) {
  if (c != 0) pairs.emplace_back(i, j, c);
}

Exponent ChainForm::exponent(std::span<const int> chain) const {
  auto n = [&](int i) -> Exponent { return chain[static_cast<std::size_t>(i - 1)]; };
  Exponent e = constant;
  for (std::size_t i = 1; i < linear.size(); ++i)
    if (linear[i] != 0) e += linear[i] * n(static_cast<int>(i));
  for (const auto& [i, j, c] : pairs) e += c * n(i) * n(j);
  for (const auto& [i, c] : triangles) e += c * tri(n(i));
  return e;
}

int ChainForm::sign(std::span<const int> chain) const {
  Exponent s = 0;
  for (int i : sign_positions) s += chain[static_cast<std::size_t>(i - 1)];
  return parity_sign(s);
}

LaurentPolynomial cyclotomic_inner_positive(int length, int top) {
  PolynomialAccumulator acc;
  visit_binomial_chains(
      length, top, top, [](int) { return LaurentPolynomial(1); },
      [&](std::span<const int> n, const LaurentPolynomial& prod) {
        Exponent e = 0;
        for (std::size_t i = 0; i + 1 < n.size(); ++i)
          e += static_cast<Exponent>(n[i]) * n[i] + n[i];
        acc.add_shifted(prod, 1, e);
      });
  return std::move(acc).finish();
}

LaurentPolynomial cyclotomic_inner_negative(int length, int top) {
  PolynomialAccumulator acc;
  visit_binomial_chains(
      length, top, top, [](int) { return LaurentPolynomial(1); },
      [&](std::span<const int> s, const LaurentPolynomial& prod) {
        Exponent e = 0;
        for (std::size_t j = 0; j + 1 < s.size(); ++j)
          e += -static_cast<Exponent>(s[j]) - static_cast<Exponent>(s[j + 1]) * s[j];
        acc.add_shifted(prod, 1, e);
      });
  return std::move(acc).finish();
}

namespace detail {

LaurentPolynomial jones_cyclotomic_pp_band(int m, int p, int N, int n_lo,
                                           int n_hi) {
  LaurentPolynomial total;
  for (int n = std::max(n_lo, 0); n <= n_hi; ++n) {
    LaurentPolynomial term = pochhammer(MonomialUnit(1, 1 + N), n) *
                             pochhammer(MonomialUnit(1, 1 - N), n);
    if (term.is_zero()) continue;
    term = term.shifted(n);
    term *= cyclotomic_inner_positive(m, n);
    term *= cyclotomic_inner_positive(p, n);
    total += term;
  }
  return total;
}

LaurentPolynomial jones_cyclotomic_pm_band(int m, int p, int N, int n_lo,
                                           int n_hi) {
  LaurentPolynomial total;
  for (int n = std::max(n_lo, 0); n <= n_hi; ++n) {
    LaurentPolynomial term = pochhammer(MonomialUnit(1, 1 + N), n) *
                             pochhammer(MonomialUnit(1, 1 - N), n);
    if (term.is_zero()) continue;
    term = term.shifted(-tri(n));
    if (n % 2 == 1) term = -term;
    term *= cyclotomic_inner_positive(m, n);
    term *= cyclotomic_inner_negative(p, n);
    total += term;
  }
  return total;
}

ChainForm thm1_form(int m, int p, int N) {
  const int k = 2 * m * p - 1;
  ChainForm form(k);
  form.constant = 1 - N;
  form.triangles.emplace_back(k, -1);
  form.sign_positions.push_back(k);
  for (int i = 1; i <= k; ++i) {
    if (i % m == 0) continue;
    for (int j = i + 1; j <= k; ++j) form.add_pair(i, j, epsilon(i, j, m));
  }
  for (int i = 1; i <= 2 * p - 1; ++i) {
    const int pos = m * i;
    form.linear[static_cast<std::size_t>(pos)] += (i % 2 == 0 ? N : -N);
    form.triangles.emplace_back(pos, 1);
    form.sign_positions.push_back(pos);
  }
  for (int i = 1; i <= k - 1; ++i) {
    form.add_pair(i, i + 1, -1);
    form.linear[static_cast<std::size_t>(i)] += gamma(i, m);
  }
  return form;
}

ChainForm thm2_form(int m, int p, int N) {
  const int k = 2 * m * p;
  ChainForm form(k);
  form.triangles.emplace_back(k, -1);
  form.sign_positions.push_back(k);
  for (int i = 1; i <= k; ++i) {
    if (i % m == 0) continue;
    for (int j = i + 1; j <= k; ++j) form.add_pair(i, j, delta(i, j, m));
  }
  for (int i = 1; i <= 2 * p - 1; ++i) {
    const int pos = m * i;
    form.linear[static_cast<std::size_t>(pos)] += (i % 2 == 0 ? -N : N);
    form.triangles.emplace_back(pos, 1);
    form.sign_positions.push_back(pos);
  }
  for (int i = 1; i <= k - 1; ++i)
    form.linear[static_cast<std::size_t>(i)] += beta(i, m);
  return form;
}

LaurentPolynomial jones_thm1_band(int m, int p, int N, int top_lo, int top_hi) {
  const ChainForm form = thm1_form(m, p, N);
  return sum_chains(2 * m * p - 1, top_lo, top_hi, N,
                    [&](std::span<const int> n) {
                      return std::pair{form.sign(n), form.exponent(n)};
                    });
}

LaurentPolynomial jones_thm2_band(int m, int p, int N, int top_lo, int top_hi) {
  const ChainForm form = thm2_form(m, p, N);
  return sum_chains(2 * m * p, top_lo, top_hi, N, [&](std::span<const int> n) {
    return std::pair{form.sign(n), form.exponent(n)};
  });
}

}  // namespace detail

LaurentPolynomial jones_cyclotomic_pp(int m, int p, int N) {
  detail::require_positive("jones_cyclotomic_pp", {m, p, N});
  return detail::jones_cyclotomic_pp_band(m, p, N, 0, N - 1);
}

LaurentPolynomial jones_cyclotomic_pm(int m, int p, int N) {
  detail::require_positive("jones_cyclotomic_pm", {m, p, N});
  return detail::jones_cyclotomic_pm_band(m, p, N, 0, N - 1);
}

LaurentPolynomial jones_thm1(int m, int p, int N) {
  detail::require_positive("jones_thm1", {m, p, N});
  return detail::jones_thm1_band(m, p, N, 0, N - 1);
}

LaurentPolynomial jones_thm2(int m, int p, int N) {
  detail::require_positive("jones_thm2", {m, p, N});
  return detail::jones_thm2_band(m, p, N, 0, N - 1);
}

LaurentPolynomial jones_twist_m1(TwistSign sign, int p, int N) {
  detail::require_positive("jones_twist_m1", {p, N});
  const Exponent NN = N;
  if (sign == TwistSign::Positive) {
    const int k = 2 * p - 1;
    return sum_chains(k, 0, N - 1, N, [&](std::span<const int> c) {
      auto n = [&](int i) -> Exponent { return c[static_cast<std::size_t>(i - 1)]; };
      Exponent e = 1 - NN - NN * n(k);
      Exponent s = 0;
      for (int i = 1; i <= k - 1; ++i) {
        s += n(i);
        const Exponent alt = (i % 2 == 0) ? NN : -NN;
        e += alt * n(i) + n(i) * (n(i) - 1) / 2 - n(i) * n(i + 1);
      }
      return std::pair{parity_sign(s), e};
    });
  }
  const int k = 2 * p;
  return sum_chains(k, 0, N - 1, N, [&](std::span<const int> c) {
    auto n = [&](int i) -> Exponent { return c[static_cast<std::size_t>(i - 1)]; };
    Exponent e = -tri(n(k));
    Exponent s = n(k);
    for (int i = 1; i <= k - 1; ++i) {
      s += n(i);
      const Exponent alt = (i % 2 == 0) ? -NN : NN;
      e += alt * n(i) + tri(n(i));
    }
    return std::pair{parity_sign(s), e};
  });
}

LaurentPolynomial jones_display_example(DisplayExample which, int N) {
  detail::require_positive("jones_display_example", {N});
  const Exponent NN = N;
  if (which == DisplayExample::Km2m2) {
    return sum_chains(7, 0, N - 1, N, [&](std::span<const int> c) {
      const Exponent n1 = c[0], n2 = c[1], n3 = c[2], n4 = c[3], n5 = c[4],
                     n6 = c[5], n7 = c[6];
      Exponent e = 1 - NN;
      e += NN * (-n2 + n4 - n6);
      e += -tri(n7) + tri(n6) + tri(n4) + tri(n2) +
           n1 * (n3 - n4 - n5 + n6 + n7) + n3 * (n5 - n6 - n7) + n5 * n7;
      e += -n2 * n3 - n4 * n5 - n6 * n7 + n1 - n2 - n3 - n4 + n5 - n6;
      return std::pair{parity_sign(n2 + n4 + n6 + n7), e};
    });
  }
  return sum_chains(6, 0, N - 1, N, [&](std::span<const int> c) {
    const Exponent n1 = c[0], n2 = c[1], n3 = c[2], n4 = c[3], n5 = c[4],
                   n6 = c[5];
    Exponent e = NN * n3 - tri(n6) + tri(n3);
    e += n1 * (-n2 + n5 + n6) + n2 * (-n3 + n4 + n5) - n4 * n5 - n5 * n6;
    e += n1 + n2 - n4 - n5;
    return std::pair{parity_sign(n3 + n6), e};
  });
}

}  // namespace qknot
