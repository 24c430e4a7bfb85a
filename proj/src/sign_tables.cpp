#include "qknot/sign_tables.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qknot {

namespace {

int residue(long long a, long long modulus) {
  long long r = a % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

void check_pair(const char* name, int i, int j, int m) {
  if (m < 1) throw std::invalid_argument(std::string(name) + ": m must be positive");
  if (i < 1 || j <= i)
    throw std::invalid_argument(std::string(name) + ": need 1 <= i < j");
  if (i % m == 0)
    throw std::invalid_argument(std::string(name) + ": m must not divide i");
}

void check_linear(const char* name, int i, int m) {
  if (m < 1 || i < 1)
    throw std::invalid_argument(std::string(name) + ": need i, m >= 1");
}

}  // namespace

int epsilon(int i, int j, int m) {
  check_pair("epsilon", i, j, m);
  const int mod = 2 * m;
  const int rj = residue(j, mod);
  if (rj == residue(-i, mod) || rj == residue(-i - 1, mod)) return 1;
  if (rj == residue(i, mod) || rj == residue(i - 1, mod)) return -1;
  return 0;
}

int gamma(int i, int m) {
  check_linear("gamma", i, m);
  const int r = residue(i, 2 * m);
  return (r >= 1 && r <= m - 1) ? 1 : -1;
}

int delta(int i, int j, int m) {
  check_pair("delta", i, j, m);
  const int mod = 2 * m;
  const int rj = residue(j, mod);
  if (rj == residue(-i, mod) || rj == residue(-i + 1, mod)) return 1;
  if (rj == residue(i, mod) || rj == residue(i + 1, mod)) return -1;
  return 0;
}

int beta(int i, int m) {
  check_linear("beta", i, m);
  const int r = residue(i, 2 * m);
  if (r >= 1 && r <= m - 1) return 1;
  if (r >= m + 1 && r <= 2 * m - 1) return -1;
  return 0;
}

TwoBridgeParams::TwoBridgeParams(int l_, int t_) : l(l_), t(t_) {
  if (t < 1 || l <= t)
    throw std::invalid_argument("b(l,t): need l > t >= 1");
  if (l % 2 == 0 || t % 2 == 0)
    throw std::invalid_argument("b(l,t): l and t must be odd");
  if (std::gcd(l, t) != 1)
    throw std::invalid_argument("b(l,t): l and t must be coprime");
}

SigmaTable build_sigma_table(const TwoBridgeParams& params) {
  SigmaTable table;
  table.l = params.l;
  table.t = params.t;
  table.p_prime = params.p_prime();
  const int pp = table.p_prime;
  const auto size = static_cast<std::size_t>(pp + 1);
  table.sigma.assign(size, 0);
  table.r.assign(size, 0);
  table.r_prime.assign(size, 0);
  table.i_of_k.assign(size, 0);
  const long long l = params.l;
  for (int j = 1; j <= pp; ++j) {
    const long long x = static_cast<long long>(2 * j - 1) * params.t;
    table.sigma[j] = ((x / l) % 2 == 0) ? 1 : -1;
    int r = residue(x, 2 * l);
    if (r >= l) r -= static_cast<int>(2 * l);
    table.r[j] = r;
    table.r_prime[j] = (std::abs(r) + 1) / 2;
  }
  for (int j = 1; j <= pp; ++j) {
    const int k = table.r_prime[j];
    if (k < 1 || k > pp || table.i_of_k[k] != 0)
      throw std::invalid_argument("build_sigma_table: r' is not a bijection for b(" +
                                  std::to_string(params.l) + "," +
                                  std::to_string(params.t) + ")");
    table.i_of_k[k] = j;
  }
  return table;
}

TwoBridgeParams family_params(int m, int p, DoubleTwistFamily family) {
  if (m < 1 || p < 1)
    throw std::invalid_argument("family_params: m and p must be positive");
  if (family == DoubleTwistFamily::MinusMinus)
    return {4 * m * p - 1, 4 * m * p - 2 * p - 1};
  return {4 * m * p + 1, 4 * m * p - 2 * p + 1};
}

LemmaTable lemma_ik_sigma(int m, int p, DoubleTwistFamily family) {
  if (m < 1 || p < 1)
    throw std::invalid_argument("lemma_ik_sigma: m and p must be positive");
  const bool minus_minus = family == DoubleTwistFamily::MinusMinus;
  const int l = minus_minus ? 4 * m * p - 1 : 4 * m * p + 1;
  const int pp = (l - 1) / 2;
  const int base_shift = minus_minus ? 0 : 1;
  const int first_sign = minus_minus ? 1 : -1;

  LemmaTable out;
  out.p_prime = pp;
  const auto size = static_cast<std::size_t>(pp + 1);
  out.sigma.assign(size, 0);
  out.i_of_k.assign(size, 0);
  out.sigma_of_i_k.assign(size, 0);

  for (int j = 1; j <= pp; ++j) {
    const int r = residue(j, 2 * m);
    out.sigma[j] = (r >= 1 && r <= m) ? 1 : -1;
  }
  for (int k = 1; k <= pp; ++k) {
    const int block = (k - 1) / p + 1;
    const int first = 2 * m * (p - k) + m + base_shift;
    int value;
    if (block % 2 == 1)
      value = first + (block - 1) / 2 * l;
    else
      value = (1 - first) - (block - 2) / 2 * l;
    out.i_of_k[k] = value;
    out.sigma_of_i_k[k] = (block % 2 == 1) ? first_sign : -first_sign;
  }
  return out;
}

}  // namespace qknot
