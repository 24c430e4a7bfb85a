#pragma once

#include <cstdint>
#include <vector>

namespace qknot {

/// Pairwise sign for the (-m,-p) family; requires 1 <= i < j and m not dividing i.
int epsilon(int i, int j, int m);
/// Linear sign for the (-m,-p) family: +1 on residues 1..m-1 mod 2m, else -1.
int gamma(int i, int m);
/// Pairwise sign for the (-m,p) family; requires 1 <= i < j and m not dividing i.
int delta(int i, int j, int m);
/// Linear sign for the (-m,p) family: +1 on 1..m-1, -1 on m+1..2m-1, else 0.
int beta(int i, int m);

/// Coprime odd l > t >= 1.
struct TwoBridgeParams {
  int l = 3;
  int t = 1;

  TwoBridgeParams(int l_, int t_);
  int p_prime() const { return (l - 1) / 2; }
};

/**
 * Sign data of a two-bridge knot b(l,t). All vectors are 1-based with an
 * unused slot 0:
 *   sigma[j]  = (-1)^floor((2j-1)t/l)
 *   r[j]      = (2j-1)t reduced mod 2l into (-l, l)
 *   r_prime[j]= (|r[j]| + 1)/2
 *   i_of_k[k] = j with r_prime[j] = k
 */
struct SigmaTable {
  int l = 0;
  int t = 0;
  int p_prime = 0;
  std::vector<int> sigma;
  std::vector<int> r;
  std::vector<int> r_prime;
  std::vector<int> i_of_k;

  int sigma_at(int j) const { return sigma.at(static_cast<std::size_t>(j)); }
  int i_at(int k) const { return i_of_k.at(static_cast<std::size_t>(k)); }
  int sigma_of_i(int k) const { return sigma_at(i_at(k)); }
};

/// Direct computation from the definitions; throws if r' is not a bijection.
SigmaTable build_sigma_table(const TwoBridgeParams& params);

enum class DoubleTwistFamily {
  MinusMinus,  // b(4mp-1, 4mp-2p-1), i.e. K_(m,p)
  MinusPlus,   // b(4mp+1, 4mp-2p+1), i.e. K_(m,-p)
};

TwoBridgeParams family_params(int m, int p, DoubleTwistFamily family);

/// sigma_j, i_k and sigma_{i_k} as produced by the interval algorithms.
struct LemmaTable {
  int p_prime = 0;
  std::vector<int> sigma;         // 1-based
  std::vector<int> i_of_k;        // 1-based
  std::vector<int> sigma_of_i_k;  // 1-based
};

/**
 * Residue-class rule for sigma_j plus the interval algorithms for i_k and
 * sigma_{i_k}: the range 1..p' is cut into blocks of length p; the first
 * two blocks carry explicit formulas and each later block shifts the block
 * two back by +-l.
 */
LemmaTable lemma_ik_sigma(int m, int p, DoubleTwistFamily family);

}  // namespace qknot
