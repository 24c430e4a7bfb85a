#pragma once

#include <utility>

#include "qknot/chains.hpp"
#include "qknot/laurent.hpp"
#include "qknot/sign_tables.hpp"

namespace qknot {

/// The integer a(n) multiplying N in the exponent. Throws std::logic_error if
/// the half-sums fail to combine to an integer.
Exponent a_coeff(const ChainVector& chain, const SigmaTable& table);

/// (b1(n), b2(n)); b2 branches on l < 2t versus l > 2t.
std::pair<Exponent, Exponent> b_coeffs(const ChainVector& chain,
                                       const SigmaTable& table);

/**
 * X(n) = (-1)^{n_p'} q^{kappa} (q)_{N-1} (q)_{n_p'} / (q)_{N-n_p'-1}
 *        * prod_j tau(j) / (q)_{n_j - n_{j-1}},
 * assembled without division as (q^{N-n_p'})_{n_p'} * prod_{j>=2} [n_j, n_{j-1}].
 */
LaurentPolynomial x_factor(const ChainVector& chain, const SigmaTable& table,
                           int N);

/// J_N(b(l,t)^*; q), the colored Jones polynomial of the mirror of b(l,t).
LaurentPolynomial jones_takata(int l, int t, int N);

/// Closed forms of a(n) for the two double twist families:
///   MinusMinus: sum_{j=1}^{2p-1} (-1)^j n_{mj} - 1
///   MinusPlus:  -sum_{j=1}^{2p-1} (-1)^j n_{mj}
Exponent a_closed_form(const ChainVector& chain, int m, int p,
                       DoubleTwistFamily family);

namespace detail {
LaurentPolynomial jones_takata_band(int l, int t, int N, int top_lo, int top_hi);
}  // namespace detail

}  // namespace qknot
