#pragma once

#include <variant>

#include "qknot/laurent.hpp"
#include "qknot/qcomb.hpp"
#include "qknot/quotient.hpp"

namespace qknot {

/// Evaluate in Z[q]/(q^N - 1), i.e. simultaneously at every Nth root of unity.
struct RootOfUnity {
  int N = 1;
};

/// Expand as a q-series; every coefficient of q^e with e <= M is exact and
/// nothing above q^M is returned.
struct Series {
  int M = 0;
};

using EvalMode = std::variant<RootOfUnity, Series>;
using SeriesValue = std::variant<QuotientElement, LaurentPolynomial>;

/// Generalized Kontsevich-Zagier function F_{m,p} at roots of unity.
QuotientElement f_mp(int m, int p, int N);

/// Generalized U-function U_{m,p}(x; q). Root-of-unity mode requires x = -1.
SeriesValue u_mp(int m, int p, const MonomialUnit& x, const EvalMode& mode);

/// The (-m,p) companions; both exist only at roots of unity.
QuotientElement cal_f_mp(int m, int p, int N);
QuotientElement cal_u_mp(int m, int p, const MonomialUnit& x, const EvalMode& mode);

/// Torus-knot functions F_t and U_t(x; q).
QuotientElement f_t_torus(int t, int N);
SeriesValue u_t_torus(int t, const MonomialUnit& x, const EvalMode& mode);

/// F(q) = sum_n (q)_n at roots of unity.
QuotientElement kz_f(int N);
/// U(x; q) = sum_n (-xq)_n (-x^{-1}q)_n q^{n+1}.
SeriesValue u_base(const MonomialUnit& x, const EvalMode& mode);

/// x = -1, the only value at which the U-functions are evaluated at roots of unity.
inline MonomialUnit minus_one() { return {-1, 0}; }

namespace detail {

/// Lowest exponent that (-xq)_n (-x^{-1}q)_n can reach.
Exponent pair_pochhammer_floor(const MonomialUnit& x, int n);

/// Partial sums over the outer index/top entry in [lo, hi], reduced mod q^N - 1.
QuotientElement f_mp_band(int m, int p, int N, int lo, int hi);
QuotientElement cal_f_mp_band(int m, int p, int N, int lo, int hi);
QuotientElement u_mp_root_band(int m, int p, int N, int lo, int hi);
QuotientElement cal_u_mp_root_band(int m, int p, int N, int lo, int hi);
QuotientElement f_t_band(int t, int N, int lo, int hi);
QuotientElement u_t_root_band(int t, int N, int lo, int hi);
QuotientElement kz_f_band(int N, int lo, int hi);

/// Series-mode sums over the outer index n (or k_t) in [0, hi], untruncated.
LaurentPolynomial u_mp_series_upto(int m, int p, const MonomialUnit& x, int hi);
LaurentPolynomial u_t_series_upto(int t, const MonomialUnit& x, int hi);

/// Largest outer index whose terms can reach exponents <= M.
int u_mp_series_cutoff(const MonomialUnit& x, int M);
int u_t_series_cutoff(int t, const MonomialUnit& x, int M);

}  // namespace detail

}  // namespace qknot
