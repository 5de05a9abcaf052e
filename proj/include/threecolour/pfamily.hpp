#ifndef THREECOLOUR_PFAMILY_HPP
#define THREECOLOUR_PFAMILY_HPP

#include <utility>
#include <vector>

#include "threecolour/bipoly.hpp"
#include "threecolour/ratpoly.hpp"

namespace threecolour {

// delta_n = floor(n^2/4), the exponent bookkeeping quantity used throughout
// the family constructions. Correct for negative n too.
inline long quarter_square(long n) { return n * n / 4; }

// chi(condition): 1 or 0.
inline long chi_l(bool b) { return b ? 1 : 0; }

// The bivariate family P_0..P_nmax together with the two specializations
// driving the three-term recursion, cached per index. spec_b is stored with
// denominators cleared: spec_b[k] = (zeta+2)^k * P_k(zeta/(zeta+2), zeta).
struct PFamily {
    std::vector<BiPoly> P;
    std::vector<RatPoly> spec_a; // P_k(2 zeta+1, zeta)
    std::vector<RatPoly> spec_b; // (zeta+2)^k P_k(zeta/(zeta+2), zeta)

    long nmax() const { return static_cast<long>(P.size()) - 1; }
};

// Build the family by the three-term recursion from P_0 = 1, P_1 = x + zeta.
// Every division is exact; a nonzero remainder aborts with NotDivisible, an
// identically zero cached specialization with DegenerateCoefficient.
PFamily build_P(long nmax);

// p_n extracted from the first specialization: P_n(2 zeta+1, zeta) divided by
// (1+2 zeta)^[n/2]. By convention p_{-1} = p_0 = 1.
RatPoly p_poly(const PFamily& fam, long n);

// Reversal of p_n against its nominal degree n(n+1)/2.
RatPoly p_tilde(const PFamily& fam, long n);

// y_n from the quadratic relation
//   (zeta+1)^2 p_{n+1} p_{n-1} = zeta^{n+1} ptilde_n y_n
//     + (1+2 zeta)^{1+chi(n even)} (1+zeta/2)^{1+chi(n odd)} p_n^2,
// solved by exact division.
RatPoly y_poly(const PFamily& fam, long n);

// Rebuild p_{n+1} as the X solving A X - B Y = C with
//   A = (zeta+1)^2 p_{n-1},  B = zeta^{n+1} ptilde_n,
//   C = (1+2 zeta)^{1+chi(n even)} (1+zeta/2)^{1+chi(n odd)} p_n^2,
// deg X <= (n+1)(n+2)/2, deg Y <= deg A, normalized by the known leading
// coefficient of p_{n+1}. Cross-check path only.
RatPoly p_via_bezout(const PFamily& fam, long n);

// Rebuild p_n from the derivative determinant of F/G at the specialization
// point. Heavy cross-check path, intended for n <= 4.
RatPoly p_via_det(long n);

// Terminating hypergeometric polynomials of degree [n/2] and [(n+1)/2].
RatPoly hyper_phi(long n);
RatPoly hyper_psi(long n);

} // namespace threecolour

#endif
