#ifndef THREECOLOUR_QRFAMILY_HPP
#define THREECOLOUR_QRFAMILY_HPP

#include <utility>

#include "threecolour/pfamily.hpp"
#include "threecolour/ratpoly.hpp"

namespace threecolour {

// Degrees of the monic pair (q_n, r_n) by residue of n mod 6; -1 encodes the
// zero polynomial.
struct QRDegrees {
    long q;
    long r;
};

QRDegrees qr_degrees(long n);

// Extract (q_n, r_n) from the substitution identities that express
// p_{n-1} - zeta^s ptilde_{n-1} through the reversed polynomials evaluated at
// u = zeta (zeta+1)^4 / (2 (zeta^2+4 zeta+1)^3), by exact linear solving in
// the cleared monomial basis. Throws Inconsistent when an identity fails and
// NotMonic when the recovered polynomial is not monic at its stated degree.
std::pair<RatPoly, RatPoly> qr_polys(const PFamily& fam, long n);

} // namespace threecolour

#endif
