#ifndef THREECOLOUR_RECONSTRUCT_HPP
#define THREECOLOUR_RECONSTRUCT_HPP

#include <array>
#include <string>

#include "threecolour/pfamily.hpp"
#include "threecolour/tripoly.hpp"

namespace threecolour {

// Size data for the triangular support of the counting table. One colour is
// distinguished by the board size mod 3; M and m bound the other two colour
// counts, M+eps and m+eps (shifted by one for even n) bound the distinguished
// one. The corners P, Q, R are given in rotated census coordinates, where the
// distinguished colour sits in the first slot.
struct SupportProfile {
    long n = 0;
    long M = 0;
    long m = 0;
    long eps = 0;
    long delta = 0;     // lattice points per triangle side
    std::array<long, 3> P{}, Q{}, R{};
};

SupportProfile support_profile(long n);

// Census generating polynomial rebuilt from the resolvent pair (q_n, r_n)
// instead of exhaustive enumeration. Exact; fails loudly if the assembled
// expression is not a polynomial with non-negative integer coefficients.
TriPoly z3c_from_qr(const PFamily& fam, long n);
TriPoly z3c_from_qr(long n);

struct CheckReport {
    std::string check;
    long n = 0;
    bool pass = false;
    std::string detail;
};

// Verifies the triangular support bounds and the binomial values of the
// counting table on the triangle's boundary.
CheckReport ecc_check(const TriPoly& z, long n);
CheckReport ecc_check(long n);

// Verifies that for odd n the rotated counting table is, modulo 2, invariant
// under all six symmetries of the support triangle.
CheckReport mod2_check(const TriPoly& z, long n);
CheckReport mod2_check(long n);

} // namespace threecolour

#endif
