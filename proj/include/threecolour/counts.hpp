#ifndef THREECOLOUR_COUNTS_HPP
#define THREECOLOUR_COUNTS_HPP

#include "threecolour/rational.hpp"

namespace threecolour {

// Number of alternating sign matrices of order n:
//   1!*4!*7!*...*(3n-2)! / (n!*(n+1)!*...*(2n-1)!).
Int asm_count(long n);

// Number of cyclically symmetric plane partitions in an n-cube:
//   (2*5*...*(3n-1)) / (1*4*...*(3n-2)) times asm_count(n).
Int cspp_count(long n);

} // namespace threecolour

#endif
