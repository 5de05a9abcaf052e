#include "threecolour/counts.hpp"

#include "threecolour/errors.hpp"

namespace threecolour {

Int asm_count(long n) {
    if (n < 0) throw Error("asm_count: n must be >= 0");
    Int num(1), den(1);
    for (long k = 0; k < n; ++k) {
        num *= factorial(static_cast<unsigned long>(3 * k + 1));
        den *= factorial(static_cast<unsigned long>(n + k));
    }
    Rat q(num, den);
    q.canonicalize();
    if (!is_integer(q)) throw Error("asm_count: non-integer result");
    return q.get_num();
}

Int cspp_count(long n) {
    if (n < 0) throw Error("cspp_count: n must be >= 0");
    Rat q(asm_count(n));
    for (long k = 1; k <= n; ++k) q *= Rat(3 * k - 1, 3 * k - 2);
    q.canonicalize();
    if (!is_integer(q)) throw Error("cspp_count: non-integer result");
    return q.get_num();
}

} // namespace threecolour
