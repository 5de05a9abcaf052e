#include "threecolour/sfamily.hpp"

namespace threecolour {

BiPoly t_poly(long n, const Rat& zeta, const Rat& z) {
    if (n < 0) throw Error("t_poly: negative index");
    if (n == 0) return BiPoly::constant(Rat(1));
    auto N = mixed_partial_numerators<Rat>(n, z, zeta);
    BiPoly det = ring_det(N);
    Rat denom(1);
    for (long k = 1; k < n; ++k) {
        Rat f = Rat(factorial(k));
        denom *= f * f;
    }
    Rat scale = Rat(1) / denom;
    return scale * det;
}

} // namespace threecolour
