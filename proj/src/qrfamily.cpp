#include "threecolour/qrfamily.hpp"

#include <algorithm>

#include "threecolour/errors.hpp"
#include "threecolour/linsolve.hpp"

namespace threecolour {

QRDegrees qr_degrees(long n) {
    if (n < 0) throw Error("qr_degrees: negative index");
    switch (n % 6) {
        case 0: return {n * n / 12 - 1, n * n / 12};
        case 1:
        case 5: return {(n * n - 1) / 12, (n * n - 1) / 12 - 1};
        case 2:
        case 4: return {(n * n - 4) / 12, (n * n - 4) / 12};
        default: return {(n * n - 9) / 12, (n * n - 9) / 12};
    }
}

namespace {

// Solve lhs = sum_{k=0}^{d} c_k * extra * zeta^k (zeta+1)^{4k}
// (zeta^2+4 zeta+1)^{e-3k} / 2^k exactly for the c_k, returned as a
// polynomial in the substitution variable. d < 0 demands lhs == 0.
RatPoly expand_in_shifted_basis(const RatPoly& lhs, const RatPoly& extra, long e, long d) {
    if (d < 0) {
        if (!lhs.is_zero())
            throw Inconsistent("substitution identity: nonzero left side with empty basis");
        return RatPoly::zero();
    }
    RatPoly zp1 = RatPoly(std::vector<Rat>{1, 1});
    RatPoly disc = RatPoly(std::vector<Rat>{1, 4, 1});
    std::vector<RatPoly> basis;
    long rows = 0;
    for (long k = 0; k <= d; ++k) {
        RatPoly b = extra * RatPoly::monomial(k, rat_pow(Rat(1, 2), k)) *
                    poly_pow(zp1, static_cast<unsigned long>(4 * k)) *
                    poly_pow(disc, static_cast<unsigned long>(e - 3 * k));
        rows = std::max(rows, b.degree() + 1);
        basis.push_back(b);
    }
    rows = std::max(rows, lhs.degree() + 1);
    RatMatrix m(static_cast<size_t>(rows), RatVector(static_cast<size_t>(d) + 1, Rat(0)));
    RatVector rhs(static_cast<size_t>(rows), Rat(0));
    for (long j = 0; j < rows; ++j) {
        for (long k = 0; k <= d; ++k)
            m[static_cast<size_t>(j)][static_cast<size_t>(k)] = basis[static_cast<size_t>(k)].coeff(j);
        rhs[static_cast<size_t>(j)] = lhs.coeff(j);
    }
    LinearSolution sol = solve_exact_linear(m, rhs);
    if (!sol.kernel.empty())
        throw Error("substitution basis unexpectedly dependent");
    return RatPoly(sol.particular);
}

RatPoly reverse_checked_monic(const RatPoly& tilde, long d, const char* which) {
    if (d < 0) return RatPoly::zero();
    if (tilde.coeff(0) != 1)
        throw NotMonic(std::string(which) + ": recovered polynomial is not monic at its stated degree");
    return reverse_to_degree(tilde, d);
}

} // namespace

std::pair<RatPoly, RatPoly> qr_polys(const PFamily& fam, long n) {
    RatPoly p = p_poly(fam, n - 1);
    RatPoly pt = p_tilde(fam, n - 1);
    QRDegrees deg = qr_degrees(n);
    RatPoly one_minus = RatPoly(std::vector<Rat>{1, -1});
    RatPoly qt, rt;
    if (n % 2 == 1) {
        qt = expand_in_shifted_basis(p - RatPoly::monomial((n + 1) / 2, Rat(1)) * pt, one_minus,
                                     (n * n - 1) / 4, deg.q);
        rt = expand_in_shifted_basis(
            p - RatPoly::monomial((n - 1) / 2, Rat(1)) * pt,
            one_minus * poly_pow(RatPoly(std::vector<Rat>{1, 1}), 3), (n * n - 9) / 4, deg.r);
    } else {
        rt = expand_in_shifted_basis(p - RatPoly::monomial((n + 2) / 2, Rat(1)) * pt, one_minus,
                                     n * n / 4, deg.r);
        qt = expand_in_shifted_basis(p - RatPoly::monomial(n / 2, Rat(1)) * pt,
                                     RatPoly(std::vector<Rat>{1, 0, -1}), (n * n - 4) / 4, deg.q);
    }
    return {reverse_checked_monic(qt, deg.q, "q"), reverse_checked_monic(rt, deg.r, "r")};
}

} // namespace threecolour
