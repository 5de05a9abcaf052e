#include "threecolour/pfamily.hpp"

#include <algorithm>
#include <string>

#include "threecolour/errors.hpp"
#include "threecolour/linsolve.hpp"
#include "threecolour/ratfunc.hpp"
#include "threecolour/sfamily.hpp"

namespace threecolour {

namespace {

RatPoly lin(const Rat& c0, const Rat& c1) { return RatPoly(std::vector<Rat>{c0, c1}); }

void cache_specs(PFamily& fam, long k) {
    const BiPoly& p = fam.P[static_cast<size_t>(k)];
    if (p.degx() != k)
        throw Error("family recursion produced wrong x-degree at index " + std::to_string(k));
    RatPoly a = substitute_x(p, lin(1, 2));
    RatPoly b = substitute_x_cleared(p, RatPoly::variable(), lin(2, 1));
    if (a.is_zero() || b.is_zero())
        throw DegenerateCoefficient("specialization of family member " + std::to_string(k) +
                                    " vanishes identically");
    fam.spec_a.push_back(a);
    fam.spec_b.push_back(b);
}

} // namespace

PFamily build_P(long nmax) {
    if (nmax < 1) throw Error("build_P: nmax must be at least 1");
    PFamily fam;
    fam.P.push_back(BiPoly::constant(Rat(1)));
    BiPoly p1;
    p1.set(1, 0, Rat(1));
    p1.set(0, 1, Rat(1));
    fam.P.push_back(p1);
    cache_specs(fam, 0);
    cache_specs(fam, 1);

    // x - (2 zeta + 1)
    BiPoly lin_a;
    lin_a.set(1, 0, Rat(1));
    lin_a.set(0, 1, Rat(-2));
    lin_a.set(0, 0, Rat(-1));
    // (zeta + 2) x - zeta
    BiPoly lin_b;
    lin_b.set(1, 1, Rat(1));
    lin_b.set(1, 0, Rat(2));
    lin_b.set(0, 1, Rat(-1));
    BiPoly x2;
    x2.set(2, 0, Rat(1));

    for (long n = 1; n < nmax; ++n) {
        const RatPoly& um = fam.spec_a[static_cast<size_t>(n - 1)];
        const RatPoly& u = fam.spec_a[static_cast<size_t>(n)];
        const RatPoly& vm = fam.spec_b[static_cast<size_t>(n - 1)];
        const RatPoly& v = fam.spec_b[static_cast<size_t>(n)];

        // Recursion coefficients with all (zeta+2) denominators cleared by a
        // common factor (zeta+2)^n, which leaves the quotient unchanged.
        BiPoly a_hat = lin_a * lin_b * bipoly_from_y_poly(um) * bipoly_from_y_poly(vm);
        if (n % 2 == 0)
            a_hat = bipoly_from_y_poly(RatPoly(std::vector<Rat>{1, Rat(5, 2), 1})) * a_hat;
        BiPoly b_hat =
            Rat(1, 2) *
            (bipoly_from_y_poly(lin(2, 1) * lin(2, 1)) * x2 * lin_a * bipoly_from_y_poly(vm) *
                 bipoly_from_y_poly(u) -
             bipoly_from_y_poly(lin(1, 2) * lin(1, 2)) * lin_b * bipoly_from_y_poly(um) *
                 bipoly_from_y_poly(v));
        BiPoly c_hat = bipoly_from_y_poly(lin(1, 1) * lin(1, 1)) * x2 * bipoly_from_y_poly(u) *
                       bipoly_from_y_poly(v);

        BiPoly next = bipoly_exact_divide(
            b_hat * fam.P[static_cast<size_t>(n)] + c_hat * fam.P[static_cast<size_t>(n - 1)],
            a_hat);
        fam.P.push_back(next);
        cache_specs(fam, n + 1);
    }
    return fam;
}

RatPoly p_poly(const PFamily& fam, long n) {
    if (n < -1) throw Error("p_poly: index below -1");
    if (n <= 0) return RatPoly::one();
    if (n > fam.nmax()) throw Error("p_poly: family not built through index " + std::to_string(n));
    return exact_divide(fam.spec_a[static_cast<size_t>(n)], poly_pow(lin(1, 2), static_cast<unsigned long>(n / 2)));
}

RatPoly p_tilde(const PFamily& fam, long n) {
    return reverse_to_degree(p_poly(fam, n), n * (n + 1) / 2);
}

RatPoly y_poly(const PFamily& fam, long n) {
    if (n < 0) throw Error("y_poly: negative index");
    RatPoly pm = p_poly(fam, n - 1);
    RatPoly pn = p_poly(fam, n);
    RatPoly pp = p_poly(fam, n + 1);
    bool even = (n % 2 == 0);
    RatPoly num = lin(1, 1) * lin(1, 1) * pp * pm -
                  poly_pow(lin(1, 2), static_cast<unsigned long>(1 + chi_l(even))) *
                      poly_pow(lin(1, Rat(1, 2)), static_cast<unsigned long>(1 + chi_l(!even))) *
                      pn * pn;
    RatPoly den = RatPoly::monomial(n + 1, Rat(1)) * p_tilde(fam, n);
    return exact_divide(num, den);
}

RatPoly p_via_bezout(const PFamily& fam, long n) {
    if (n < 0) throw Error("p_via_bezout: negative index");
    RatPoly a = lin(1, 1) * lin(1, 1) * p_poly(fam, n - 1);
    RatPoly b = RatPoly::monomial(n + 1, Rat(1)) * p_tilde(fam, n);
    bool even = (n % 2 == 0);
    RatPoly pn = p_poly(fam, n);
    RatPoly c = poly_pow(lin(1, 2), static_cast<unsigned long>(1 + chi_l(even))) *
                poly_pow(lin(1, Rat(1, 2)), static_cast<unsigned long>(1 + chi_l(!even))) * pn * pn;

    const long dx = (n + 1) * (n + 2) / 2;
    const long dy = a.degree();
    const long cols = dx + 1 + dy + 1;
    const long rows = std::max({a.degree() + dx, b.degree() + dy, c.degree()}) + 1;
    RatMatrix m(static_cast<size_t>(rows), RatVector(static_cast<size_t>(cols), Rat(0)));
    RatVector rhs(static_cast<size_t>(rows), Rat(0));
    for (long j = 0; j < rows; ++j) {
        for (long k = 0; k <= dx; ++k)
            m[static_cast<size_t>(j)][static_cast<size_t>(k)] = a.coeff(j - k);
        for (long l = 0; l <= dy; ++l)
            m[static_cast<size_t>(j)][static_cast<size_t>(dx + 1 + l)] = -b.coeff(j - l);
        rhs[static_cast<size_t>(j)] = c.coeff(j);
    }
    LinearSolution sol = solve_exact_linear(m, rhs);

    Rat target = Rat(binomial(2 * n + 4, n + 2)) / rat_pow(Rat(2), (n + 3) / 2);
    RatVector u;
    if (sol.kernel.empty()) {
        if (sol.particular[static_cast<size_t>(dx)] != target)
            throw AmbiguousNormalization(
                "bezout path: unique solution has the wrong leading coefficient");
        u = sol.particular;
    } else if (sol.kernel.size() == 1 && sol.kernel[0][static_cast<size_t>(dx)] != 0) {
        Rat t = (target - sol.particular[static_cast<size_t>(dx)]) /
                sol.kernel[0][static_cast<size_t>(dx)];
        u = sol.particular;
        for (size_t i = 0; i < u.size(); ++i) u[i] += t * sol.kernel[0][i];
    } else {
        throw AmbiguousNormalization(
            "bezout path: leading coefficient does not single out a solution");
    }
    return RatPoly(RatVector(u.begin(), u.begin() + dx + 1));
}

RatPoly p_via_det(long n) {
    if (n < 0) throw Error("p_via_det: negative index");
    if (n == 0) return RatPoly::one();
    RatFunc zf = RatFunc::variable();
    RatFunc one{Rat(1)}, two{Rat(2)};
    RatFunc sa = two * zf + one;       // 2 zeta + 1
    RatFunc sb = zf / (zf + two);      // zeta / (zeta + 2)
    auto numer = mixed_partial_numerators<RatFunc>(n, sa, zf);
    RatFunc g = gval(sa, sb, zf);
    std::vector<std::vector<RatFunc>> d(static_cast<size_t>(n),
                                        std::vector<RatFunc>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                numer[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(sa, sb) /
                func_pow(g, i + j + 1);
    RatFunc det = ring_det(d);

    long n2 = n * n;
    RatPoly pnum = poly_pow(RatPoly::variable(), static_cast<unsigned long>(n2)) *
                   poly_pow(lin(1, 1), static_cast<unsigned long>(n2));
    if ((n * (n + 1) / 2) % 2 != 0) pnum = -pnum;
    Rat scale = rat_pow(Rat(2), n2);
    for (long j = 1; j <= n; ++j) {
        Rat f = Rat(factorial(j - 1));
        scale *= f * f;
    }
    RatPoly pden = scale * poly_pow(lin(1, 2), static_cast<unsigned long>(quarter_square(n))) *
                   poly_pow(lin(1, Rat(1, 2)),
                            static_cast<unsigned long>(n2 + quarter_square(n - 1)));
    RatFunc result = RatFunc(pnum, pden) * det;
    if (!result.is_polynomial())
        throw NotDivisible("determinant path: prefactor failed to cancel");
    return result.as_polynomial();
}

namespace {

Rat pochhammer(const Rat& a, long k) {
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= a + i;
    return r;
}

} // namespace

RatPoly hyper_phi(long n) {
    if (n < 0) throw Error("hyper_phi: negative index");
    long d = n / 2;
    Rat a1 = Rat(-n) / 2, a2 = Rat(-(n - 1)) / 2, b1 = Rat(2 * n + 3) / 2;
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (long k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = pochhammer(a1, k) * pochhammer(a2, k) /
                                    (pochhammer(b1, k) * Rat(factorial(k)));
    return RatPoly(c);
}

RatPoly hyper_psi(long n) {
    if (n < 0) throw Error("hyper_psi: negative index");
    long d = (n + 1) / 2;
    Rat a1 = Rat(-n) / 2, a2 = Rat(-(n + 1)) / 2, a3 = Rat(n + 5) / 4;
    Rat b1 = Rat(2 * n + 3) / 2, b2 = Rat(n + 1) / 4;
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (long k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = pochhammer(a1, k) * pochhammer(a2, k) * pochhammer(a3, k) /
                                    (pochhammer(b1, k) * pochhammer(b2, k) * Rat(factorial(k)));
    return RatPoly(c);
}

} // namespace threecolour
