#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "threecolour/counts.hpp"
#include "threecolour/errors.hpp"
#include "threecolour/pfamily.hpp"
#include "threecolour/qrfamily.hpp"
#include "threecolour/ratfunc.hpp"
#include "threecolour/sfamily.hpp"

#include <vector>

using namespace threecolour;

namespace {

Rat frac(long n, long d) { return Rat(n) / Rat(d); }

RatPoly zp(std::vector<long> v) {
    std::vector<Rat> c(v.begin(), v.end());
    return RatPoly(c);
}

RatPoly rpoly(std::vector<Rat> c) { return RatPoly(std::move(c)); }

const PFamily& fam16() {
    static PFamily fam = build_P(16);
    return fam;
}

// Table rows shared between test cases, ascending coefficients.
RatPoly table_p(int n) {
    switch (n) {
    case -1:
    case 0: return RatPoly::one();
    case 1: return zp({1, 3});
    case 2: return zp({1, 7, 15, 5});
    case 3: return frac(1, 2) * zp({2, 27, 147, 398, 504, 231, 35});
    case 4:
        return frac(1, 2) * zp({2, 42, 387, 2036, 6636, 13464, 16310, 11052,
                                4122, 798, 63});
    case 5:
        return frac(1, 2) * zp({2, 62, 882, 7603, 44134, 181104, 535478,
                                1140593, 1726302, 1816006, 1298446, 622677,
                                196922, 39468, 4554, 231});
    case 6:
        return frac(1, 8) * zp({8, 336, 6630, 81550, 699405, 4430904,
                                21422188, 80476380, 236837400, 546520100,
                                984509064, 1373623128, 1470762970, 1198556100,
                                738954900, 342834244, 118703208, 30199260,
                                5484050, 673530, 50193, 1716});
    default: REQUIRE(false); return RatPoly::zero();
    }
}

// sum_k h_k num^k den^(D-k) with D = deg h, for composing h(num/den).
RatPoly cleared_compose(const RatPoly& h, const RatPoly& num, const RatPoly& den) {
    long d = h.degree();
    RatPoly acc = RatPoly::zero();
    for (long k = 0; k <= d; ++k)
        acc = acc + h.coeff(k) * poly_pow(num, k) * poly_pow(den, d - k);
    return acc;
}

int par(Int m) { return mpz_odd_p(m.get_mpz_t()) ? -1 : 1; }

} // namespace

TEST_CASE("symmetric kernel evaluation") {
    Rat zeta = frac(2, 3);

    // empty product convention
    CHECK(s_eval<Rat>({Rat(7)}, zeta) == Rat(1));
    CHECK(s_eval<Rat>({frac(-3, 5)}, zeta) == Rat(1));

    // one-point case reduces to the cubic kernel itself
    std::vector<std::vector<Rat>> pts = {
        {Rat(2), Rat(3), Rat(5)},
        {frac(1, 2), Rat(-1), frac(7, 3)},
        {Rat(0), Rat(4), frac(-2, 7)},
    };
    for (const auto& p : pts)
        CHECK(s_eval<Rat>({p[0], p[1], p[2]}, zeta) ==
              fval<Rat>(p[0], p[1], p[2], zeta));

    // same over rational functions of zeta
    RatFunc zf = RatFunc::variable();
    RatFunc s1 = s_eval<RatFunc>({RatFunc(Rat(2)), RatFunc(Rat(3)), RatFunc(Rat(5))}, zf);
    CHECK(s1 == fval<RatFunc>(RatFunc(Rat(2)), RatFunc(Rat(3)), RatFunc(Rat(5)), zf));

    // permutation invariance at distinct points
    std::vector<Rat> base = {Rat(2), frac(1, 3), Rat(-1), frac(7, 2), Rat(5)};
    Rat ref = s_eval<Rat>(base, frac(3, 7));
    std::vector<Rat> rot = {Rat(5), Rat(2), frac(1, 3), Rat(-1), frac(7, 2)};
    std::vector<Rat> rev = {Rat(5), frac(7, 2), Rat(-1), frac(1, 3), Rat(2)};
    std::vector<Rat> mix = {Rat(-1), Rat(5), Rat(2), frac(7, 2), frac(1, 3)};
    CHECK(s_eval<Rat>(rot, frac(3, 7)) == ref);
    CHECK(s_eval<Rat>(rev, frac(3, 7)) == ref);
    CHECK(s_eval<Rat>(mix, frac(3, 7)) == ref);

    // permutation invariance with repeated points
    std::vector<Rat> rep = {Rat(2), Rat(2), Rat(-1), frac(7, 2), Rat(5)};
    std::vector<Rat> rep2 = {Rat(5), Rat(2), frac(7, 2), Rat(2), Rat(-1)};
    CHECK(s_eval<Rat>(rep, frac(3, 7)) == s_eval<Rat>(rep2, frac(3, 7)));

    // a single doubled value never needs a vanishing denominator, so the
    // unperturbed path must agree with the perturbed one
    CHECK(s_eval<Rat>(rep, frac(3, 7), false) == s_eval<Rat>(rep, frac(3, 7)));

    // multiplicity four forces a repeat inside one block; without the
    // perturbation that is a genuine division by zero
    std::vector<Rat> quad = {Rat(2), Rat(2), Rat(2), Rat(2), Rat(5)};
    CHECK_THROWS_AS(s_eval<Rat>(quad, frac(3, 7), false), DivisionByZero);
    CHECK(s_eval<Rat>(quad, frac(3, 7)) ==
          t_poly(2, frac(3, 7), Rat(5)).eval(Rat(2), Rat(2)));

    CHECK_THROWS_AS(s_eval<Rat>({Rat(1), Rat(2)}, zeta), Error);
}

TEST_CASE("fully coincident evaluation matches the derivative table") {
    Rat zeta = frac(2, 3);
    Rat z = Rat(7);

    CHECK(t_poly(0, zeta, z) == BiPoly::constant(Rat(1)));
    CHECK(t_poly(1, zeta, z) == bipoly_F<Rat>(z, zeta));

    BiPoly t2 = t_poly(2, zeta, z);
    CHECK(t2.eval(Rat(3), Rat(5)) == s_eval<Rat>({Rat(3), Rat(3), Rat(5), Rat(5), Rat(7)}, zeta));
    CHECK(t2.eval(frac(1, 2), Rat(-4)) ==
          s_eval<Rat>({frac(1, 2), frac(1, 2), Rat(-4), Rat(-4), Rat(7)}, zeta));

    BiPoly t3 = t_poly(3, zeta, z);
    CHECK(t3.eval(Rat(3), Rat(5)) ==
          s_eval<Rat>({Rat(3), Rat(3), Rat(3), Rat(5), Rat(5), Rat(5), Rat(7)}, zeta));
}

TEST_CASE("bilinear derivative recursion") {
    Rat zeta = frac(2, 5);
    Rat z = Rat(3);
    std::vector<BiPoly> t;
    for (long k = 0; k <= 4; ++k) t.push_back(t_poly(k, zeta, z));

    BiPoly g = bipoly_G<Rat>(zeta);
    BiPoly gx = g.dx(), gy = g.dy(), gxy = g.dx().dy();
    for (long n = 1; n <= 3; ++n) {
        BiPoly lhs = t[n - 1] * t[n + 1];
        BiPoly rhs = (gx * gy - g * gxy) * t[n] * t[n] +
                     frac(1, n * n) * (g * g *
                     (t[n] * t[n].dx().dy() - t[n].dx() * t[n].dy()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("inversion symmetry") {
    Rat zeta = frac(7, 3);
    std::vector<std::vector<Rat>> argsets = {
        {Rat(2), Rat(3), Rat(5)},
        {Rat(2), Rat(3), Rat(5), frac(1, 4), Rat(-2)},
    };
    for (const auto& args : argsets) {
        long n = (static_cast<long>(args.size()) - 1) / 2;
        std::vector<Rat> inv;
        Rat prod(1);
        for (const Rat& a : args) {
            inv.push_back(Rat(1) / a);
            prod *= a;
        }
        Rat lhs = s_eval<Rat>(inv, Rat(1) / zeta);
        Rat rhs = s_eval<Rat>(args, zeta) /
                  (rat_pow(zeta, 2 * n * n) * rat_pow(prod, n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("minor recursions at generic points") {
    Rat zeta = frac(3, 5);
    Rat a = Rat(2), b = Rat(-1), c = frac(1, 3), d = Rat(4);
    std::vector<Rat> pool = {Rat(5), Rat(6), frac(7, 2), Rat(-3), Rat(8)};
    auto S = [&](std::vector<Rat> args) { return s_eval<Rat>(args, zeta); };
    auto G = [&](const Rat& x, const Rat& y) { return gval<Rat>(x, y, zeta); };
    auto cat = [](std::vector<Rat> head, const std::vector<Rat>& tail) {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };

    for (long n = 1; n <= 3; ++n) {
        // quadratic relation from complementary minors
        std::vector<Rat> xs(pool.begin(), pool.begin() + (2 * n - 1));
        Rat lhs = (a - b) * (c - d) * S(xs) * S(cat({a, b, c, d}, xs));
        Rat rhs = G(a, d) * G(b, c) * S(cat({a, c}, xs)) * S(cat({b, d}, xs)) -
                  G(a, c) * G(b, d) * S(cat({a, d}, xs)) * S(cat({b, c}, xs));
        CHECK(lhs == rhs);

        // three-term column exchange relation
        std::vector<Rat> ys(pool.begin(), pool.begin() + (2 * n - 2));
        Rat sum =
            (c - d) * G(a, b) * S(cat({b}, ys)) * S(cat({a, c, d}, ys)) +
            (d - b) * G(a, c) * S(cat({c}, ys)) * S(cat({a, b, d}, ys)) +
            (b - c) * G(a, d) * S(cat({d}, ys)) * S(cat({a, b, c}, ys));
        CHECK(sum == Rat(0));

        // combined four-term relation
        Rat y0 = frac(9, 4);
        Rat four =
            (b - d) * (y0 - a) * (y0 - c) * S(cat({a}, ys)) * S(cat({c}, ys)) *
                S(cat({y0, a, b, c, d}, ys)) +
            (a - y0) * G(b, c) * G(y0, d) * S(cat({c}, ys)) *
                S(cat({a, c, d}, ys)) * S(cat({y0, a, b}, ys)) +
            (y0 - c) * G(a, d) * G(y0, b) * S(cat({a}, ys)) *
                S(cat({a, b, c}, ys)) * S(cat({y0, c, d}, ys)) +
            (c - a) * G(y0, b) * G(y0, d) * S(cat({a, b, c}, ys)) *
                S(cat({a, c, d}, ys)) * S(cat({y0}, ys));
        CHECK(four == Rat(0));
    }
}

TEST_CASE("recursions with coincident blocks") {
    Rat zeta = frac(3, 7);
    Rat a = Rat(2), b = Rat(-3), y = frac(1, 2);
    auto rep = [](const Rat& v, long k) { return std::vector<Rat>(k, v); };
    auto cat = [](std::vector<Rat> head, const std::vector<Rat>& tail) {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };
    auto S = [&](std::vector<Rat> args) { return s_eval<Rat>(args, zeta); };
    auto G = [&](const Rat& x, const Rat& w) { return gval<Rat>(x, w, zeta); };

    // three-term recursion for the one-free-variable slice
    auto slice = [&](const Rat& v, long k) {
        return S(cat({v}, cat(rep(a, k), rep(b, k))));
    };
    for (long n = 1; n <= 3; ++n) {
        Rat lhs =
            (b - a) * (y - a) * (y - b) * slice(a, n - 1) * slice(b, n - 1) *
                slice(y, n + 1) +
            ((a - y) * G(b, b) * G(y, a) * slice(b, n - 1) * slice(a, n) +
             (y - b) * G(a, a) * G(y, b) * slice(a, n - 1) * slice(b, n)) *
                slice(y, n) +
            (b - a) * G(y, a) * G(y, b) * slice(a, n) * slice(b, n) *
                slice(y, n - 1);
        CHECK(lhs == Rat(0));
    }

    // two-free-variable slice and its diagonal degeneration
    Rat z = frac(5, 3), x = Rat(7), w = frac(-1, 2);
    auto slice2 = [&](const Rat& u, const Rat& v, long k) {
        if (k == 0) return Rat(1);
        return S(cat({u, v, z}, cat(rep(a, k - 1), rep(b, k - 1))));
    };
    for (long n = 1; n <= 3; ++n) {
        Rat lhs = (x - a) * (w - b) * slice2(a, b, n - 1) * slice2(x, w, n + 1);
        Rat rhs = G(a, w) * G(b, x) * slice2(a, b, n) * slice2(x, w, n) -
                  G(a, b) * G(x, w) * slice2(x, b, n) * slice2(a, w, n);
        CHECK(lhs == rhs);

        Rat dlhs = (a - b) * (a - b) * slice2(a, b, n - 1) * slice2(a, b, n + 1);
        Rat drhs = G(a, b) * G(a, b) * slice2(a, a, n) * slice2(b, b, n) -
                   G(a, a) * G(b, b) * slice2(a, b, n) * slice2(a, b, n);
        CHECK(dlhs == drhs);
    }
}

TEST_CASE("family tables") {
    const PFamily& fam = fam16();

    RatPoly p2 = table_p(2), p2r = zp({5, 15, 7, 1});
    RatPoly twop3 = zp({2, 27, 147, 398, 504, 231, 35});
    RatPoly twop3r = zp({35, 231, 504, 398, 147, 27, 2});

    BiPoly P2 = frac(1, 2) * bipoly_from_rows({
        zp({0, 0, 3, 7, 2}),           // z^2(z+3)(2z+1)
        zp({0, 3, 10, 3}),             // z(z+3)(3z+1)
        zp({2, 7, 3}),                 // (z+2)(3z+1)
    });
    CHECK(fam.P[2] == P2);

    // row k holds the x^k coefficient
    BiPoly P3 = frac(1, 2) * bipoly_from_rows({
        RatPoly::monomial(3, Rat(1)) * zp({1, 2}) * p2r,   // z^3(2z+1) p~2
        RatPoly::monomial(2, Rat(1)) * zp({1, 4}) * p2r,   // z^2(4z+1) p~2
        RatPoly::monomial(1, Rat(1)) * zp({4, 1}) * p2,    // z(z+4) p2
        zp({2, 1}) * p2,                                   // (z+2) p2
    });
    CHECK(fam.P[3] == P3);

    RatPoly mid4 = zp({10, 139, 790, 2245, 3232, 2245, 790, 139, 10});
    BiPoly P4 = frac(1, 8) * bipoly_from_rows({
        RatPoly::monomial(4, Rat(1)) * zp({1, 4, 4}) * twop3r,           // z^4(2z+1)^2 2p~3
        RatPoly::monomial(3, Rat(1)) * zp({1, 2}) * zp({1, 5}) * twop3r, // z^3(2z+1)(5z+1) 2p~3
        Rat(3) * RatPoly::monomial(2, Rat(1)) * mid4,                    // 3 z^2 m
        RatPoly::monomial(1, Rat(1)) * zp({5, 1}) * zp({2, 1}) * twop3,  // z(z+5)(z+2) 2p3
        zp({4, 4, 1}) * twop3,                                           // (z+2)^2 2p3
    });
    CHECK(fam.P[4] == P4);

    for (int n = 1; n <= 6; ++n)
        CHECK(p_poly(fam, n) == table_p(n));
    CHECK(p_poly(fam, -1) == RatPoly::one());
    CHECK(p_poly(fam, 0) == RatPoly::one());

    // degenerate coupling: all weight on one colour
    for (long n = 0; n <= 8; ++n)
        CHECK(substitute_y_value(fam.P[n], Rat(0)) == RatPoly::monomial(n, Rat(1)));

    // x <-> 1/x, zeta <-> 1/zeta self-duality of the coefficient grid
    for (long n = 0; n <= 10; ++n) {
        long e = n * (n + 2) / 2;
        const BiPoly& P = fam.P[n];
        for (long i = 0; i <= n; ++i)
            for (long j = 0; j <= e; ++j)
                CHECK(P.coeff(i, j) == P.coeff(n - i, e - j));
    }

    // boundary evaluations recover the one-variable family
    RatPoly zvar = RatPoly::variable();
    for (long n = 0; n <= 10; ++n) {
        long h = (n + 1) / 2;
        CHECK(fam.spec_a[n] ==
              poly_pow(zp({1, 2}), n / 2) * p_poly(fam, n));
        CHECK(fam.spec_b[n] ==
              RatPoly::monomial(n, Rat(1)) * poly_pow(zp({2, 1}), n - h) *
                  p_tilde(fam, n));
    }
}

TEST_CASE("coefficient structure of the two-variable family") {
    const PFamily& fam = fam16();
    for (long n = 0; n <= 8; ++n) {
        long dn = quarter_square(n);
        std::vector<RatPoly> f;
        for (long k = 0; k <= n; ++k) {
            RatPoly fk = exact_divide(bipoly_row(fam.P[n], k),
                                      RatPoly::monomial(n - k, Rat(1)));
            f.push_back(fk);
            CHECK(fk.degree() == 2 * dn);
            CHECK(fk.lead() == Rat(binomial(n + k, n)) / rat_pow(Rat(2), k));
        }
        for (long k = 0; k <= n; ++k) {
            CHECK(f[k] == reverse_to_degree(f[n - k], 2 * dn));
            long half = (n + 1) / 2;
            if (k > half)
                CHECK_NOTHROW(exact_divide(f[k], poly_pow(zp({2, 1}), k - half)));
        }
        CHECK(f[n] == poly_pow(rpoly({Rat(1), frac(1, 2)}), n / 2) *
                          p_poly(fam, n - 1));
        if (n == 1) {
            CHECK(f[0] == RatPoly::one());
        } else if (n >= 2) {
            CHECK(f[n - 1] == frac(1, 2) *
                                  poly_pow(rpoly({Rat(1), frac(1, 2)}), n / 2 - 1) *
                                  rpoly({Rat(n + 1), Rat(1)}) * p_poly(fam, n - 1));
        }
        // constant x-row in factored form
        CHECK(bipoly_row(fam.P[n], 0) ==
              RatPoly::monomial(n, Rat(1)) *
                  poly_pow(rpoly({frac(1, 2), Rat(1)}), n / 2) *
                  p_tilde(fam, n - 1));
    }
}

TEST_CASE("hypergeometric companions") {
    CHECK(hyper_phi(0) == RatPoly::one());
    CHECK(hyper_phi(1) == RatPoly::one());
    CHECK(hyper_phi(2) == rpoly({Rat(1), frac(1, 7)}));
    for (long n = 0; n <= 9; ++n) {
        CHECK(hyper_phi(n).degree() == n / 2);
        CHECK(hyper_psi(n).degree() == (n + 1) / 2);
    }
    RatPoly x = RatPoly::variable();
    RatPoly sq = zp({1, -2, 1});
    for (long n = 1; n <= 8; ++n) {
        Rat c1 = frac(3 * (3 * n + 2) * (3 * n + 4), (2 * n + 1) * (2 * n + 3));
        CHECK(c1 * x * hyper_phi(n + 1) ==
              zp({-1, 9}) * hyper_phi(n) + sq * hyper_phi(n - 1));

        Rat c2 = frac(3 * (3 * n + 1) * (3 * n + 4), (2 * n + 1) * (2 * n + 3));
        CHECK(zp({1, 3}) * hyper_psi(n) ==
              c2 * x * hyper_phi(n + 1) + sq * hyper_phi(n - 1));

        Rat c3 = frac(3 * (3 * n + 2) * (3 * n + 5), (2 * n + 1) * (2 * n + 3));
        CHECK(zp({1, 6, 9}) * hyper_phi(n) ==
              c3 * x * hyper_psi(n + 1) + sq * hyper_psi(n - 1));
    }
}

TEST_CASE("special couplings of the two-variable family") {
    const PFamily& fam = fam16();
    for (long n = 0; n <= 8; ++n) {
        long dnm = quarter_square(n - 1);

        // zeta = -1 collapses onto a shifted monomial
        RatPoly at1 = substitute_y_value(fam.P[n], Rat(-1));
        Rat sgn = (n % 4 == 2) ? Rat(-1) : Rat(1);
        CHECK(at1 == sgn * rat_pow(Rat(2), dnm) * poly_pow(zp({-1, 1}), n));

        // zeta = 1: terminating series in a rational argument
        {
            long dd = n / 2;
            RatPoly phi = hyper_phi(n);
            REQUIRE(phi.degree() == dd);
            RatPoly num = zp({-1, 3}) * zp({-3, 1});
            RatPoly den = Rat(3) * zp({1, 2, 1});
            RatPoly comp = cleared_compose(phi, num, den);
            RatPoly rhs = rat_pow(Rat(2), dnm - n) * Rat(asm_count(n + 1)) *
                          poly_pow(zp({1, 1}), n - 2 * dd) * comp;
            CHECK(substitute_y_value(fam.P[n], Rat(1)) == rhs);
        }

        // zeta = -2: parity-split terminating series
        {
            RatPoly num = zp({3, 1});
            RatPoly den = Rat(3) * zp({1, -1});
            RatPoly atm2 = substitute_y_value(fam.P[n], Rat(-2));
            if (n % 2 == 0) {
                RatPoly phi = hyper_phi(n);
                REQUIRE(phi.degree() == n / 2);
                RatPoly comp = cleared_compose(phi, num, den);
                CHECK(atm2 == rat_pow(frac(-1, 4), n / 2) *
                                  Rat(asm_count(n + 1)) * comp);
            } else {
                RatPoly psi = hyper_psi(n);
                REQUIRE(psi.degree() == (n + 1) / 2);
                RatPoly comp = cleared_compose(psi, num, den);
                CHECK(atm2 == frac(-1, 3) *
                                  rat_pow(Rat(2), -(n + 1)) *
                                  Rat(cspp_count(n + 1)) * comp);
            }
        }
    }
}

TEST_CASE("one-variable family special values") {
    const PFamily& fam = fam16();
    for (long n = 0; n <= 16; ++n) {
        RatPoly p = p_poly(fam, n);
        CHECK(p.degree() == n * (n + 1) / 2);
        CHECK(p.lead() ==
              Rat(binomial(2 * n + 2, n + 1)) / rat_pow(Rat(2), (n + 2) / 2));
        CHECK(p.coeff(0) == Rat(1));

        Rat A = Rat(asm_count(n + 1));
        Rat C = Rat(cspp_count(n + 1));
        long dnp = quarter_square(n + 1);

        Rat sm1 = (n % 4 == 1) ? Rat(-1) : Rat(1);
        CHECK(p.eval(Rat(-1)) == sm1 * rat_pow(Rat(2), dnp));
        CHECK(p.eval(Rat(1)) == rat_pow(Rat(2), dnp) * A);
        if (n % 2 == 0) {
            CHECK(p.eval(Rat(-2)) == A);
            CHECK(p.eval(frac(-1, 2)) ==
                  rat_pow(Rat(2), -(n * n + 2 * n + 2) / 2) * C);
        } else {
            Rat s = ((n + 1) / 2 % 2 == 1) ? Rat(-1) : Rat(1);
            CHECK(p.eval(Rat(-2)) == s * C);
            CHECK(p.eval(frac(-1, 2)) ==
                  s * rat_pow(Rat(2), -(n + 1) * (n + 1) / 2) * A);
        }

        // linear coefficient closed form
        Rat a1 = (n % 2 == 0) ? frac(7 * n * (n + 2), 8)
                              : frac(7 * n * n + 14 * n + 3, 8);
        CHECK(p.coeff(1) == a1);
    }
    CHECK(p_poly(fam, 3).eval(Rat(-2)) == Rat(132));
    CHECK(p_poly(fam, 2).eval(Rat(1)) == Rat(28));
}

TEST_CASE("companion family from the quadratic relation") {
    const PFamily& fam = fam16();
    CHECK(y_poly(fam, 0) == rpoly({frac(1, 2), Rat(1), Rat(1)}));
    CHECK(y_poly(fam, 1) == rpoly({frac(1, 4), frac(1, 4), frac(1, 2)}));
    CHECK(y_poly(fam, 1).lead() == frac(1, 2));
    for (long n = 0; n <= 6; ++n) {
        RatPoly y = y_poly(fam, n);
        CHECK(y.degree() == n * (n - 1) / 2 + 2);
        Rat lead = Rat(factorial(2 * n + 2)) * Rat(factorial(2 * n)) /
                   (rat_pow(Rat(2), n + chi(n % 2 == 1)) *
                    Rat(factorial(n + 2)) * Rat(factorial(n + 1)) *
                    Rat(factorial(n + 1)) * Rat(factorial(n)));
        CHECK(y.lead() == lead);
    }
}

TEST_CASE("linear-system reconstruction of the next member") {
    const PFamily& fam = fam16();
    CHECK(p_via_bezout(fam, 1) == table_p(2));
    CHECK(p_via_bezout(fam, 2) == table_p(3));
    for (long n = 1; n <= 10; ++n)
        CHECK(p_via_bezout(fam, n) == p_poly(fam, n + 1));
}

TEST_CASE("determinant route to the one-variable family") {
    const PFamily& fam = fam16();
    for (long n = 0; n <= 4; ++n)
        CHECK(p_via_det(n) == p_poly(fam, n));
}

TEST_CASE("paired extraction in the resolvent variable") {
    const PFamily& fam = fam16();
    auto [q0, r0] = qr_polys(fam, 0);
    CHECK(q0 == RatPoly::zero());
    CHECK(r0 == RatPoly::one());
    auto [q1, r1] = qr_polys(fam, 1);
    CHECK(q1 == RatPoly::one());
    CHECK(r1 == RatPoly::zero());
    auto [q2, r2] = qr_polys(fam, 2);
    CHECK(q2 == RatPoly::one());
    CHECK(r2 == RatPoly::one());
    auto [q3, r3] = qr_polys(fam, 3);
    CHECK(q3 == RatPoly::one());
    CHECK(r3 == RatPoly::one());
    auto [q4, r4] = qr_polys(fam, 4);
    CHECK(q4 == zp({3, 1}));
    CHECK(r4 == zp({-3, 1}));
    auto [q5, r5] = qr_polys(fam, 5);
    CHECK(q5 == zp({6, -4, 1}));
    CHECK(r5 == zp({6, 1}));
    auto [q6, r6] = qr_polys(fam, 6);
    CHECK(q6 == zp({40, -2, 1}));
    CHECK(r6 == zp({20, 0, -8, 1}));
    auto [q7, r7] = qr_polys(fam, 7);
    CHECK(q7 == zp({50, 100, 15, -10, 1}));
    CHECK(r7 == zp({-50, 75, 0, 1}));

    for (long n = 0; n <= 16; ++n) {
        auto deg = qr_degrees(n);
        auto [q, r] = qr_polys(fam, n);
        CHECK(q.degree() == deg.q);
        CHECK(r.degree() == deg.r);
        if (deg.q >= 0) CHECK(q.lead() == Rat(1));
        if (deg.r >= 0) CHECK(r.lead() == Rat(1));
    }
}

TEST_CASE("boundary specializations of the kernel determinant") {
    const PFamily& fam = fam16();
    RatFunc zf = RatFunc::variable();
    RatFunc one = RatFunc(Rat(1));
    RatFunc sa = RatFunc(zp({1, 2}));
    RatFunc sb = RatFunc(RatPoly::variable(), zp({2, 1}));
    RatFunc hz = RatFunc(rpoly({Rat(1), frac(1, 2)}));

    // kernel collapses to a constant on the special line
    for (Rat x0 : {Rat(5), frac(-3, 2), Rat(11)}) {
        RatFunc g = gval<RatFunc>(RatFunc(x0), sb, zf);
        RatFunc expect = RatFunc(Rat(2) * poly_pow(RatPoly::variable(), 2) *
                                     poly_pow(zp({1, 1}), 2),
                                 poly_pow(zp({2, 1}), 2));
        CHECK(g == expect);
        RatFunc g2 = gval<RatFunc>(sa, RatFunc(x0), zf);
        CHECK(g2 == RatFunc(Rat(2) * rat_pow(x0, 2) * zp({1, 2, 1})));
    }

    auto rep = [](const RatFunc& v, long k) { return std::vector<RatFunc>(k, v); };
    auto cat = [](std::vector<RatFunc> h, const std::vector<RatFunc>& t) {
        h.insert(h.end(), t.begin(), t.end());
        return h;
    };
    std::vector<Rat> xs = {Rat(5), Rat(-7), frac(9, 2), Rat(13)};

    for (long n = 1; n <= 3; ++n) {
        long n2 = n * n;
        long dn = quarter_square(n), dnm = quarter_square(n - 1);
        Rat sgn = Rat(par(binomial(n + 1, 2)));
        RatFunc zpow = func_pow(zf, n2);
        RatFunc opz = func_pow(one + zf, n2);

        // full boundary collapse onto the one-variable family
        RatFunc S = s_eval<RatFunc>(cat(rep(sa, n + 1), rep(sb, n)), zf);
        RatFunc lhs = func_pow(hz, n2) * S;
        RatFunc rhs = sgn * zpow * opz * func_pow(sa, dn) *
                      func_pow(hz, dnm) * RatFunc(p_poly(fam, n));
        CHECK(lhs == rhs);

        // one free argument recovers the two-variable family
        for (long i = 0; i <= n; ++i) {
            Rat x0 = xs[static_cast<size_t>(i)];
            RatFunc Sx = s_eval<RatFunc>(
                cat({RatFunc(x0)}, cat(rep(sa, n), rep(sb, n))), zf);
            RatFunc plhs = func_pow(hz, n2) * Sx;
            RatFunc prhs = sgn * zpow * opz * func_pow(sa, dnm) *
                           func_pow(hz, dnm) *
                           RatFunc(substitute_x(fam.P[n], RatPoly(x0)));
            CHECK(plhs == prhs);
        }

        // overloaded boundary produces the companion family
        RatFunc Sy = s_eval<RatFunc>(cat(rep(sa, n + 2), rep(sb, n - 1)), zf);
        RatFunc ylhs = func_pow(hz, n * (n - 1)) * Sy;
        Rat ysc = Rat(par(binomial(n - 1, 2))) * rat_pow(Rat(2), (n + 5) / 2);
        RatFunc yrhs = ysc * func_pow(zf, n2 - 1) *
                       opz * func_pow(sa, quarter_square(n + 1)) *
                       func_pow(hz, quarter_square(n - 2)) *
                       RatFunc(y_poly(fam, n));
        CHECK(ylhs == yrhs);

        // mirrored boundary produces the reversed family
        RatFunc Sd = s_eval<RatFunc>(cat(rep(sa, n), rep(sb, n + 1)), zf);
        RatFunc dlhs = func_pow(hz, n * (n + 1)) * Sd;
        Rat dsc = sgn * rat_pow(Rat(2), -((n + 1) / 2));
        RatFunc drhs = dsc * func_pow(zf, n * (n + 1)) * opz *
                       func_pow(sa, dnm) * func_pow(hz, dn) *
                       RatFunc(p_tilde(fam, n));
        CHECK(dlhs == drhs);
    }

    // finite limits of the clamped two-variable family at zeta = -2
    for (long n = 0; n <= 6; ++n) {
        Rat lim = laurent_limit(
            RatFunc(fam.spec_b[n], poly_pow(zp({2, 1}), n)) *
                func_pow(hz, (n + 1) / 2),
            Rat(-2), 0);
        Rat expect = (n % 2 == 0)
                         ? Rat(Rat(par(Int(n / 2))) * Rat(cspp_count(n + 1)) / Rat(2))
                         : Rat(-Rat(asm_count(n + 1)) / Rat(2));
        CHECK(lim == expect);
    }
}

TEST_CASE("degenerate coupling limits count symmetry classes") {
    RatFunc zf = RatFunc::variable();
    RatFunc sa = RatFunc(zp({1, 2}));
    RatFunc sb = RatFunc(RatPoly::variable(), zp({2, 1}));
    auto rep = [](const RatFunc& v, long k) { return std::vector<RatFunc>(k, v); };
    auto cat = [](std::vector<RatFunc> h, const std::vector<RatFunc>& t) {
        h.insert(h.end(), t.begin(), t.end());
        return h;
    };

    for (long n = 1; n <= 3; ++n) {
        long dnm = quarter_square(n - 1);
        Rat A = Rat(asm_count(n + 1)), C = Rat(cspp_count(n + 1));

        RatFunc S1 = s_eval<RatFunc>(cat(rep(sa, n + 1), rep(sb, n)), zf);
        long e1 = n * n - dnm;
        Rat lim1 = laurent_limit(S1, Rat(-2), e1) / rat_pow(Rat(2), e1);
        Rat want1 = (n % 2 == 0)
                        ? rat_pow(Rat(2), n * n) * rat_pow(Rat(3), n * n / 4) * A
                        : rat_pow(Rat(2), n * n) *
                              rat_pow(Rat(3), (n * n - 1) / 4) * C;
        CHECK(lim1 == want1);

        RatFunc S2 = s_eval<RatFunc>(cat(rep(sa, n), rep(sb, n + 1)), zf);
        long e2 = n * (n + 1) - quarter_square(n);
        Rat lim2 = laurent_limit(S2, Rat(-2), e2) / rat_pow(Rat(2), e2);
        Rat want2 = (n % 2 == 0)
                        ? rat_pow(Rat(2), n * n - 1) *
                              rat_pow(Rat(3), n * (n - 2) / 4) * C
                        : rat_pow(Rat(2), n * n - 1) *
                              rat_pow(Rat(3), (n - 1) * (n - 1) / 4) * A;
        CHECK(lim2 == want2);
    }
}

TEST_CASE("family construction error paths") {
    CHECK_THROWS_AS(build_P(0), Error);
    const PFamily& fam = fam16();
    CHECK_THROWS_AS(p_poly(fam, 17), Error);
    CHECK_THROWS_AS(p_poly(fam, -2), Error);
    CHECK_THROWS_AS(y_poly(fam, 16), Error);
    CHECK_THROWS_AS(t_poly(-1, Rat(1), Rat(1)), Error);
}
