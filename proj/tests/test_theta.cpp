#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "threecolour/counts.hpp"
#include "threecolour/errors.hpp"
#include "threecolour/pfamily.hpp"
#include "threecolour/theta.hpp"
#include "threecolour/tripoly.hpp"

using namespace threecolour;

namespace {

double rel(Cplx a, Cplx b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Deterministic sample points. Moduli are kept inside annuli that stay away
// from the zeros of the theta factors, so fixed seeds give stable residuals.
struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(unsigned long long seed) : rng(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    Cplx annulus(double rlo, double rhi) {
        const double r = uniform(rlo, rhi);
        const double a = uniform(0.0, 6.283185307179586);
        return Cplx(r * std::cos(a), r * std::sin(a));
    }
    std::vector<Cplx> points(long n, double rlo, double rhi) {
        std::vector<Cplx> v(static_cast<std::size_t>(n));
        for (Cplx& z : v) z = annulus(rlo, rhi);
        return v;
    }
};

const PFamily& fam4() {
    static PFamily fam = build_P(4);
    return fam;
}

} // namespace

TEST_CASE("theta product basics") {
    const Cplx x(0.7, 0.4);

    // Vanishing nome: the product collapses to its first factor.
    CHECK(std::abs(theta_eval(x, Cplx(1e-12)) - (1.0 - x)) <= 1e-11);
    CHECK(std::abs(qpochhammer_inf(Cplx(1e-12)) - 1.0) <= 1e-11);

    // x = p is a zero of the j = 0 factor.
    CHECK(std::abs(theta_eval(Cplx(0.2), Cplx(0.2))) == 0.0);
    CHECK(std::abs(theta_eval(Cplx(0.15, 0.1), Cplx(0.15, 0.1))) <= 1e-14);

    CHECK(theta_inversion_residual(Cplx(0.3, 0.1), Cplx(0.2)) <= 1e-12);
    CHECK(theta_shift_residual(Cplx(0.3, 0.1), Cplx(0.2)) <= 1e-12);

    const ThetaContext ctx(Cplx(0.2));
    CHECK(ctx.precision_bits == 0);
    CHECK(ctx.trunc_order >= 1);
    CHECK(std::abs(ctx.theta(x) - theta_eval(x, Cplx(0.2))) == 0.0);

    CHECK_THROWS_AS(theta_eval(Cplx(0.0), Cplx(0.2)), ZeroArgument);
    CHECK_THROWS_AS(theta_eval(x, Cplx(0.0)), NomeOutOfRange);
    CHECK_THROWS_AS(theta_eval(x, Cplx(1.2)), NomeOutOfRange);
    CHECK_THROWS_AS(qpochhammer_inf(Cplx(1.2)), NomeOutOfRange);
    CHECK_THROWS_AS(theta_trunc_order(0.5, 2.0), Error);
    CHECK_THROWS_AS(ThetaContext(Cplx(0.0)), NomeOutOfRange);
}

TEST_CASE("theta functional identities at random points") {
    Sampler s(101);
    for (int trial = 0; trial < 10; ++trial) {
        const Cplx p = s.annulus(0.05, 0.3);
        const Cplx x = s.annulus(0.7, 1.3);
        const Cplx y = s.annulus(0.7, 1.3);
        const Cplx z = s.annulus(0.7, 1.3);
        const Cplx w = s.annulus(0.7, 1.3);
        CHECK(theta_inversion_residual(x, p) <= 1e-11);
        CHECK(theta_shift_residual(x, p) <= 1e-11);
        CHECK(theta_addition_residual(x, y, z, w, p) <= 1e-11);
        CHECK(quintuple_product_residual(x, p) <= 1e-11);
        CHECK(two_torsion_residual(p) <= 1e-11);
        // Square rearrangement: theta(x^2; p^2) = theta(x; p) theta(-x; p).
        CHECK(rel(theta_eval(x * x, p * p), theta_eval(x, p) * theta_eval(-x, p)) <= 1e-11);
    }
}

TEST_CASE("extended precision theta") {
    const Cplx p(0.44, 0.05);
    const Cplx x(0.8, 0.3);
    const double rd = theta_inversion_residual(x, p);
    const double rb = theta_inversion_residual_big(x, p, 256);
    CHECK(rb <= 1e-40);
    CHECK(rb < rd);
    CHECK(theta_addition_residual_big(Cplx(0.9, 0.2), Cplx(1.1, -0.3), Cplx(0.7, 0.5),
                                      Cplx(1.2, 0.1), Cplx(0.35, 0.1), 192) <= 1e-30);

    // The two precisions agree where double is already accurate.
    const Cplx pd(0.2, 0.0);
    const BigComplex bv = big_theta_eval(big_from(x, 128), big_from(pd, 128), 128);
    CHECK(std::abs(big_to_cplx(bv) - theta_eval(x, pd)) <= 1e-13);

    const ThetaContext ctx(pd, 128);
    const BigComplex cv = ctx.theta_big(big_from(x, 128));
    CHECK(std::abs(big_to_cplx(cv) - theta_eval(x, pd)) <= 1e-13);

    CHECK_THROWS_AS(big_theta_eval(big_from(x, 64), big_from(pd, 64), 0), Error);
    CHECK_THROWS_AS(ThetaContext(pd).theta_big(big_from(x, 64)), Error);
}

TEST_CASE("board weight sum") {
    const Cplx p(0.12, 0.04);
    const Cplx lambda(0.7, 0.25);

    CHECK(z8vsos_brute(0, {}, {}, lambda, p) == Cplx(1.0));

    // One board of one block: weight u theta(lambda/u) / theta(lambda).
    const Cplx x1(1.1, 0.2), y1(0.9, -0.3);
    const Cplx u = x1 / y1;
    const Cplx direct = u * theta_eval(lambda / u, p) / theta_eval(lambda, p);
    CHECK(rel(z8vsos_brute(1, {x1}, {y1}, lambda, p), direct) <= 1e-13);

    CHECK_THROWS_AS(z8vsos_brute(5, std::vector<Cplx>(5, x1), std::vector<Cplx>(5, y1), lambda, p),
                    SizeGuard);
    CHECK_THROWS_AS(z8vsos_brute(2, {x1}, {y1, y1}, lambda, p), Error);
    CHECK_THROWS_AS(z8vsos_brute(1, {x1}, {y1}, Cplx(0.0), p), ZeroArgument);
}

TEST_CASE("determinant formula matches the board sum") {
    Sampler s(202);
    for (long n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const Cplx p = s.annulus(0.03, 0.2);
            const std::vector<Cplx> xs = s.points(n, 0.75, 1.3);
            const std::vector<Cplx> ys = s.points(n, 0.75, 1.3);
            const Cplx lambda = s.annulus(0.7, 0.9);
            const Cplx gamma = s.annulus(0.65, 1.35);
            const Cplx zb = z8vsos_brute(n, xs, ys, lambda, p);
            const Cplx zi = z8vsos_ik(n, xs, ys, lambda, p, gamma);
            CHECK(rel(zb, zi) <= 1e-9);
            const Cplx gamma2 = s.annulus(0.65, 1.35);
            CHECK(rel(zi, z8vsos_ik(n, xs, ys, lambda, p, gamma2)) <= 1e-9);
        }
    }

    const Cplx p(0.1, 0.05), lambda(0.8, 0.1), x1(1.1, 0.2), y1(0.9, -0.3);
    CHECK(z8vsos_ik(0, {}, {}, lambda, p, Cplx(1.3, 0.2)) == Cplx(1.0));
    CHECK_THROWS_AS(z8vsos_ik(1, {x1}, {y1}, lambda, p, Cplx(1.0)), PoleProximity);
    CHECK_THROWS_AS(z8vsos_ik(1, {x1}, {y1}, lambda, p, Cplx(0.0)), ZeroArgument);
}

TEST_CASE("partition sum identities") {
    Sampler s(303);
    for (long n = 1; n <= 3; ++n) {
        const Cplx p = s.annulus(0.03, 0.2);
        const std::vector<Cplx> xs = s.points(n, 0.75, 1.3);
        const std::vector<Cplx> ys = s.points(n, 0.75, 1.3);
        const Cplx lambda = s.annulus(0.7, 0.9);
        CHECK(recursion_residual(n, xs, ys, lambda, p) <= 1e-9);
        CHECK(crossing_residual(n, xs, ys, lambda, p) <= 1e-9);
        CHECK(cyclic_sum_residual(n, xs, ys, lambda, p) <= 1e-9);
        const Cplx gamma = s.annulus(0.65, 1.35);
        CHECK(lambda_period_residual(n, xs, ys, lambda, p, gamma) <= 1e-9);
    }
}

TEST_CASE("modular constants") {
    const ModularConstants near0 = modular_constants(Cplx(1e-10), 1e-8);
    CHECK(std::abs(near0.zeta + 2.0) <= 1e-8);
    CHECK(std::abs(near0.eta + 1.0) <= 1e-8);
    CHECK(std::abs(near0.tau - 3.0) <= 1e-8);

    const ModularResiduals at01 = modular_residuals(Cplx(0.1));
    CHECK(at01.zeta_eta <= 1e-10);
    CHECK(at01.tau_eta <= 1e-10);
    CHECK(at01.tau_cube <= 1e-10);

    Sampler s(404);
    for (int trial = 0; trial < 10; ++trial) {
        const Cplx p = s.annulus(0.02, 0.3);
        const ModularResiduals r = modular_residuals(p);
        CHECK(r.zeta_eta <= 1e-10);
        CHECK(r.tau_eta <= 1e-10);
        CHECK(r.tau_cube <= 1e-10);
        CHECK_NOTHROW(modular_constants(p));
    }

    CHECK_THROWS_AS(modular_constants(Cplx(0.25), 1e-30), IdentityViolation);
    CHECK_THROWS_AS(modular_constants(Cplx(1.5)), NomeOutOfRange);
}

TEST_CASE("surface relations") {
    Sampler s(505);
    for (int trial = 0; trial < 5; ++trial) {
        const Cplx p = s.annulus(0.05, 0.3);
        const Cplx la = s.annulus(0.6, 0.9);
        const Cplx lb = s.annulus(0.6, 0.9);
        CHECK(surface_sum_residual(la, lb, p) <= 1e-9);
        CHECK(surface_cube_residual(la, p) <= 1e-9);
        CHECK(surface_invariant_residual(la, p) <= 1e-9);
    }
}

TEST_CASE("three colour link") {
    Sampler s(606);
    for (long n = 0; n <= 3; ++n) {
        const TriPoly z = partition_polynomial(n);
        for (int trial = 0; trial < 3; ++trial) {
            const Cplx lambda = s.annulus(0.6, 0.9);
            const Cplx p = s.annulus(0.05, 0.2);
            CHECK(three_colour_link_residual(n, z, lambda, p) <= 1e-8);
        }
    }
}

TEST_CASE("theta closed form") {
    CHECK(theta_closed_form_residual(2, partition_polynomial(2), fam4(), Cplx(0.7, 0.2),
                                     Cplx(0.15)) <= 1e-8);

    Sampler s(707);
    for (long n = 1; n <= 5; ++n) {
        const TriPoly z = partition_polynomial(n);
        for (int trial = 0; trial < 2; ++trial) {
            const Cplx lambda = s.annulus(0.6, 0.9);
            const Cplx p = s.annulus(0.03, 0.2);
            CHECK(theta_closed_form_residual(n, z, fam4(), lambda, p) <= 1e-8);
        }
    }

    CHECK_THROWS_AS(theta_closed_form_residual(0, partition_polynomial(0), fam4(),
                                               Cplx(0.7, 0.2), Cplx(0.15)),
                    Error);
}

TEST_CASE("vanishing nome reproduces the trigonometric formula") {
    const Cplx lambda(0.0, 0.85);
    for (long n = 1; n <= 5; ++n) {
        const TriPoly z = partition_polynomial(n);
        CHECK(trigonometric_formula_residual(n, z, lambda) <= 1e-10);
        CHECK(trigonometric_formula_residual(n, z, Cplx(0.55, 0.25)) <= 1e-10);

        const std::array<Cplx, 3> t = theta_colour_weights(lambda, Cplx(1e-8));
        const Cplx at_theta = tripoly_eval(z, t[0], t[1], t[2]);
        CHECK(rel(at_theta, trig_surface_value(n, lambda)) <= 1e-6);
    }

    // Size two in closed theta form, frozen separately.
    const Cplx lambda2(0.6, 0.2), p2(0.15);
    auto th = [&](Cplx v) { return theta_eval(v, p2); };
    const Cplx t0 = th(lambda2), t1 = th(lambda2 * omega_pow(1)), t2 = th(lambda2 * omega_pow(2));
    const std::array<Cplx, 3> tw = theta_colour_weights(lambda2, p2);
    const Cplx z2 = tripoly_eval(partition_polynomial(2), tw[0], tw[1], tw[2]);
    const Cplx frozen = (cplx_pow(t0, 3) + cplx_pow(t2, 3)) /
                        (cplx_pow(t0, 9) * cplx_pow(t1, 12) * cplx_pow(t2, 9));
    CHECK(rel(z2, frozen) <= 1e-10);
}
