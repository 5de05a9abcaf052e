#include "threecolour/theta.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "threecolour/counts.hpp"
#include "threecolour/enumerate.hpp"
#include "threecolour/errors.hpp"
#include "threecolour/rational.hpp"

namespace threecolour {

namespace {

double rel_err(Cplx a, Cplx b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

void check_nome(Cplx p, const char* who) {
    const double ap = std::abs(p);
    if (!(ap > 0.0 && ap < 1.0))
        throw NomeOutOfRange(std::string(who) + ": |p| must lie in (0, 1)");
}

Cplx theta_core(Cplx x, Cplx p, long trunc) {
    if (x == Cplx(0.0)) throw ZeroArgument("theta_eval: x = 0 is a pole of the product");
    Cplx acc = 1.0, pj = 1.0;
    for (long j = 0; j < trunc; ++j) {
        acc *= (1.0 - pj * x) * (1.0 - pj * p / x);
        pj *= p;
    }
    return acc;
}

// Truncation order at an explicit bit budget, safe for budgets whose floor
// underflows double.
long trunc_order_bits(double abs_p, unsigned long bits) {
    const double ln_floor = -static_cast<double>(bits + 16) * std::log(2.0);
    long trunc = static_cast<long>(std::ceil(ln_floor / std::log(abs_p)));
    return trunc < 1 ? 1 : trunc;
}

// In-place LU determinant with partial pivoting; clobbers m.
Cplx det_lu(std::vector<std::vector<Cplx>>& m) {
    const long n = static_cast<long>(m.size());
    Cplx det = 1.0;
    for (long col = 0; col < n; ++col) {
        long piv = col;
        for (long r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        if (m[col][col] == Cplx(0.0)) return Cplx(0.0);
        det *= m[col][col];
        for (long r = col + 1; r < n; ++r) {
            const Cplx f = m[r][col] / m[col][col];
            for (long c = col + 1; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

ModularConstants compute_modular(Cplx p) {
    check_nome(p, "modular_constants");
    const Cplx p2 = p * p;
    auto th2 = [&](Cplx x) { return theta_eval(x, p2); };
    const Cplx w = omega_pow(1);
    const Cplx zeta = omega_pow(2) * th2(Cplx(-1.0)) * th2(-p * w) / (th2(-p) * th2(-w));
    const Cplx eta = -th2(p) * th2(-p * w) * th2(-p * w) / (th2(p * w) * th2(-p) * th2(-p));
    const Cplx q1 = qpochhammer_inf(p);
    const Cplx q9 = qpochhammer_inf(cplx_pow(p, 9));
    const Cplx tau = 3.0 * (1.0 + 9.0 * p * cplx_pow(q9 / q1, 3));
    return ModularConstants{zeta, eta, tau};
}

ModularResiduals residuals_of(const ModularConstants& mc, Cplx p) {
    const Cplx z = mc.zeta, e = mc.eta, t = mc.tau;
    const double r1 = rel_err(z * cplx_pow(z + 1.0, 4), 2.0 * cplx_pow(e, 3));
    const double r2 = rel_err(t * e, z * z + 4.0 * z + 1.0);
    const Cplx q1 = qpochhammer_inf(p);
    const Cplx q3 = qpochhammer_inf(p * p * p);
    const Cplx rhs = 27.0 * (1.0 + 27.0 * p * cplx_pow(q3 / q1, 12));
    const double r3 = rel_err(cplx_pow(t, 3), rhs);
    return ModularResiduals{r1, r2, r3};
}

// s(l) = sum_i theta(l w^i)^3 / theta(l^3; p^3).
Cplx surface_sum(Cplx lambda, Cplx p) {
    Cplx s = 0.0;
    for (long k = 0; k < 3; ++k) s += cplx_pow(theta_eval(lambda * omega_pow(k), p), 3);
    return s / theta_eval(lambda * lambda * lambda, p * p * p);
}

// e2^3 / e3^2 of the colour weights.
Cplx weight_invariant(Cplx lambda, Cplx p) {
    const std::array<Cplx, 3> t = theta_colour_weights(lambda, p);
    const Cplx e2 = t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
    const Cplx e3 = t[0] * t[1] * t[2];
    return cplx_pow(e2, 3) / cplx_pow(e3, 2);
}

} // namespace

Cplx omega_pow(long k) {
    static const double s = std::sqrt(3.0) / 2.0;
    long r = k % 3;
    if (r < 0) r += 3;
    if (r == 0) return Cplx(1.0, 0.0);
    if (r == 1) return Cplx(-0.5, s);
    return Cplx(-0.5, -s);
}

Cplx cplx_pow(Cplx b, long e) {
    if (e < 0) return 1.0 / cplx_pow(b, -e);
    Cplx acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Cplx ratpoly_eval_cplx(const RatPoly& f, Cplx x) {
    Cplx acc = 0.0;
    for (long k = f.degree(); k >= 0; --k) acc = acc * x + rat_to_double(f.coeff(k));
    return acc;
}

long theta_trunc_order(double abs_p, double floor_value) {
    if (!(abs_p > 0.0 && abs_p < 1.0))
        throw NomeOutOfRange("theta_trunc_order: modulus must lie in (0, 1)");
    if (!(floor_value > 0.0 && floor_value < 1.0))
        throw Error("theta_trunc_order: floor must lie in (0, 1)");
    const long trunc = static_cast<long>(std::ceil(std::log(floor_value) / std::log(abs_p)));
    return trunc < 1 ? 1 : trunc;
}

Cplx theta_eval(Cplx x, Cplx p, double floor_value) {
    check_nome(p, "theta_eval");
    return theta_core(x, p, theta_trunc_order(std::abs(p), floor_value));
}

Cplx qpochhammer_inf(Cplx p, double floor_value) {
    check_nome(p, "qpochhammer_inf");
    const long trunc = theta_trunc_order(std::abs(p), floor_value);
    Cplx acc = 1.0, pj = p;
    for (long j = 1; j <= trunc; ++j) {
        acc *= 1.0 - pj;
        pj *= p;
    }
    return acc;
}

// ---------- extended precision ----------

BigComplex big_from(Cplx z, unsigned long bits) { return BigComplex(z.real(), z.imag(), bits); }

Cplx big_to_cplx(const BigComplex& z) { return Cplx(z.re.get_d(), z.im.get_d()); }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    mpf_class den(b.re * b.re + b.im * b.im);
    if (den == 0) throw DivisionByZero("BigComplex: division by zero");
    return BigComplex((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
}

mpf_class big_abs(const BigComplex& z) {
    mpf_class s(z.re * z.re + z.im * z.im);
    return sqrt(s);
}

BigComplex big_theta_eval(const BigComplex& x, const BigComplex& p, unsigned long bits) {
    if (bits == 0) throw Error("big_theta_eval: bits must be positive");
    const double ap = big_abs(p).get_d();
    if (!(ap > 0.0 && ap < 1.0))
        throw NomeOutOfRange("big_theta_eval: |p| must lie in (0, 1)");
    if (x.re == 0 && x.im == 0)
        throw ZeroArgument("big_theta_eval: x = 0 is a pole of the product");
    const long trunc = trunc_order_bits(ap, bits);
    const BigComplex one(1.0, 0.0, bits);
    BigComplex acc = one, pj = one;
    for (long j = 0; j < trunc; ++j) {
        acc = acc * (one - pj * x) * (one - pj * p / x);
        pj = pj * p;
    }
    return acc;
}

ThetaContext::ThetaContext(Cplx p_, unsigned long bits) : p(p_), precision_bits(bits) {
    check_nome(p_, "ThetaContext");
    const double ap = std::abs(p_);
    trunc_order = bits == 0 ? theta_trunc_order(ap, 1e-18) : trunc_order_bits(ap, bits);
}

Cplx ThetaContext::theta(Cplx x) const { return theta_core(x, p, trunc_order); }

BigComplex ThetaContext::theta_big(const BigComplex& x) const {
    if (precision_bits == 0)
        throw Error("ThetaContext: extended precision was not requested at construction");
    return big_theta_eval(x, big_from(p, precision_bits), precision_bits);
}

// ---------- identity residuals ----------

double theta_inversion_residual(Cplx x, Cplx p) {
    const Cplx lhs = theta_eval(1.0 / x, p);
    const Cplx rhs = -theta_eval(x, p) / x;
    return rel_err(lhs, rhs);
}

double theta_inversion_residual_big(Cplx x, Cplx p, unsigned long bits) {
    if (bits == 0) throw Error("theta_inversion_residual_big: bits must be positive");
    const BigComplex xb = big_from(x, bits), pb = big_from(p, bits);
    const BigComplex one(1.0, 0.0, bits);
    const BigComplex lhs = big_theta_eval(one / xb, pb, bits);
    const BigComplex rhs = -(one / xb) * big_theta_eval(xb, pb, bits);
    const mpf_class denom = big_abs(rhs);
    if (denom == 0) return big_abs(lhs - rhs).get_d();
    const mpf_class q(big_abs(lhs - rhs) / denom);
    return q.get_d();
}

double theta_shift_residual(Cplx x, Cplx p) {
    const Cplx lhs = theta_eval(p * x, p);
    const Cplx rhs = -theta_eval(x, p) / x;
    return rel_err(lhs, rhs);
}

double theta_addition_residual(Cplx x, Cplx y, Cplx z, Cplx w, Cplx p) {
    auto quad = [&](Cplx a, Cplx b, Cplx c, Cplx d) {
        return theta_eval(a * b, p) * theta_eval(a / b, p) * theta_eval(c * d, p) *
               theta_eval(c / d, p);
    };
    const Cplx lhs = quad(x, z, y, w) - quad(x, w, y, z);
    const Cplx rhs = (y / z) * quad(x, y, z, w);
    return rel_err(lhs, rhs);
}

double theta_addition_residual_big(Cplx x, Cplx y, Cplx z, Cplx w, Cplx p, unsigned long bits) {
    if (bits == 0) throw Error("theta_addition_residual_big: bits must be positive");
    const BigComplex xb = big_from(x, bits), yb = big_from(y, bits);
    const BigComplex zb = big_from(z, bits), wb = big_from(w, bits);
    const BigComplex pb = big_from(p, bits);
    auto th = [&](const BigComplex& v) { return big_theta_eval(v, pb, bits); };
    auto quad = [&](const BigComplex& a, const BigComplex& b, const BigComplex& c,
                    const BigComplex& d) { return th(a * b) * th(a / b) * th(c * d) * th(c / d); };
    const BigComplex lhs = quad(xb, zb, yb, wb) - quad(xb, wb, yb, zb);
    const BigComplex rhs = (yb / zb) * quad(xb, yb, zb, wb);
    const mpf_class sa = big_abs(lhs), sb = big_abs(rhs);
    const mpf_class scale = sa > sb ? sa : sb;
    if (scale == 0) return 0.0;
    const mpf_class q(big_abs(lhs - rhs) / scale);
    return q.get_d();
}

double quintuple_product_residual(Cplx x, Cplx p) {
    const Cplx s = std::sqrt(p);
    const Cplx lhs = theta_eval(x, p) * theta_eval(s * x, p) * theta_eval(-s * x, p);
    const Cplx p3 = p * p * p;
    const Cplx x3 = x * x * x;
    const Cplx rhs = qpochhammer_inf(p3) / qpochhammer_inf(p) *
                     (theta_eval(-p * x3, p3) - x * theta_eval(-p / x3, p3));
    return rel_err(lhs, rhs);
}

double two_torsion_residual(Cplx p) {
    check_nome(p, "two_torsion_residual");
    const Cplx p2 = p * p;
    auto th2 = [&](Cplx x) { return theta_eval(x, p2); };
    const Cplx w = omega_pow(1);
    const Cplx v1 = th2(Cplx(-1.0)) * th2(p) * th2(-p);
    const Cplx v2 = th2(-w) * th2(p * w) * th2(-p * w);
    const double r1 = std::abs(v1 - 2.0) / 2.0;
    const double r2 = std::abs(v2 + omega_pow(2));
    return std::max(r1, r2);
}

// ---------- solid-on-solid partition sum ----------

Cplx VertexWeights::block_weight(int a, int b, int c, int d, Cplx u) const {
    const int s1 = ((b - a) % 3 + 3) % 3, s2 = ((d - b) % 3 + 3) % 3;
    const int t1 = ((d - c) % 3 + 3) % 3, t2 = ((c - a) % 3 + 3) % 3;
    const Cplx w = omega_pow(1);
    const Cplx mu = lambda * omega_pow(a);
    auto th = [&](Cplx v) { return theta_eval(v, p); };
    // The all-equal-step weight divides by theta(w), not theta(u): only this
    // normalization makes the partition sum symmetric in the row (and column)
    // parameters and consistent with the determinant evaluation and the
    // crossing and cyclic-sum checks below. It agrees with the /theta(u)
    // variant at the three-colour point u = w, which is why the reduction
    // tests cannot distinguish them.
    if (s1 != 0 && s1 == s2 && t1 == t2 && s1 == t1) return th(w * u) / th(w);
    if (s1 == 1 && s2 == 2 && t1 == 1 && t2 == 2) return th(u) * th(w * mu) / (th(w) * th(mu));
    if (s1 == 2 && s2 == 1 && t1 == 2 && t2 == 1)
        return w * th(u) * th(w * w * mu) / (th(w) * th(mu));
    if (s1 == 2 && s2 == 1 && t1 == 1 && t2 == 2) return th(mu * u) / th(mu);
    if (s1 == 1 && s2 == 2 && t1 == 2 && t2 == 1) return u * th(mu / u) / th(mu);
    throw Error("block_weight: block is not adjacent-distinct");
}

Cplx z8vsos_brute(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys, Cplx lambda,
                  Cplx p) {
    check_nome(p, "z8vsos_brute");
    if (n < 0) throw Error("z8vsos_brute: negative size");
    if (n > 4)
        throw SizeGuard("z8vsos_brute: n > 4 would enumerate too many boards; use z8vsos_ik");
    if (static_cast<long>(xs.size()) != n || static_cast<long>(ys.size()) != n)
        throw Error("z8vsos_brute: parameter count mismatch");
    if (lambda == Cplx(0.0)) throw ZeroArgument("z8vsos_brute: lambda must be nonzero");
    for (const Cplx& v : xs)
        if (v == Cplx(0.0)) throw ZeroArgument("z8vsos_brute: zero row parameter");
    for (const Cplx& v : ys)
        if (v == Cplx(0.0)) throw ZeroArgument("z8vsos_brute: zero column parameter");
    if (n == 0) return 1.0;
    const VertexWeights wt{lambda, p};
    Cplx total = 0.0;
    enumerate_boards(n, [&](const ThreeColourBoard& board) {
        Cplx prod = 1.0;
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= n; ++j)
                prod *= wt.block_weight(board.at(i - 1, j - 1), board.at(i - 1, j),
                                        board.at(i, j - 1), board.at(i, j),
                                        xs[i - 1] / ys[j - 1]);
        total += prod;
    });
    return total;
}

Cplx z8vsos_ik(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys, Cplx lambda,
               Cplx p, Cplx gamma) {
    check_nome(p, "z8vsos_ik");
    if (n < 0) throw Error("z8vsos_ik: negative size");
    if (static_cast<long>(xs.size()) != n || static_cast<long>(ys.size()) != n)
        throw Error("z8vsos_ik: parameter count mismatch");
    if (lambda == Cplx(0.0) || gamma == Cplx(0.0))
        throw ZeroArgument("z8vsos_ik: lambda and gamma must be nonzero");
    for (const Cplx& v : xs)
        if (v == Cplx(0.0)) throw ZeroArgument("z8vsos_ik: zero row parameter");
    for (const Cplx& v : ys)
        if (v == Cplx(0.0)) throw ZeroArgument("z8vsos_ik: zero column parameter");
    if (n == 0) return 1.0;
    constexpr double pole_floor = 1e-10;
    auto th = [&](Cplx x) { return theta_eval(x, p); };
    auto guarded = [&](Cplx x, const char* where) {
        const Cplx v = th(x);
        if (std::abs(v) < pole_floor)
            throw PoleProximity(std::string("z8vsos_ik: denominator theta nearly vanishes (") +
                                where + ")");
        return v;
    };
    const Cplx w = omega_pow(1);
    Cplx x_all = 1.0, y_all = 1.0;
    for (long i = 0; i < n; ++i) {
        x_all *= xs[i];
        y_all *= ys[i];
    }

    Cplx pref = th(lambda * omega_pow(n));
    pref /= cplx_pow(guarded(w, "theta(omega)"), n * n);
    pref /= cplx_pow(guarded(gamma, "theta(gamma)"), n);
    pref /= cplx_pow(y_all, n + 1);
    pref /= guarded(x_all * lambda * gamma * omega_pow(n) / y_all, "balancing theta");
    if ((n * (n - 1) / 2) % 2 == 1) pref = -pref;

    Cplx bracket = 1.0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            bracket *= ys[j] * ys[j] * th(xs[i] / ys[j]) * th(w * xs[i] / ys[j]);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < j; ++i)
            bracket /= xs[j] * ys[j] * guarded(xs[i] / xs[j], "row spacing") *
                       guarded(ys[i] / ys[j], "column spacing");

    Cplx total = 0.0;
    std::vector<std::vector<Cplx>> m(n, std::vector<Cplx>(n));
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        const int bits = std::popcount(mask);
        const Cplx front = th(lambda * gamma * omega_pow(n - bits)) /
                           guarded(lambda * omega_pow(n - bits), "colour-shift weight");
        for (long i = 0; i < n; ++i) {
            const Cplx xi = ((mask >> i) & 1ul) ? xs[i] * w : xs[i];
            for (long j = 0; j < n; ++j)
                m[i][j] = th(gamma * xi / ys[j]) / guarded(xi / ys[j], "determinant entry");
        }
        const Cplx d = det_lu(m);
        total += (bits % 2 ? -1.0 : 1.0) * front * d;
    }
    return pref * bracket * total;
}

double recursion_residual(long n, std::vector<Cplx> xs, const std::vector<Cplx>& ys, Cplx lambda,
                          Cplx p) {
    if (n < 1) throw Error("recursion_residual: need n >= 1");
    if (static_cast<long>(xs.size()) != n || static_cast<long>(ys.size()) != n)
        throw Error("recursion_residual: parameter count mismatch");
    xs[0] = omega_pow(2) * ys[0];
    const Cplx lhs = z8vsos_brute(n, xs, ys, lambda, p);
    Cplx pref = omega_pow(n + 1) * theta_eval(lambda * omega_pow(n), p) /
                (theta_eval(lambda * omega_pow(n - 1), p) *
                 cplx_pow(theta_eval(omega_pow(1), p), 2 * n - 2));
    for (long k = 1; k < n; ++k)
        pref *= theta_eval(ys[0] * omega_pow(2) / ys[k], p) * theta_eval(xs[k] / ys[0], p);
    const std::vector<Cplx> xr(xs.begin() + 1, xs.end());
    const std::vector<Cplx> yr(ys.begin() + 1, ys.end());
    const Cplx rhs = pref * z8vsos_brute(n - 1, xr, yr, lambda, p);
    return rel_err(lhs, rhs);
}

double crossing_residual(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                         Cplx lambda, Cplx p) {
    if (n < 0) throw Error("crossing_residual: negative size");
    if (static_cast<long>(xs.size()) != n || static_cast<long>(ys.size()) != n)
        throw Error("crossing_residual: parameter count mismatch");
    std::vector<Cplx> xi(n), yi(n);
    Cplx x_all = 1.0, y_all = 1.0;
    for (long i = 0; i < n; ++i) {
        xi[i] = omega_pow(2) / xs[i];
        yi[i] = 1.0 / ys[i];
        x_all *= xs[i];
        y_all *= ys[i];
    }
    const Cplx lhs = z8vsos_brute(n, xi, yi, omega_pow(2 * n) / lambda, p);
    const Cplx rhs = omega_pow(n * (n - 1)) * theta_eval(lambda, p) * cplx_pow(y_all, n) /
                     (theta_eval(lambda * omega_pow(n), p) * cplx_pow(x_all, n)) *
                     z8vsos_brute(n, xs, ys, lambda, p);
    return rel_err(lhs, rhs);
}

double lambda_period_residual(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                              Cplx lambda, Cplx p, Cplx gamma) {
    if (n < 1) throw Error("lambda_period_residual: need n >= 1");
    auto g = [&](Cplx l) {
        return theta_eval(l * omega_pow(n + 1), p) * theta_eval(l * omega_pow(n + 2), p) *
               z8vsos_ik(n, xs, ys, l, p, gamma);
    };
    Cplx x_all = 1.0, y_all = 1.0;
    for (long i = 0; i < n; ++i) {
        x_all *= xs[i];
        y_all *= ys[i];
    }
    const Cplx t = omega_pow(2 * n) * y_all / x_all;
    const Cplx lhs = g(p * lambda) * t * lambda * lambda;
    const Cplx rhs = g(lambda);
    return rel_err(lhs, rhs);
}

double cyclic_sum_residual(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                           Cplx lambda, Cplx p) {
    if (n < 1) throw Error("cyclic_sum_residual: need n >= 1");
    if (static_cast<long>(xs.size()) != n || static_cast<long>(ys.size()) != n)
        throw Error("cyclic_sum_residual: parameter count mismatch");
    auto twisted = [&](Cplx x1, Cplx l) {
        std::vector<Cplx> xv = xs;
        xv[0] = x1;
        std::vector<Cplx> all = xv;
        all.insert(all.end(), ys.begin(), ys.end());
        Cplx delta = 1.0;
        for (std::size_t j = 1; j < all.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) delta *= all[j] * theta_eval(all[i] / all[j], p);
        std::vector<Cplx> wx = xv;
        for (Cplx& v : wx) v *= omega_pow(1);
        return theta_eval(l * omega_pow(n + 1), p) * theta_eval(l * omega_pow(n + 2), p) * delta *
               z8vsos_brute(n, wx, ys, l, p);
    };
    Cplx total = 0.0;
    double largest = 0.0;
    for (long k = 0; k < 3; ++k) {
        const Cplx f = twisted(omega_pow(k) * xs[0], omega_pow(-k) * lambda);
        total += f;
        largest = std::max(largest, std::abs(f));
    }
    return largest == 0.0 ? 0.0 : std::abs(total) / largest;
}

// ---------- modular constants ----------

ModularResiduals modular_residuals(Cplx p) { return residuals_of(compute_modular(p), p); }

ModularConstants modular_constants(Cplx p, double tol) {
    const ModularConstants mc = compute_modular(p);
    const ModularResiduals r = residuals_of(mc, p);
    const double worst = std::max({r.zeta_eta, r.tau_eta, r.tau_cube});
    if (!(worst <= tol)) {
        std::ostringstream os;
        os << "modular_constants: cross-check residual " << std::scientific
           << std::setprecision(3) << worst << " exceeds tolerance " << tol << " at p = ("
           << p.real() << ", " << p.imag() << ")";
        throw IdentityViolation(os.str());
    }
    return mc;
}

std::array<Cplx, 3> theta_colour_weights(Cplx lambda, Cplx p) {
    std::array<Cplx, 3> t;
    for (long k = 0; k < 3; ++k) t[k] = 1.0 / cplx_pow(theta_eval(lambda * omega_pow(k), p), 3);
    return t;
}

double surface_sum_residual(Cplx lambda_a, Cplx lambda_b, Cplx p) {
    return rel_err(surface_sum(lambda_a, p), surface_sum(lambda_b, p));
}

double surface_cube_residual(Cplx lambda, Cplx p) {
    return rel_err(cplx_pow(surface_sum(lambda, p), 3), weight_invariant(lambda, p));
}

double surface_invariant_residual(Cplx lambda, Cplx p) {
    const ModularConstants mc = modular_constants(p);
    const Cplx z = mc.zeta;
    const Cplx rhs = 2.0 * cplx_pow(z * z + 4.0 * z + 1.0, 3) / (z * cplx_pow(z + 1.0, 4));
    return rel_err(weight_invariant(lambda, p), rhs);
}

double three_colour_link_residual(long n, const TriPoly& z, Cplx lambda, Cplx p) {
    if (n < 0) throw Error("three_colour_link_residual: negative size");
    const std::array<Cplx, 3> t = theta_colour_weights(lambda, p);
    const Cplx lhs = tripoly_eval(z, t[0], t[1], t[2]);
    const std::vector<Cplx> xs(n, omega_pow(1));
    const std::vector<Cplx> ys(n, Cplx(1.0));
    const Cplx zv = z8vsos_brute(n, xs, ys, lambda, p);
    const Cplx rhs =
        omega_pow(n * (n + 1)) *
        cplx_pow(theta_eval(lambda * omega_pow(2), p) * theta_eval(lambda * omega_pow(n + 1), p),
                 2) /
        (theta_eval(lambda * omega_pow(n), p) *
         cplx_pow(theta_eval(lambda * lambda * lambda, p * p * p), n * n + 2 * n + 2)) *
        zv;
    return rel_err(lhs, rhs);
}

double theta_closed_form_residual(long n, const TriPoly& z, const PFamily& fam, Cplx lambda,
                                  Cplx p) {
    if (n < 1) throw Error("theta_closed_form_residual: need n >= 1");
    const ModularConstants mc = modular_constants(p);
    const std::array<Cplx, 3> t = theta_colour_weights(lambda, p);
    const Cplx lhs = tripoly_eval(z, t[0], t[1], t[2]);
    const Cplx zv = mc.zeta;
    const Cplx pm = ratpoly_eval_cplx(p_poly(fam, n - 1), zv);
    const Cplx pt = ratpoly_eval_cplx(p_tilde(fam, n - 1), zv);
    const Cplx p2 = p * p;
    auto th = [&](Cplx v) { return theta_eval(v, p); };
    auto th2 = [&](Cplx v) { return theta_eval(v, p2); };
    const Cplx w = omega_pow(1);
    const Cplx common =
        cplx_pow(th(lambda * omega_pow(2)) * th(lambda * omega_pow(n + 1)), 2) /
        (th2(p) * cplx_pow(mc.eta, quarter_square(n)) *
         cplx_pow(theta_eval(lambda * lambda * lambda, p * p * p), n * n + 2 * n + 3));
    const Cplx lam2 = lambda * lambda;
    Cplx bracket;
    if (n % 2 == 0) {
        bracket = cplx_pow(zv, n / 2) * pt * th2(-p * w) * th2(-omega_pow(n) * lam2) -
                  omega_pow(1 - n) * lambda * pm * th2(-w) * th2(-p * omega_pow(n) * lam2);
    } else {
        bracket = pm * th2(-p) * th2(-omega_pow(n) * lam2) -
                  omega_pow(-n) * lambda * cplx_pow(zv, (n - 1) / 2) * pt * th2(Cplx(-1.0)) *
                      th2(-p * omega_pow(n) * lam2);
    }
    return rel_err(lhs, common * bracket);
}

Cplx trig_surface_value(long n, Cplx lambda) {
    if (n < 1) throw Error("trig_surface_value: need n >= 1");
    const double an = rat_to_double(Rat(asm_count(n)));
    const double cn = rat_to_double(Rat(cspp_count(n)));
    const Cplx l3 = lambda * lambda * lambda;
    const Cplx pref = cplx_pow(1.0 - lambda * omega_pow(2), 2) *
                      cplx_pow(1.0 - lambda * omega_pow(n + 1), 2) /
                      cplx_pow(1.0 - l3, n * n + 2 * n + 3);
    const double sgn = n % 2 == 0 ? 1.0 : -1.0;
    const Cplx tail =
        an * (1.0 + omega_pow(n) * lambda * lambda) + sgn * cn * omega_pow(2 * n) * lambda;
    return pref * tail;
}

double trigonometric_formula_residual(long n, const TriPoly& z, Cplx lambda) {
    std::array<Cplx, 3> t;
    for (long k = 0; k < 3; ++k) t[k] = 1.0 / cplx_pow(1.0 - lambda * omega_pow(k), 3);
    const Cplx lhs = tripoly_eval(z, t[0], t[1], t[2]);
    return rel_err(lhs, trig_surface_value(n, lambda));
}

} // namespace threecolour
