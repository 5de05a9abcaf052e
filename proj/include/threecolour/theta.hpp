#ifndef THREECOLOUR_THETA_HPP
#define THREECOLOUR_THETA_HPP

#include <array>
#include <complex>
#include <vector>

#include <gmpxx.h>

#include "threecolour/pfamily.hpp"
#include "threecolour/ratpoly.hpp"
#include "threecolour/tripoly.hpp"

namespace threecolour {

using Cplx = std::complex<double>;

// exp(2 pi i k / 3) for any integer k, from an exact three-entry table.
Cplx omega_pow(long k);

// b^e for integer e; negative e inverts. Binary powering.
Cplx cplx_pow(Cplx b, long e);

// Horner evaluation of an exact-coefficient polynomial at a complex point.
Cplx ratpoly_eval_cplx(const RatPoly& f, Cplx x);

// Smallest J >= 1 with abs_p^J below the floor. Throws NomeOutOfRange unless
// 0 < abs_p < 1.
long theta_trunc_order(double abs_p, double floor_value);

// theta(x; p) = prod_{j>=0} (1 - p^j x)(1 - p^{j+1} / x), truncated once the
// running power of p drops below the floor. Throws ZeroArgument on x = 0 and
// NomeOutOfRange when p is not inside the punctured unit disc.
Cplx theta_eval(Cplx x, Cplx p, double floor_value = 1e-18);

// prod_{j>=1} (1 - p^j), same truncation rule.
Cplx qpochhammer_inf(Cplx p, double floor_value = 1e-18);

// ---------- extended precision ----------

// Minimal complex arithmetic over GMP floats, enough for the theta products
// when double precision is not: moduli of p up to about 0.5.
struct BigComplex {
    mpf_class re, im;
    BigComplex() : re(0), im(0) {}
    BigComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, unsigned long bits) : re(r, bits), im(i, bits) {}
};

BigComplex big_from(Cplx z, unsigned long bits);
Cplx big_to_cplx(const BigComplex& z);
BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
mpf_class big_abs(const BigComplex& z);

// Same product as theta_eval at `bits` mantissa bits; the truncation floor is
// 2^-(bits+16) so truncation stays below rounding.
BigComplex big_theta_eval(const BigComplex& x, const BigComplex& p, unsigned long bits);

// Pins the nome, the truncation order and the precision mode in one place.
// precision_bits = 0 selects plain double arithmetic.
struct ThetaContext {
    Cplx p;
    long trunc_order;
    unsigned long precision_bits;
    explicit ThetaContext(Cplx p, unsigned long precision_bits = 0);
    Cplx theta(Cplx x) const;
    BigComplex theta_big(const BigComplex& x) const; // requires precision_bits > 0
};

// ---------- identity residuals (relative, dimensionless) ----------

// theta(1/x; p) against -theta(x; p)/x.
double theta_inversion_residual(Cplx x, Cplx p);
double theta_inversion_residual_big(Cplx x, Cplx p, unsigned long bits);

// theta(p x; p) against -theta(x; p)/x.
double theta_shift_residual(Cplx x, Cplx p);

// Four-term addition rule
//   th(xz)th(x/z)th(yw)th(y/w) - th(xw)th(x/w)th(yz)th(y/z)
//     = (y/z) th(xy)th(x/y)th(zw)th(z/w).
double theta_addition_residual(Cplx x, Cplx y, Cplx z, Cplx w, Cplx p);
double theta_addition_residual_big(Cplx x, Cplx y, Cplx z, Cplx w, Cplx p, unsigned long bits);

// Quintuple product:
//   th(x;p) th(sx;p) th(-sx;p) with s = sqrt(p) equals
//   [(p^3;p^3)_inf / (p;p)_inf] (th(-p x^3; p^3) - x th(-p x^-3; p^3)).
double quintuple_product_residual(Cplx x, Cplx p);

// Half-period values at nome p^2:
//   th(-1;p^2) th(p;p^2) th(-p;p^2) = 2,
//   th(-w;p^2) th(pw;p^2) th(-pw;p^2) = -w^2,  w = omega.
double two_torsion_residual(Cplx p);

// ---------- solid-on-solid partition sum ----------

// Statistical weights attached to each 2x2 block of a board. a, b, c, d are
// the colours read off as (top-left, top-right / bottom-left, bottom-right);
// u is the ratio x_row / y_col of the row and column spectral parameters.
// Only adjacent-distinct blocks carry a weight; six shapes occur.
struct VertexWeights {
    Cplx lambda, p;
    Cplx block_weight(int a, int b, int c, int d, Cplx u) const;
};

// Weighted sum over all boards of the product of block weights. Exponential
// in n^2; refuses n > 4. n = 0 gives 1.
Cplx z8vsos_brute(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                  Cplx lambda, Cplx p);

// The same sum in closed form: a single determinant summed over colour shifts
// of the rows. gamma is a free deformation parameter; the result must not
// depend on it. Throws PoleProximity when a denominator theta falls within
// 1e-10 of zero.
Cplx z8vsos_ik(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
               Cplx lambda, Cplx p, Cplx gamma);

// Setting x_1 = w^2 y_1 strips one row and column:
//   Z_n = w^{n+1} th(lw^n) / (th(lw^{n-1}) th(w)^{2n-2})
//         * prod_{k>=2} th(y_1 w^2 / y_k) th(x_k / y_1) * Z_{n-1}.
// xs is taken by value; its first entry is overwritten by the constraint.
double recursion_residual(long n, std::vector<Cplx> xs, const std::vector<Cplx>& ys,
                          Cplx lambda, Cplx p);

// Inverting all parameters maps the sum to itself up to an explicit factor:
//   Z_n(w^2/x; 1/y; w^{2n}/l) = w^{n(n-1)} th(l) Y^n / (th(lw^n) X^n) Z_n(x; y; l).
double crossing_residual(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                         Cplx lambda, Cplx p);

// g(l) = th(lw^{n+1}) th(lw^{n+2}) Z_n(x; y; l) obeys g(pl) t l^2 = g(l) with
// t = w^{2n} Y / X. Evaluated through the determinant form.
double lambda_period_residual(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                              Cplx lambda, Cplx p, Cplx gamma);

// F(x; y; l) = th(lw^{n+1}) th(lw^{n+2}) Delta(x, y) Z_n(wx; y; l), with
// Delta the theta Vandermonde over the concatenated 2n parameters, sums to
// zero over the three twists (x_1, l) -> (w^k x_1, w^-k l).
double cyclic_sum_residual(long n, const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                           Cplx lambda, Cplx p);

// ---------- modular constants ----------

struct ModularConstants {
    Cplx zeta, eta, tau;
};

// Relative residuals of the three relations tying the constants together:
//   zeta (zeta+1)^4 = 2 eta^3,
//   tau eta = zeta^2 + 4 zeta + 1,
//   tau^3 = 27 (1 + 27 p (p^3;p^3)_inf^12 / (p;p)_inf^12).
struct ModularResiduals {
    double zeta_eta, tau_eta, tau_cube;
};

ModularResiduals modular_residuals(Cplx p);

// zeta(p), eta(p) from theta quotients at nome p^2 and
// tau(p) = 3 (1 + 9 p (p^9;p^9)_inf^3 / (p;p)_inf^3), cross-checked against
// the relations above; a residual over tol raises IdentityViolation with the
// residual in the message.
ModularConstants modular_constants(Cplx p, double tol = 1e-10);

// Colour weights t_i = theta(lambda w^i; p)^-3, i = 0, 1, 2.
std::array<Cplx, 3> theta_colour_weights(Cplx lambda, Cplx p);

// s(l) = sum_i theta(l w^i; p)^3 / theta(l^3; p^3) is independent of l.
double surface_sum_residual(Cplx lambda_a, Cplx lambda_b, Cplx p);

// s(l)^3 against e2^3 / e3^2 of the colour weights (tests the triple product
// t0 t1 t2 = theta(l^3; p^3)^-3).
double surface_cube_residual(Cplx lambda, Cplx p);

// e2^3 / e3^2 of the colour weights against 2 (z^2+4z+1)^3 / (z (z+1)^4)
// at z = zeta(p).
double surface_invariant_residual(Cplx lambda, Cplx p);

// Exact census polynomial at the colour weights against the weighted board
// sum at ratios u = w:
//   Z3C(t) = w^{n(n+1)} th(lw^2)^2 th(lw^{n+1})^2
//            / (th(lw^n) th(l^3;p^3)^{n^2+2n+2}) * Z_n(w,..,w; 1,..,1; l).
double three_colour_link_residual(long n, const TriPoly& z, Cplx lambda, Cplx p);

// Exact census polynomial at the colour weights against the two-term closed
// form built from the polynomial pair evaluated at zeta(p).
double theta_closed_form_residual(long n, const TriPoly& z, const PFamily& fam,
                                  Cplx lambda, Cplx p);

// Closed form of the census polynomial at t_i = (1 - lambda w^i)^-3:
//   (1-lw^2)^2 (1-lw^{n+1})^2 / (1-l^3)^{n^2+2n+3}
//     * (A_n (1 + w^n l^2) + (-1)^n C_n w^{2n} l)
// with A_n the alternating-sign count and C_n the cyclically symmetric
// plane-partition count.
Cplx trig_surface_value(long n, Cplx lambda);
double trigonometric_formula_residual(long n, const TriPoly& z, Cplx lambda);

} // namespace threecolour

#endif
