#include "threecolour/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <utility>

#include <json.hpp>

#include "threecolour/errors.hpp"
#include "threecolour/qrfamily.hpp"
#include "threecolour/theta.hpp"

namespace threecolour {

namespace {

using Cd = std::complex<double>;

// ---------- numeric root machinery ----------

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|a_k|), so clusters of very different magnitude each get seeded at
// roughly the right scale.
std::vector<Cd> initial_points(const std::vector<double>& logabs) {
    long deg = static_cast<long>(logabs.size()) - 1;
    std::vector<long> ks;
    for (long k = 0; k <= deg; ++k)
        if (std::isfinite(logabs[k])) ks.push_back(k);
    std::vector<long> hull;
    for (long k : ks) {
        while (hull.size() >= 2) {
            long o = hull[hull.size() - 2], a = hull[hull.size() - 1];
            double cross = double(a - o) * (logabs[k] - logabs[o]) -
                           (logabs[a] - logabs[o]) * double(k - o);
            if (cross >= 0) hull.pop_back(); else break;
        }
        hull.push_back(k);
    }
    std::vector<Cd> z;
    z.reserve(deg);
    const double two_pi = 2 * M_PI;
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        long k1 = hull[e], k2 = hull[e + 1];
        long m = k2 - k1;
        double r = std::exp((logabs[k1] - logabs[k2]) / double(m));
        double phase = 0.4 + 0.9 * double(e);
        for (long j = 0; j < m; ++j) {
            double th = two_pi * (double(j) + 0.5) / double(m) + phase;
            z.push_back(Cd(r * std::cos(th), r * std::sin(th)));
        }
    }
    return z;
}

void horner(const std::vector<double>& a, Cd z, Cd& p, Cd& dp) {
    long deg = static_cast<long>(a.size()) - 1;
    p = Cd(a[deg], 0);
    dp = Cd(0, 0);
    for (long k = deg - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
}

// Simultaneous Aberth-Ehrlich sweeps in double precision.
void aberth(const std::vector<double>& a, std::vector<Cd>& z) {
    const long n = static_cast<long>(z.size());
    // Double precision cannot settle roots of badly cancelling polynomials;
    // this stage only has to rough out the configuration for the
    // extended-precision sweeps, so it gives up after a modest budget.
    for (int pass = 0; pass < 150; ++pass) {
        double worst = 0;
        for (long i = 0; i < n; ++i) {
            Cd p, dp;
            horner(a, z[i], p, dp);
            if (p == Cd(0, 0)) continue;
            if (dp == Cd(0, 0)) {
                z[i] += Cd(1e-8, 1e-8);
                worst = 1;
                continue;
            }
            Cd newton = p / dp;
            Cd s(0, 0);
            for (long j = 0; j < n; ++j)
                if (j != i) {
                    Cd d = z[i] - z[j];
                    if (d == Cd(0, 0)) d = Cd(1e-14, 1e-14);
                    s += Cd(1, 0) / d;
                }
            Cd denom = Cd(1, 0) - newton * s;
            Cd w = denom == Cd(0, 0) ? newton : newton / denom;
            z[i] -= w;
            if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()))
                z[i] = Cd(0.5 * double(i + 1) / double(n), 0.3);
            worst = std::max(worst, std::abs(w) / (1 + std::abs(z[i])));
        }
        if (worst < 5e-14) break;
    }
}

struct BigPoly {
    std::vector<BigComplex> c; // real coefficients, stored with zero imaginary part
    unsigned long bits;
};

BigPoly to_big(const RatPoly& p, unsigned long bits) {
    BigPoly b;
    b.bits = bits;
    b.c.reserve(p.c.size());
    for (const Rat& q : p.c)
        b.c.push_back(BigComplex(mpf_class(q, bits), mpf_class(0, bits)));
    return b;
}

void big_horner(const BigPoly& a, const BigComplex& z, BigComplex& p, BigComplex& dp) {
    long deg = static_cast<long>(a.c.size()) - 1;
    p = a.c[deg];
    dp = BigComplex(mpf_class(0, a.bits), mpf_class(0, a.bits));
    for (long k = deg - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a.c[k];
    }
}

// Aberth sweeps in extended precision. The double-precision pass cannot
// resolve roots where the polynomial cancels many digits below its largest
// terms, so the final configuration is settled at full working precision.
void aberth_big(const BigPoly& big, std::vector<BigComplex>& z, unsigned long bits) {
    const long n = static_cast<long>(z.size());
    const mpf_class tol(1e-60, bits);
    const mpf_class stall_floor(1e-30, bits);
    const BigComplex one(mpf_class(1, bits), mpf_class(0, bits));
    mpf_class best(1e300, bits);
    int stall = 0;
    for (int pass = 0; pass < 400; ++pass) {
        mpf_class worst(0, bits);
        for (long i = 0; i < n; ++i) {
            BigComplex p, dp;
            big_horner(big, z[i], p, dp);
            if (big_abs(p) == 0) continue;
            if (big_abs(dp) == 0) {
                z[i] = z[i] + BigComplex(1e-8, 1e-8, bits);
                worst = 1;
                continue;
            }
            BigComplex newton = p / dp;
            BigComplex s(mpf_class(0, bits), mpf_class(0, bits));
            for (long j = 0; j < n; ++j)
                if (j != i) {
                    BigComplex d = z[i] - z[j];
                    if (big_abs(d) == 0) d = BigComplex(1e-30, 1e-30, bits);
                    s = s + one / d;
                }
            BigComplex denom = one - newton * s;
            BigComplex w = big_abs(denom) == 0 ? newton : newton / denom;
            z[i] = z[i] - w;
            mpf_class rel = big_abs(w) / (1 + big_abs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
        // The corrections bottom out at the evaluation noise of the
        // configuration; once they stop improving there is nothing left
        // to gain from further sweeps.
        if (worst < best) {
            best = worst;
            stall = 0;
        } else if (++stall >= 5 && best < stall_floor) {
            break;
        }
    }
}

bool root_less(const NumericRoot& a, const NumericRoot& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

// ---------- interval ordering ----------

// True when the root isolated by a is certainly smaller than the one
// isolated by b; valid only after the intervals were made disjoint.
bool interval_before(const RootInterval& a, const RootInterval& b) {
    if (a.exact() && b.exact()) return a.lo < b.lo;
    if (a.exact()) return a.lo <= b.lo;
    if (b.exact()) return a.hi <= b.lo;
    return a.hi <= b.lo;
}

// Roots of `first` and `second` strictly alternate starting with `first`:
// f_1 < s_1 < f_2 < s_2 < ... Sizes must be equal or differ by one.
bool strictly_alternating(const RatPoly& pf, std::vector<RootInterval> rf,
                          const RatPoly& ps, std::vector<RootInterval> rs) {
    if (rf.empty()) return rs.empty();
    if (rf.size() != rs.size() && rf.size() != rs.size() + 1) return false;
    for (const auto& iv : rf)
        if (iv.multiplicity != 1) return false;
    for (const auto& iv : rs)
        if (iv.multiplicity != 1) return false;
    if (rs.empty()) return rf.size() == 1;
    if (poly_gcd(pf, ps).degree() != 0) return false;
    refine_until_disjoint(squarefree_part(pf), rf, squarefree_part(ps), rs);
    for (size_t i = 0; i < rs.size(); ++i) {
        if (!interval_before(rf[i], rs[i])) return false;
        if (i + 1 < rf.size() && !interval_before(rs[i], rf[i + 1])) return false;
    }
    return true;
}

// All real roots of p lie strictly below `bound`.
bool all_roots_below(const RatPoly& p, const Rat& bound) {
    long total = count_real_roots(p);
    if (total == 0) return true;
    Rat b = cauchy_root_bound(p) + 1;
    if (p.eval(bound) == 0) return false;
    return count_real_roots(p, -b, bound) == total;
}

long pick_argmax(const RatPoly& p) {
    long best = 0;
    for (long k = 1; k <= p.degree(); ++k)
        if (p.coeff(k) > p.coeff(best)) best = k;
    return best;
}

bool poly_is_integral(const RatPoly& p) {
    for (const Rat& q : p.c)
        if (!is_integer(q)) return false;
    return true;
}

double cubic_richardson(const long n[3], const double f[3]) {
    // Quadratic in x = 1/n through three samples, evaluated at x = 0.
    double x[3] = {1.0 / double(n[0]), 1.0 / double(n[1]), 1.0 / double(n[2])};
    double out = 0;
    for (int i = 0; i < 3; ++i) {
        double w = 1;
        for (int j = 0; j < 3; ++j)
            if (j != i) w *= x[j] / (x[j] - x[i]);
        out += w * f[i];
    }
    return out;
}

} // namespace

// ---------- numeric roots ----------

namespace {

// Refined points for every root of p. Roots at the origin come first as
// exact zeros; the rest are settled by double Aberth sweeps followed by
// extended-precision sweeps against the exact coefficients.
std::vector<BigComplex> refine_all_roots(const RatPoly& p, unsigned long bits) {
    if (p.is_zero()) throw Error("numeric_roots: zero polynomial");
    std::vector<BigComplex> out;
    if (p.degree() <= 0) return out;

    RatPoly q = p;
    long zeros = 0;
    if (q.coeff(0) == 0) {
        zeros = trailing_valuation(q);
        std::vector<Rat> shifted(q.c.begin() + zeros, q.c.end());
        q = RatPoly(std::move(shifted));
    }
    for (long i = 0; i < zeros; ++i)
        out.push_back(BigComplex(mpf_class(0, bits), mpf_class(0, bits)));

    long deg = q.degree();
    if (deg == 1) {
        Rat r = -q.coeff(0) / q.coeff(1);
        out.push_back(BigComplex(mpf_class(r, bits), mpf_class(0, bits)));
    } else if (deg >= 2) {
        Rat scale(0);
        for (const Rat& c : q.c) {
            Rat a = abs(c);
            if (a > scale) scale = a;
        }
        std::vector<double> a(deg + 1), logabs(deg + 1);
        for (long k = 0; k <= deg; ++k) {
            Rat norm = q.coeff(k) / scale;
            a[k] = rat_to_double(norm);
            Rat mag = abs(q.coeff(k));
            logabs[k] = mag == 0 ? -HUGE_VAL : log_rat(mag) - log_rat(scale);
        }
        std::vector<Cd> z = initial_points(logabs);
        aberth(a, z);
        BigPoly big = to_big(q, bits);
        std::vector<BigComplex> zb;
        zb.reserve(z.size());
        for (const Cd& zi : z) zb.push_back(big_from(zi, bits));
        aberth_big(big, zb, bits);
        for (BigComplex& zi : zb) out.push_back(std::move(zi));
    }
    return out;
}

} // namespace

std::vector<NumericRoot> numeric_roots(const RatPoly& p, unsigned long bits) {
    std::vector<NumericRoot> out;
    for (const BigComplex& z : refine_all_roots(p, bits)) {
        Cd c = big_to_cplx(z);
        out.push_back({c.real(), c.imag()});
    }
    std::sort(out.begin(), out.end(), root_less);
    return out;
}

// ---------- root profile ----------

ChainVerdict zp_chain(const PFamily& fam, long m) {
    if (m < 0 || 2 * m + 2 > fam.nmax())
        throw Error("zp_chain: family too short for the requested triple");
    ChainVerdict v;
    v.m = m;
    RatPoly pa = p_poly(fam, 2 * m);
    RatPoly pb = p_tilde(fam, 2 * m + 1);
    RatPoly pc = p_poly(fam, 2 * m + 2);
    auto ra = isolate_real_roots(pa);
    auto rb = isolate_real_roots(pb);
    auto rc = isolate_real_roots(pc);
    v.counts_ok = static_cast<long>(ra.size()) == m &&
                  static_cast<long>(rb.size()) == m + 1 &&
                  static_cast<long>(rc.size()) == m + 1;
    if (!v.counts_ok) return v;
    Rat edge(-2);
    v.ab_pattern = strictly_alternating(pb, rb, pa, ra) &&
                   all_roots_below(pb, edge) && all_roots_below(pa, edge);
    v.bc_pattern = strictly_alternating(pb, rb, pc, rc) && all_roots_below(pc, edge);
    return v;
}

RootReport root_profile(const PFamily& fam, long n) {
    if (n < 0 || n > fam.nmax()) throw Error("root_profile: index outside the built family");
    RatPoly p = p_poly(fam, n);
    RootReport rep;
    rep.n = n;
    rep.degree = p.degree();
    RatPoly sf = squarefree_part(p);
    rep.squarefree = sf.degree() == p.degree();
    rep.expected_real = (n + 1) / 2;

    rep.real_intervals = isolate_real_roots(p);
    rep.real_count = static_cast<long>(rep.real_intervals.size());
    rep.count_matches = rep.real_count == rep.expected_real;

    if (rep.real_count == 0) {
        rep.location_ok = true;
    } else if (n % 2 == 1) {
        rep.location_ok = count_real_roots(p, Rat(-1, 2), Rat(0)) == rep.real_count;
    } else {
        Rat b = cauchy_root_bound(p) + 1;
        rep.location_ok = count_real_roots(p, -b, Rat(-2)) == rep.real_count;
    }

    Int width_den = Int(1) << 240;
    Rat width(Int(1), width_den);
    for (auto& iv : rep.real_intervals)
        if (!iv.exact()) refine_interval(sf, iv, width);

    const unsigned long bits = 256;
    std::vector<BigComplex> refined = refine_all_roots(p, bits);
    rep.roots.clear();
    for (const BigComplex& z : refined) {
        Cd c = big_to_cplx(z);
        rep.roots.push_back({c.real(), c.imag()});
    }
    // Snap the numeric root nearest each certified interval onto the exact
    // real axis, then close what is left into conjugate pairs.
    std::vector<char> used(rep.roots.size(), 0);
    for (const auto& iv : rep.real_intervals) {
        double target = rat_to_double(iv.mid());
        long best = -1;
        double bd = HUGE_VAL;
        for (size_t i = 0; i < rep.roots.size(); ++i) {
            if (used[i]) continue;
            double d = std::hypot(rep.roots[i].re - target, rep.roots[i].im);
            if (d < bd) {
                bd = d;
                best = static_cast<long>(i);
            }
        }
        if (best >= 0) {
            used[best] = 1;
            rep.roots[best] = {target, 0.0};
            refined[best] = BigComplex(mpf_class(iv.mid(), bits), mpf_class(0, bits));
        }
    }
    std::vector<long> pos, neg;
    bool stray = false;
    for (size_t i = 0; i < rep.roots.size(); ++i) {
        if (used[i]) continue;
        double tiny = 1e-30 * (1 + std::abs(rep.roots[i].re));
        if (rep.roots[i].im > tiny) pos.push_back(static_cast<long>(i));
        else if (rep.roots[i].im < -tiny) neg.push_back(static_cast<long>(i));
        else stray = true;
    }
    rep.pairing_ok = !stray && pos.size() == neg.size();
    if (rep.pairing_ok) {
        std::vector<char> taken(rep.roots.size(), 0);
        for (long i : pos) {
            long mate = -1;
            double bd = HUGE_VAL;
            for (long j : neg) {
                if (taken[j]) continue;
                double d = std::hypot(rep.roots[i].re - rep.roots[j].re,
                                      rep.roots[i].im + rep.roots[j].im);
                if (d < bd) {
                    bd = d;
                    mate = j;
                }
            }
            if (mate < 0) {
                rep.pairing_ok = false;
                break;
            }
            taken[mate] = 1;
            double re = 0.5 * (rep.roots[i].re + rep.roots[mate].re);
            double im = 0.5 * (rep.roots[i].im - rep.roots[mate].im);
            rep.roots[i] = {re, im};
            rep.roots[mate] = {re, -im};
        }
    }
    Rat scale(0);
    for (const Rat& c : p.c) {
        Rat a = abs(c);
        if (a > scale) scale = a;
    }
    rep.residual_bound = 1e-10 * rat_to_double(scale);
    BigPoly big = to_big(p, bits);
    rep.max_residual = 0;
    for (const BigComplex& z : refined) {
        BigComplex val, slope;
        big_horner(big, z, val, slope);
        rep.max_residual = std::max(rep.max_residual, big_abs(val).get_d());
    }
    rep.residual_ok = rep.max_residual <= rep.residual_bound;

    std::sort(rep.roots.begin(), rep.roots.end(), root_less);

    long m = n % 2 == 0 ? n / 2 : (n - 1) / 2;
    if (m >= 0 && 2 * m + 2 <= fam.nmax()) rep.chain = zp_chain(fam, m);
    return rep;
}

std::string zeros_csv(const RootReport& report) {
    std::vector<NumericRoot> roots = report.roots;
    std::sort(roots.begin(), roots.end(), root_less);
    std::string out = "re,im\n";
    char line[80];
    for (const auto& r : roots) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", r.re, r.im);
        out += line;
    }
    return out;
}

// ---------- coefficient conjectures ----------

ConjectureReport conjecture_scan(const PFamily& fam, long nmax) {
    if (nmax < 1 || nmax > 16) throw Error("conjecture_scan: nmax must lie in 1..16");
    if (nmax > fam.nmax()) throw Error("conjecture_scan: family too short");
    ConjectureReport rep;
    rep.nmax = nmax;
    rep.all_positive = true;
    rep.all_unimodal = true;
    for (long n = 1; n <= nmax; ++n) {
        RatPoly p = p_poly(fam, n);
        long deg = p.degree();
        ConjectureRow row;
        row.n = n;

        row.positive = true;
        for (long k = 0; k <= deg; ++k)
            if (p.coeff(k) <= 0) {
                row.positive = false;
                break;
            }

        long k = 0;
        while (k < deg && p.coeff(k + 1) > p.coeff(k)) ++k;
        long peak = k;
        while (k < deg && p.coeff(k + 1) < p.coeff(k)) ++k;
        row.strictly_unimodal = k == deg;
        row.argmax = row.strictly_unimodal ? peak : pick_argmax(p);

        if (n % 2 == 0) row.expected_argmax = n * (n + 2) / 4;
        else if (n <= 7) row.expected_argmax = (n + 1) * (n + 1) / 4;
        else if (n <= 15) row.expected_argmax = (n - 1) * (n + 3) / 4;
        else row.expected_argmax = -1;
        row.argmax_matches = row.expected_argmax < 0 || row.argmax == row.expected_argmax;

        Int num, den;
        if (n % 2 == 0) {
            num = Int(n * n * (7 * n + 10)) * binomial(2 * n + 2, n + 1);
            den = (Int(1) << static_cast<unsigned long>((n + 8) / 2)) * Int(n + 2);
        } else {
            num = Int((n + 1) * (7 * n * n + 3 * n - 6)) * binomial(2 * n + 2, n + 1);
            den = (Int(1) << static_cast<unsigned long>((n + 7) / 2)) * Int(n + 2);
        }
        Rat expected(num, den);
        expected.canonicalize();
        row.second_highest_matches = p.coeff(deg - 1) == expected;

        rep.all_positive = rep.all_positive && row.positive;
        rep.all_unimodal = rep.all_unimodal && row.strictly_unimodal;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------- P_n(x, zeta) interlacing ----------

PxReport px_interlacing(const PFamily& fam, const Rat& zeta, long nmax) {
    if (!(zeta > Rat(-2) && zeta < Rat(-1, 2)) || zeta == Rat(-1))
        throw Error("px_interlacing: zeta must lie in (-2,-1/2) and differ from -1");
    if (nmax < 1 || nmax > fam.nmax()) throw Error("px_interlacing: family too short");
    PxReport rep;
    rep.zeta = zeta;
    rep.nmax = nmax;
    rep.all_ok = true;

    std::vector<RatPoly> at(nmax + 1);
    for (long n = 1; n <= nmax; ++n) at[n] = substitute_y_value(fam.P[n], zeta);

    for (long n = 1; n <= nmax; ++n) {
        const RatPoly& p = at[n];
        PxRow row;
        row.n = n;
        row.degree = p.degree();
        row.simple = poly_gcd(p, p.derivative()).degree() == 0;
        long real = count_real_roots(p);
        row.all_real = real == row.degree;
        Rat b = cauchy_root_bound(p) + 1;
        row.positive = count_real_roots(p, Rat(0), b) == row.degree;
        if (p.eval(Rat(1)) == 0) {
            row.in_window = false;
        } else if (zeta < Rat(-1)) {
            row.in_window = count_real_roots(p, Rat(1), b) == row.degree;
        } else {
            row.in_window = count_real_roots(p, Rat(0), Rat(1)) == row.degree;
        }
        row.interlaces_next = true;
        if (n < nmax) {
            auto rn = isolate_real_roots(p);
            auto rnext = isolate_real_roots(at[n + 1]);
            row.interlaces_next = static_cast<long>(rn.size()) == n &&
                                  static_cast<long>(rnext.size()) == n + 1 &&
                                  strictly_alternating(at[n + 1], rnext, p, rn);
        }
        rep.all_ok = rep.all_ok && row.simple && row.all_real && row.positive &&
                     row.in_window && row.interlaces_next;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------- integrality ----------

long mu_exponent(long n, long k) {
    long cap, span;
    if (n % 2 == 0) {
        cap = n * (n + 2) / 12;
        span = n * (n + 2) / 2 - k;
    } else {
        cap = (n + 1) * (n + 1) / 12;
        span = (n + 1) * (n + 1) / 2 - k;
    }
    return std::min(cap, std::min(k, span));
}

IntegralityReport integrality_report(const PFamily& fam, long nmax) {
    if (nmax < 1 || nmax > fam.nmax()) throw Error("integrality_report: family too short");
    IntegralityReport rep;
    rep.nmax = nmax;
    rep.all_ok = true;
    for (long n = 1; n <= nmax; ++n) {
        IntegralityRow row;
        row.n = n;
        auto qr = qr_polys(fam, n);
        row.q_integral = poly_is_integral(qr.first);
        row.r_integral = poly_is_integral(qr.second);

        RatPoly p = p_poly(fam, n);
        long s = n * (n + 2) / 2;
        row.scaled_p_integral = true;
        row.mu_bound_ok = true;
        for (long k = 0; k <= p.degree(); ++k) {
            Rat a = p.coeff(k);
            Int full_shift = Int(1) << static_cast<unsigned long>(s - k);
            Rat scaled = a * Rat(full_shift);
            scaled.canonicalize();
            if (!is_integer(scaled)) row.scaled_p_integral = false;
            Int mu_shift = Int(1) << static_cast<unsigned long>(mu_exponent(n, k));
            Rat bounded = a * Rat(mu_shift);
            bounded.canonicalize();
            if (!is_integer(bounded)) row.mu_bound_ok = false;
        }
        rep.all_ok = rep.all_ok && row.q_integral && row.r_integral &&
                     row.scaled_p_integral && row.mu_bound_ok;
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------- parameter inversion ----------

double t_parameter(double t0, double t1, double t2) {
    double e2 = t0 * t1 + t0 * t2 + t1 * t2;
    double e3 = t0 * t1 * t2;
    return e2 * e2 * e2 / (e3 * e3);
}

namespace {

double t_gap(double z, double T) {
    double u = z * z + 4 * z + 1;
    double w = 1 + z;
    return 2 * u * u * u - T * z * w * w * w * w;
}

double t_gap_deriv(double z, double T) {
    double u = z * z + 4 * z + 1;
    double w = 1 + z;
    return 6 * u * u * (2 * z + 4) - T * (w * w * w * w + 4 * z * w * w * w);
}

} // namespace

double zeta_from_T(double T, ZetaBranch branch) {
    if (!(T >= 27)) throw NoPositiveRoot("zeta_from_T: no positive solution below T = 27");
    if (T == 27) return 1.0;
    double lo = 0, hi = 1;
    for (int it = 0; it < 200 && hi - lo > 1e-300; ++it) {
        double mid = 0.5 * (lo + hi);
        if (t_gap(mid, T) > 0) lo = mid; else hi = mid;
    }
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        double d = t_gap_deriv(z, T);
        if (d == 0) break;
        double step = t_gap(z, T) / d;
        double next = z - step;
        if (next <= 0 || next >= 1) break;
        z = next;
    }
    return branch == ZetaBranch::lower ? z : 1.0 / z;
}

double zeta_from_T(const Rat& T, ZetaBranch branch) {
    if (T < 27) throw NoPositiveRoot("zeta_from_T: no positive solution below T = 27");
    if (T == 27) return 1.0;
    return zeta_from_T(rat_to_double(T), branch);
}

// ---------- free energy ----------

double log_g(double zeta) {
    return 0.75 * (std::log1p(2 * zeta) + std::log1p(0.5 * zeta)) - std::log1p(zeta);
}

double w_dwbc(double zeta) {
    return std::exp(0.75 * std::log(zeta + 2) + 0.75 * std::log(2 * zeta + 1) -
                    (2.0 / 3) * std::log(2.0) - (1.0 / 12) * std::log(zeta) -
                    (4.0 / 3) * std::log1p(zeta));
}

double w_per(double zeta) {
    return std::exp((5.0 / 3) * std::log(2.0) + (1.0 / 3) * std::log(zeta) +
                    (4.0 / 3) * std::log1p(zeta) - 1.5 * std::log(2 * zeta + 1));
}

FreeEnergyEstimate free_energy(const PFamily& fam, const Rat& zeta, long nmax) {
    if (!(zeta > 0)) throw Error("free_energy: zeta must be positive");
    if (nmax < 6 || nmax > 16) throw Error("free_energy: nmax must lie in 6..16");
    if (nmax > fam.nmax()) throw Error("free_energy: family too short");
    FreeEnergyEstimate est;
    est.zeta = zeta;
    est.f_sequence.reserve(nmax);
    for (long n = 1; n <= nmax; ++n) {
        Rat v = p_poly(fam, n).eval(zeta);
        if (v <= 0)
            throw NonPositiveEvaluation("free_energy: p_n(zeta) is not positive at n = " +
                                        std::to_string(n));
        est.f_sequence.push_back(log_rat(v) / double(n * n));
    }
    long top_even = nmax % 2 == 0 ? nmax : nmax - 1;
    long top_odd = nmax % 2 == 0 ? nmax - 1 : nmax;
    long ne[3] = {top_even - 4, top_even - 2, top_even};
    long no[3] = {top_odd - 4, top_odd - 2, top_odd};
    double fe[3], fo[3];
    for (int i = 0; i < 3; ++i) {
        fe[i] = est.f_sequence[ne[i] - 1];
        fo[i] = est.f_sequence[no[i] - 1];
    }
    est.even_limit = cubic_richardson(ne, fe);
    est.odd_limit = cubic_richardson(no, fo);
    est.extrapolated = 0.5 * (est.even_limit + est.odd_limit);
    double zd = rat_to_double(zeta);
    est.conjectured = log_g(zd);
    est.abs_error = std::abs(est.extrapolated - est.conjectured);
    est.w_dwbc = w_dwbc(zd);
    return est;
}

std::string free_energy_json(const FreeEnergyEstimate& est) {
    nlohmann::ordered_json j;
    j["zeta"] = rat_to_string(est.zeta);
    j["f_sequence"] = est.f_sequence;
    j["extrapolated"] = est.extrapolated;
    j["conjectured"] = est.conjectured;
    j["abs_error"] = est.abs_error;
    return j.dump(2) + "\n";
}

} // namespace threecolour
