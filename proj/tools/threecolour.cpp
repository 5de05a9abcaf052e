// Command line front end: exact enumeration, census tables, polynomial
// families, verification suites and the theta-function checks, with
// deterministic JSON/CSV output (identical invocations give identical bytes).
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "threecolour/analysis.hpp"
#include "threecolour/counts.hpp"
#include "threecolour/enumerate.hpp"
#include "threecolour/errors.hpp"
#include "threecolour/jsonio.hpp"
#include "threecolour/pfamily.hpp"
#include "threecolour/qrfamily.hpp"
#include "threecolour/reconstruct.hpp"
#include "threecolour/sfamily.hpp"
#include "threecolour/theta.hpp"
#include "threecolour/tripoly.hpp"

using namespace threecolour;

namespace {

constexpr long FAMILY_CAP = 16;

const PFamily& family_cache(long need) {
    static PFamily fam;
    if (fam.nmax() < need) fam = build_P(std::max(need, 2L));
    return fam;
}

Rat parse_rat(const std::string& s) {
    const size_t dot = s.find('.');
    if (dot == std::string::npos) return rat_from_string(s);
    const std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
        throw Error("not a rational: \"" + s + "\"");
    Int den(1);
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    const bool neg = !head.empty() && head[0] == '-';
    Rat whole = head.empty() || head == "-" || head == "+" ? Rat(0)
                                                           : rat_from_string(head);
    Rat frac = Rat(Int(tail.c_str())) / Rat(den);
    return neg ? whole - frac : whole + frac;
}

Cplx parse_cplx(const std::string& s) {
    try {
        size_t used = 0;
        const double re = std::stod(s, &used);
        if (used == s.size()) return Cplx(re, 0.0);
        if (s[used] != ',') throw std::invalid_argument(s);
        size_t used2 = 0;
        const std::string rest = s.substr(used + 1);
        const double im = std::stod(rest, &used2);
        if (used2 != rest.size()) throw std::invalid_argument(s);
        return Cplx(re, im);
    } catch (const std::exception&) {
        throw Error("not a complex \"re,im\" value: \"" + s + "\"");
    }
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw Error("short write to: " + path);
}

// Deterministic complex sample points, kept inside annuli that avoid the
// zeros of the theta factors so fixed seeds give stable residuals.
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
        std::vector<Cplx> v(static_cast<size_t>(n));
        for (Cplx& z : v) z = annulus(rlo, rhi);
        return v;
    }
};

// ---------- verification suites ----------

struct Reporter {
    std::string out;
    int total = 0, failed = 0;

    void line(bool ok, const std::string& name, const std::string& detail = "") {
        ++total;
        if (!ok) ++failed;
        out += std::string(ok ? "PASS " : "FAIL ") + name;
        if (!detail.empty()) out += " " + detail;
        out += "\n";
    }
};

std::string fmt_res(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "residual=%.3e", r);
    return buf;
}

void suite_tables(Reporter& R, long nmax, int jobs) {
    for (long n = 1; n <= std::min(nmax, 5L); ++n) {
        const CountTable ser = counting_table(n);
        const CountTable par = counting_table_parallel(n, jobs);
        R.line(ser == par, "tables/serial-parallel-agreement n=" + std::to_string(n));
        R.line(ser.total() == asm_count(n), "tables/total-count n=" + std::to_string(n));
        const TriPoly z = z3c_from_qr(family_cache(std::max(n, 2L)), n);
        R.line(tripoly_from_counts(ser) == z,
               "tables/census-matches-resolvent n=" + std::to_string(n));
    }
    for (long n = 1; n <= std::min(nmax, 9L); ++n) {
        const TriPoly z = z3c_from_qr(family_cache(std::max(n, 2L)), n);
        const CheckReport ecc = ecc_check(z, n);
        R.line(ecc.pass, "tables/boundary-binomials n=" + std::to_string(n), ecc.detail);
        if (n % 2 == 1) {
            const CheckReport m2 = mod2_check(z, n);
            R.line(m2.pass, "tables/parity-symmetry n=" + std::to_string(n), m2.detail);
        }
    }
}

void suite_oracle(Reporter& R, long nmax) {
    const long etop = std::min(nmax, 6L);
    for (long n = 1; n <= etop; ++n)
        R.line(count_boards(n) == asm_count(n),
               "oracle/board-count n=" + std::to_string(n));
    for (long n = 0; n <= std::min(nmax, FAMILY_CAP); ++n) {
        const TriPoly z = z3c_from_qr(family_cache(std::max(n, 2L)), n);
        const std::string tag = " n=" + std::to_string(n);
        R.line(tripoly_is_homogeneous(z, (n + 1) * (n + 1)), "oracle/homogeneous" + tag);
        R.line(!tripoly_has_negative_coeff(z), "oracle/non-negative" + tag);
        R.line(tripoly_eval(z, Rat(1), Rat(1), Rat(1)) == Rat(asm_count(n)),
               "oracle/specialized-total" + tag);
        if (n <= etop)
            R.line(z == partition_polynomial(n), "oracle/census-polynomial" + tag);
    }
}

void suite_special_values(Reporter& R, long nmax) {
    const long top = std::min(nmax, FAMILY_CAP);
    const PFamily& fam = family_cache(std::max(top, 2L));
    for (long n = 0; n <= top; ++n) {
        const RatPoly p = p_poly(fam, n);
        const std::string tag = " n=" + std::to_string(n);
        const Rat A(asm_count(n + 1)), C(cspp_count(n + 1));
        const long dnp = quarter_square(n + 1);

        const bool shape = p.degree() == n * (n + 1) / 2 && p.coeff(0) == Rat(1) &&
                           p.lead() == Rat(binomial(2 * n + 2, n + 1)) /
                                           rat_pow(Rat(2), (n + 2) / 2);
        R.line(shape, "special-values/shape" + tag);

        R.line(p.eval(Rat(1)) == rat_pow(Rat(2), dnp) * A,
               "special-values/at-one" + tag);
        const Rat sm1 = (n % 4 == 1) ? Rat(-1) : Rat(1);
        R.line(p.eval(Rat(-1)) == sm1 * rat_pow(Rat(2), dnp),
               "special-values/at-minus-one" + tag);
        if (n % 2 == 0) {
            R.line(p.eval(Rat(-2)) == A, "special-values/at-minus-two" + tag);
            R.line(p.eval(Rat(-1) / Rat(2)) ==
                       rat_pow(Rat(2), -(n * n + 2 * n + 2) / 2) * C,
                   "special-values/at-minus-half" + tag);
        } else {
            const Rat s = ((n + 1) / 2 % 2 == 1) ? Rat(-1) : Rat(1);
            R.line(p.eval(Rat(-2)) == s * C, "special-values/at-minus-two" + tag);
            R.line(p.eval(Rat(-1) / Rat(2)) ==
                       s * rat_pow(Rat(2), -(n + 1) * (n + 1) / 2) * A,
                   "special-values/at-minus-half" + tag);
        }
        const Rat a1 = (n % 2 == 0) ? Rat(7 * n * (n + 2)) / Rat(8)
                                    : Rat(7 * n * n + 14 * n + 3) / Rat(8);
        R.line(p.coeff(1) == a1, "special-values/linear-coefficient" + tag);
    }
}

void suite_identities(Reporter& R, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    auto rnd = [&]() {
        long num = 0;
        while (num == 0) num = static_cast<long>(rng() % 41) - 20;
        return Rat(num) / Rat(1 + static_cast<long>(rng() % 9));
    };
    auto distinct = [&](size_t k) {
        std::vector<Rat> v;
        while (v.size() < k) {
            Rat x = rnd();
            if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        return v;
    };
    auto cat = [](std::vector<Rat> head, const std::vector<Rat>& tail) {
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };

    for (long n = 1; n <= 3; ++n) {
        bool perm = true, inv = true, quad = true, exch = true, four = true;
        for (int trial = 0; trial < 10; ++trial) {
            const Rat zeta = rnd();
            const auto pool = distinct(2 * static_cast<size_t>(n) + 3);
            auto S = [&](const std::vector<Rat>& a) { return s_eval<Rat>(a, zeta); };
            auto G = [&](const Rat& x, const Rat& y) { return gval<Rat>(x, y, zeta); };

            std::vector<Rat> args(pool.begin(), pool.begin() + (2 * n + 1));
            const Rat ref = S(args);
            std::vector<Rat> shuf = args;
            std::shuffle(shuf.begin(), shuf.end(), rng);
            perm = perm && S(shuf) == ref;

            std::vector<Rat> ia;
            Rat prod(1);
            for (const Rat& a : args) {
                ia.push_back(Rat(1) / a);
                prod *= a;
            }
            inv = inv && s_eval<Rat>(ia, Rat(1) / zeta) ==
                             ref / (rat_pow(zeta, 2 * n * n) * rat_pow(prod, n));

            const Rat a = pool[0], b = pool[1], c = pool[2], d = pool[3];
            std::vector<Rat> xs(pool.begin() + 4, pool.begin() + 4 + (2 * n - 1));
            quad = quad &&
                   (a - b) * (c - d) * S(xs) * S(cat({a, b, c, d}, xs)) ==
                       G(a, d) * G(b, c) * S(cat({a, c}, xs)) * S(cat({b, d}, xs)) -
                           G(a, c) * G(b, d) * S(cat({a, d}, xs)) * S(cat({b, c}, xs));

            std::vector<Rat> ys(pool.begin() + 4, pool.begin() + 4 + (2 * n - 2));
            exch = exch &&
                   (c - d) * G(a, b) * S(cat({b}, ys)) * S(cat({a, c, d}, ys)) +
                           (d - b) * G(a, c) * S(cat({c}, ys)) * S(cat({a, b, d}, ys)) +
                           (b - c) * G(a, d) * S(cat({d}, ys)) * S(cat({a, b, c}, ys)) ==
                       Rat(0);

            const Rat y0 = pool[2 * static_cast<size_t>(n) + 2];
            four = four &&
                   (b - d) * (y0 - a) * (y0 - c) * S(cat({a}, ys)) * S(cat({c}, ys)) *
                               S(cat({y0, a, b, c, d}, ys)) +
                           (a - y0) * G(b, c) * G(y0, d) * S(cat({c}, ys)) *
                               S(cat({a, c, d}, ys)) * S(cat({y0, a, b}, ys)) +
                           (y0 - c) * G(a, d) * G(y0, b) * S(cat({a}, ys)) *
                               S(cat({a, b, c}, ys)) * S(cat({y0, c, d}, ys)) +
                           (c - a) * G(y0, b) * G(y0, d) * S(cat({a, b, c}, ys)) *
                               S(cat({a, c, d}, ys)) * S(cat({y0}, ys)) ==
                       Rat(0);
        }
        const std::string tag = " n=" + std::to_string(n);
        R.line(perm, "identities/argument-symmetry" + tag);
        R.line(inv, "identities/inversion" + tag);
        R.line(quad, "identities/complementary-minors" + tag);
        R.line(exch, "identities/column-exchange" + tag);
        R.line(four, "identities/four-term" + tag);
    }
}

void suite_theta(Reporter& R, long nmax, unsigned long long seed, double tol) {
    Sampler s(seed);

    for (int trial = 0; trial < 3; ++trial) {
        const Cplx p = s.annulus(0.02, 0.3);
        const ModularResiduals m = modular_residuals(p);
        const double worst = std::max({m.zeta_eta, m.tau_eta, m.tau_cube});
        R.line(worst <= std::min(tol, 1e-10),
               "theta/modular-relations trial=" + std::to_string(trial), fmt_res(worst));
    }

    const long top = std::min(nmax, 3L);
    for (long n = 1; n <= top; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        const Cplx p = s.annulus(0.03, 0.2);
        const std::vector<Cplx> xs = s.points(n, 0.75, 1.3);
        const std::vector<Cplx> ys = s.points(n, 0.75, 1.3);
        const Cplx lambda = s.annulus(0.7, 0.9);
        const Cplx gamma = s.annulus(0.65, 1.35);

        const Cplx zb = z8vsos_brute(n, xs, ys, lambda, p);
        const Cplx zi = z8vsos_ik(n, xs, ys, lambda, p, gamma);
        const double scale = std::max(std::abs(zb), std::abs(zi));
        const double rr = scale == 0.0 ? 0.0 : std::abs(zb - zi) / scale;
        R.line(rr <= tol, "theta/sum-vs-determinant" + tag, fmt_res(rr));

        const Cplx zj = z8vsos_ik(n, xs, ys, lambda, p, s.annulus(0.65, 1.35));
        const double gr = std::abs(zi - zj) / std::max(std::abs(zi), std::abs(zj));
        R.line(gr <= tol, "theta/deformation-independence" + tag, fmt_res(gr));

        const double rec = recursion_residual(n, xs, ys, lambda, p);
        R.line(rec <= tol, "theta/size-recursion" + tag, fmt_res(rec));
        const double cro = crossing_residual(n, xs, ys, lambda, p);
        R.line(cro <= tol, "theta/parameter-inversion" + tag, fmt_res(cro));
        const double cyc = cyclic_sum_residual(n, xs, ys, lambda, p);
        R.line(cyc <= tol, "theta/cyclic-sum" + tag, fmt_res(cyc));
        const double per = lambda_period_residual(n, xs, ys, lambda, p, gamma);
        R.line(per <= tol, "theta/quasi-periodicity" + tag, fmt_res(per));
    }

    for (int trial = 0; trial < 2; ++trial) {
        const Cplx p = s.annulus(0.05, 0.3);
        const Cplx la = s.annulus(0.6, 0.9), lb = s.annulus(0.6, 0.9);
        const double worst = std::max({surface_sum_residual(la, lb, p),
                                       surface_cube_residual(la, p),
                                       surface_invariant_residual(la, p)});
        R.line(worst <= tol, "theta/surface-relations trial=" + std::to_string(trial),
               fmt_res(worst));
    }

    for (long n = 1; n <= top; ++n) {
        const TriPoly z = z3c_from_qr(family_cache(std::max(n, 2L)), n);
        const Cplx lambda = s.annulus(0.6, 0.9);
        const Cplx p = s.annulus(0.05, 0.2);
        const double lr = three_colour_link_residual(n, z, lambda, p);
        R.line(lr <= std::max(tol, 1e-8), "theta/census-link n=" + std::to_string(n),
               fmt_res(lr));
    }
}

void suite_conjectures(Reporter& R, long nmax) {
    const long top = std::min(nmax, FAMILY_CAP);
    const PFamily& fam = family_cache(std::max(top, 2L));
    const ConjectureReport rep = conjecture_scan(fam, top);
    for (const ConjectureRow& row : rep.rows) {
        const std::string tag = " n=" + std::to_string(row.n);
        R.line(row.positive, "conjectures/positive-coefficients" + tag);
        R.line(row.strictly_unimodal, "conjectures/strict-unimodality" + tag);
        if (row.expected_argmax >= 0)
            R.line(row.argmax_matches, "conjectures/argmax" + tag,
                   "argmax=" + std::to_string(row.argmax));
        R.line(row.second_highest_matches, "conjectures/second-highest" + tag);
    }
    for (long n = 1; n <= std::min(nmax, 8L); ++n) {
        const RootReport rr = root_profile(fam, n);
        const std::string tag = " n=" + std::to_string(n);
        R.line(rr.count_matches, "conjectures/real-zero-count" + tag,
               "real=" + std::to_string(rr.real_count));
        R.line(rr.location_ok, "conjectures/zero-location" + tag);
        if (rr.chain.m >= 0) R.line(rr.chain.ok(), "conjectures/interlacing" + tag);
    }
}

void suite_integrality(Reporter& R, long nmax) {
    const long top = std::min(nmax, FAMILY_CAP);
    const PFamily& fam = family_cache(std::max(top, 2L));
    for (long n = 0; n <= top; ++n) {
        const auto [q, r] = qr_polys(fam, n);
        const QRDegrees d = qr_degrees(n);
        const std::string tag = " n=" + std::to_string(n);
        const bool deg = q.degree() == d.q && r.degree() == d.r;
        const bool monic = (d.q < 0 || q.lead() == Rat(1)) &&
                           (d.r < 0 || r.lead() == Rat(1));
        R.line(deg, "integrality/resolvent-degrees" + tag,
               "deg(q)=" + std::to_string(q.degree()) +
                   " deg(r)=" + std::to_string(r.degree()));
        R.line(monic, "integrality/resolvent-monic" + tag);
    }
    const IntegralityReport rep = integrality_report(fam, top);
    for (const IntegralityRow& row : rep.rows) {
        const std::string tag = " n=" + std::to_string(row.n);
        R.line(row.q_integral && row.r_integral, "integrality/resolvent-integer" + tag);
        R.line(row.scaled_p_integral, "integrality/scaled-coefficients" + tag);
        if (row.n <= 12)
            R.line(row.mu_bound_ok, "integrality/two-adic-bound" + tag);
    }
}

void suite_free_energy(Reporter& R, long nmax) {
    const long top = std::max(std::min(nmax, FAMILY_CAP), 6L);
    const PFamily& fam = family_cache(top);
    const FreeEnergyEstimate est = free_energy(fam, Rat(1), top);
    R.line(est.abs_error <= 2e-2, "free-energy/extrapolation-at-one",
           fmt_res(est.abs_error));
    const double target = 3.0 * std::sqrt(3.0) / 4.0;
    R.line(std::abs(w_dwbc(1.0) - target) <= 1e-12,
           "free-energy/partition-growth-at-one");
    const double sym = std::abs(w_dwbc(2.0) - w_dwbc(0.5));
    R.line(sym <= 1e-12, "free-energy/reciprocal-symmetry", fmt_res(sym));
    const double link =
        std::abs(w_dwbc(2.0) - 2.0 / std::sqrt(w_per(2.0) * w_per(0.5)));
    R.line(link <= 1e-12, "free-energy/periodic-link", fmt_res(link));
}

// ---------- subcommand drivers ----------

struct CommandConfig {
    long n = -1;
    long nmax = 6;
    std::string zeta = "1";
    std::string p = "0.1,0.05";
    std::string lambda = "0.8,0.1";
    double tol = 1e-9;
    unsigned long long seed = 1;
    std::string output;
    std::string format = "json";
    int jobs = 0;
    std::string precision = "double";
    std::string kind = "p";
    std::string suite = "all";
    bool manifest = false;
};

int run_enumerate(const CommandConfig& cfg) {
    if (cfg.format != "json") throw Error("enumerate writes JSON only");
    Json out = Json::array();
    enumerate_boards(cfg.n, [&](const ThreeColourBoard& b) {
        out.push_back(board_to_json(b));
    });
    write_out(cfg.output, dump_json(out));
    return 0;
}

int run_count(const CommandConfig& cfg) {
    const CountTable t = counting_table_parallel(cfg.n, cfg.jobs);
    if (cfg.format == "csv") {
        write_out(cfg.output, count_table_csv(t));
    } else if (cfg.format == "json") {
        write_out(cfg.output, dump_json(count_table_to_json(t)));
    } else {
        throw Error("count writes json or csv");
    }
    return 0;
}

int run_zpoly(const CommandConfig& cfg) {
    if (cfg.format != "json") throw Error("zpoly writes JSON only");
    if (cfg.n < 0 || cfg.n > FAMILY_CAP)
        throw Error("zpoly supports 0 <= n <= " + std::to_string(FAMILY_CAP));
    const TriPoly z = z3c_from_qr(family_cache(std::max(cfg.n, 2L)), cfg.n);
    write_out(cfg.output, dump_json(tripoly_to_json(z)));
    return 0;
}

int run_family(const CommandConfig& cfg) {
    if (cfg.format != "json") throw Error("family writes JSON only");
    const long n = cfg.n;
    if (n < 0) throw Error("--n must be non-negative");
    if (cfg.kind == "P") {
        if (n > FAMILY_CAP) throw Error("P supports n <= 16");
        if (cfg.manifest) throw Error("no manifest for the bivariate family");
        const PFamily& fam = family_cache(std::max(n, 2L));
        write_out(cfg.output, dump_json(bipoly_to_json(fam.P[static_cast<size_t>(n)])));
        return 0;
    }
    std::string construction;
    RatPoly f;
    if (cfg.kind == "p") {
        if (n > FAMILY_CAP) throw Error("p supports n <= 16");
        f = p_poly(family_cache(std::max(n, 2L)), n);
        construction = "three-term recursion, specialized and cleared";
    } else if (cfg.kind == "ptilde") {
        if (n > FAMILY_CAP) throw Error("ptilde supports n <= 16");
        f = p_tilde(family_cache(std::max(n, 2L)), n);
        construction = "coefficient reversal against the nominal degree";
    } else if (cfg.kind == "y") {
        if (n > FAMILY_CAP - 1) throw Error("y supports n <= 15");
        f = y_poly(family_cache(std::max(n + 1, 2L)), n);
        construction = "quadratic relation, exact division";
    } else if (cfg.kind == "q" || cfg.kind == "r") {
        if (n > FAMILY_CAP) throw Error("q and r support n <= 16");
        auto [q, r] = qr_polys(family_cache(std::max(n, 2L)), n);
        f = cfg.kind == "q" ? q : r;
        construction = "exact linear solve in the cleared monomial basis";
    } else if (cfg.kind == "phi" || cfg.kind == "psi") {
        if (n > 64) throw Error("phi and psi support n <= 64");
        f = cfg.kind == "phi" ? hyper_phi(n) : hyper_psi(n);
        construction = "terminating hypergeometric sum";
    } else {
        throw Error("unknown family kind: " + cfg.kind);
    }
    if (cfg.manifest)
        write_out(cfg.output, dump_json(family_manifest(cfg.kind, n, construction, f)));
    else
        write_out(cfg.output, dump_json(ratpoly_to_json(f)));
    return 0;
}

int run_zeros(const CommandConfig& cfg) {
    if (cfg.format != "csv") throw Error("zeros writes CSV only");
    if (cfg.n < 1 || cfg.n > FAMILY_CAP)
        throw Error("zeros supports 1 <= n <= " + std::to_string(FAMILY_CAP));
    const RootReport rep = root_profile(family_cache(std::max(cfg.n, 2L)), cfg.n);
    write_out(cfg.output, zeros_csv(rep));
    return 0;
}

int run_free_energy(const CommandConfig& cfg) {
    if (cfg.format != "json") throw Error("free-energy writes JSON only");
    const Rat zeta = parse_rat(cfg.zeta);
    const long top = std::min(cfg.nmax, FAMILY_CAP);
    const FreeEnergyEstimate est =
        free_energy(family_cache(std::max(top, 2L)), zeta, top);
    write_out(cfg.output, free_energy_json(est));
    return 0;
}

int run_verify(const CommandConfig& cfg) {
    static const std::vector<std::string> suites = {
        "tables",       "oracle",      "special-values", "identities",
        "theta",        "conjectures", "integrality",    "free-energy"};
    const std::string& s = cfg.suite;
    if (s != "all" && std::find(suites.begin(), suites.end(), s) == suites.end())
        throw Error("unknown suite: " + s);
    auto want = [&](const char* name) { return s == "all" || s == name; };

    Reporter R;
    if (want("tables")) suite_tables(R, cfg.nmax, cfg.jobs);
    if (want("oracle")) suite_oracle(R, cfg.nmax);
    if (want("special-values")) suite_special_values(R, cfg.nmax);
    if (want("identities")) suite_identities(R, cfg.seed);
    if (want("theta")) suite_theta(R, cfg.nmax, cfg.seed, cfg.tol);
    if (want("conjectures")) suite_conjectures(R, cfg.nmax);
    if (want("integrality")) suite_integrality(R, cfg.nmax);
    if (want("free-energy")) suite_free_energy(R, cfg.nmax);

    char tail[64];
    std::snprintf(tail, sizeof(tail), "passed %d/%d\n", R.total - R.failed, R.total);
    write_out(cfg.output, R.out + tail);
    return R.failed == 0 ? 0 : 1;
}

int run_theta_check(const CommandConfig& cfg) {
    if (cfg.format != "json") throw Error("theta-check writes JSON only");
    const Cplx p = parse_cplx(cfg.p);
    const Cplx lambda = parse_cplx(cfg.lambda);
    const double tol = cfg.tol;
    const long n = cfg.n < 0 ? 2 : cfg.n;

    std::string prec = cfg.precision;
    if (const char* env = std::getenv("THREECOLOUR_PRECISION_BITS");
        env != nullptr && *env != '\0')
        prec = std::string("bits:") + env;
    unsigned long bits = 0;
    if (prec != "double") {
        if (prec.rfind("bits:", 0) != 0)
            throw Error("--precision takes double or bits:<k>");
        try {
            bits = std::stoul(prec.substr(5));
        } catch (const std::exception&) {
            throw Error("--precision takes double or bits:<k>");
        }
        if (bits < 64 || bits > 4096)
            throw Error("precision bits must be in [64, 4096]");
    }

    Sampler s(cfg.seed);
    Json params;
    params["p"] = cfg.p;
    params["lambda"] = cfg.lambda;
    params["n"] = n;
    params["seed"] = cfg.seed;
    params["precision"] =
        bits == 0 ? std::string("double") : "bits:" + std::to_string(bits);

    Json out = Json::array();
    bool all_ok = true;
    auto push = [&](const std::string& check, double residual, double t) {
        Json rep = residual_report(check, params, residual, t);
        all_ok = all_ok && rep["pass"].get<bool>();
        out.push_back(std::move(rep));
    };

    const Cplx x = s.annulus(0.7, 1.3), y = s.annulus(0.7, 1.3);
    const Cplx z2 = s.annulus(0.7, 1.3), w = s.annulus(0.7, 1.3);
    push("inversion",
         bits == 0 ? theta_inversion_residual(x, p)
                   : theta_inversion_residual_big(x, p, bits),
         tol);
    push("nome-shift", theta_shift_residual(x, p), tol);
    push("addition",
         bits == 0 ? theta_addition_residual(x, y, z2, w, p)
                   : theta_addition_residual_big(x, y, z2, w, p, bits),
         tol);
    push("quintuple-product", quintuple_product_residual(x, p), tol);
    push("two-torsion", two_torsion_residual(p), tol);

    const ModularResiduals m = modular_residuals(p);
    push("modular-surface", m.zeta_eta, tol);
    push("modular-trace", m.tau_eta, tol);
    push("modular-cube", m.tau_cube, tol);

    push("surface-sum", surface_sum_residual(lambda, s.annulus(0.6, 0.9), p), tol);
    push("surface-cube", surface_cube_residual(lambda, p), tol);
    push("surface-invariant", surface_invariant_residual(lambda, p), tol);

    if (n >= 1) {
        const std::vector<Cplx> xs = s.points(n, 0.75, 1.3);
        const std::vector<Cplx> ys = s.points(n, 0.75, 1.3);
        const Cplx gamma = s.annulus(0.65, 1.35);
        const Cplx zi = z8vsos_ik(n, xs, ys, lambda, p, gamma);
        if (n <= 4) {
            const Cplx zb = z8vsos_brute(n, xs, ys, lambda, p);
            const double sc = std::max(std::abs(zb), std::abs(zi));
            push("sum-vs-determinant", sc == 0.0 ? 0.0 : std::abs(zb - zi) / sc, tol);
        }
        const Cplx zj = z8vsos_ik(n, xs, ys, lambda, p, s.annulus(0.65, 1.35));
        push("deformation-independence",
             std::abs(zi - zj) / std::max(std::abs(zi), std::abs(zj)), tol);
        push("size-recursion", recursion_residual(n, xs, ys, lambda, p), tol);
        push("parameter-inversion", crossing_residual(n, xs, ys, lambda, p), tol);
        push("cyclic-sum", cyclic_sum_residual(n, xs, ys, lambda, p), tol);
        push("quasi-periodicity",
             lambda_period_residual(n, xs, ys, lambda, p, gamma), tol);
        if (n <= 8) {
            const TriPoly z = z3c_from_qr(family_cache(std::max(n, 2L)), n);
            push("census-link", three_colour_link_residual(n, z, lambda, p),
                 std::max(tol, 1e-8));
        }
    }

    write_out(cfg.output, dump_json(out));
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for the three-colour model with fixed boundary"};
    app.require_subcommand(1);
    CommandConfig cfg;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "write to this file instead of stdout");
    };

    CLI::App* enu = app.add_subcommand("enumerate", "list every valid board as JSON");
    enu->add_option("--n", cfg.n, "board size parameter")->required();
    enu->add_option("--format", cfg.format, "json");
    add_output(enu);

    CLI::App* cnt = app.add_subcommand("count", "exact counts by colour distribution");
    cnt->add_option("--n", cfg.n, "board size parameter")->required();
    cnt->add_option("--format", cfg.format, "json or csv");
    cnt->add_option("--jobs", cfg.jobs, "worker threads, 0 = library default");
    add_output(cnt);

    CLI::App* zp = app.add_subcommand("zpoly", "census generating polynomial as JSON");
    zp->add_option("--n", cfg.n, "board size parameter")->required();
    zp->add_option("--format", cfg.format, "json");
    add_output(zp);

    CLI::App* fm = app.add_subcommand("family", "polynomial family member as JSON");
    fm->add_option("--kind", cfg.kind, "p, ptilde, y, q, r, P, phi or psi");
    fm->add_option("--n", cfg.n, "member index")->required();
    fm->add_flag("--manifest", cfg.manifest, "emit the manifest instead of coefficients");
    fm->add_option("--format", cfg.format, "json");
    add_output(fm);

    CLI::App* vf = app.add_subcommand("verify", "run a named verification suite");
    vf->add_option("--suite", cfg.suite,
                   "tables, oracle, special-values, identities, theta, conjectures, "
                   "integrality, free-energy or all");
    vf->add_option("--nmax", cfg.nmax, "size cap, default 6");
    vf->add_option("--seed", cfg.seed, "seed for sampled checks");
    vf->add_option("--tol", cfg.tol, "tolerance for numeric residuals");
    vf->add_option("--jobs", cfg.jobs, "worker threads for counting");
    add_output(vf);

    CLI::App* zr = app.add_subcommand("zeros", "numeric zeros of a family member as CSV");
    zr->add_option("--n", cfg.n, "member index")->required();
    zr->add_option("--format", cfg.format, "csv");
    add_output(zr);

    CLI::App* fe = app.add_subcommand("free-energy", "finite-size free energy report");
    fe->add_option("--zeta", cfg.zeta, "positive rational weight, e.g. 1 or 3/2");
    fe->add_option("--nmax", cfg.nmax, "largest member used, 6..16")->default_val(16);
    fe->add_option("--format", cfg.format, "json");
    add_output(fe);

    CLI::App* th = app.add_subcommand("theta-check", "theta identity residuals as JSON");
    th->add_option("--p", cfg.p, "nome as re,im with |p| < 1");
    th->add_option("--lambda", cfg.lambda, "spectral point as re,im");
    th->add_option("--n", cfg.n, "partition sum size, default 2");
    th->add_option("--tol", cfg.tol, "pass threshold for residuals");
    th->add_option("--seed", cfg.seed, "seed for sampled arguments");
    th->add_option("--precision", cfg.precision, "double or bits:<k>");
    th->add_option("--format", cfg.format, "json");
    add_output(th);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    // zeros is the one CSV-native subcommand.
    if (zr->parsed() && zr->count("--format") == 0) cfg.format = "csv";

    try {
        if (enu->parsed()) return run_enumerate(cfg);
        if (cnt->parsed()) return run_count(cfg);
        if (zp->parsed()) return run_zpoly(cfg);
        if (fm->parsed()) return run_family(cfg);
        if (vf->parsed()) return run_verify(cfg);
        if (zr->parsed()) return run_zeros(cfg);
        if (fe->parsed()) return run_free_energy(cfg);
        if (th->parsed()) return run_theta_check(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
