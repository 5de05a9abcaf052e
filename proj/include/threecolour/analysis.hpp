#ifndef THREECOLOUR_ANALYSIS_HPP
#define THREECOLOUR_ANALYSIS_HPP

#include <string>
#include <vector>

#include "threecolour/pfamily.hpp"
#include "threecolour/ratpoly.hpp"
#include "threecolour/sturm.hpp"

namespace threecolour {

// ---------- zero structure of p_n ----------

struct NumericRoot {
    double re;
    double im;
};

// Verdict for one interlacing triple: the real zeros a_1..a_m of p_{2m}, the
// real zeros b_1..b_{m+1} of ptilde_{2m+1}, and the real zeros c_1..c_{m+1}
// of p_{2m+2}. The expected pattern is
//   b_1 < a_1 < b_2 < ... < a_m < b_{m+1} < -2   and
//   b_1 < c_1 < b_2 < ... < b_{m+1} < c_{m+1} < -2.
struct ChainVerdict {
    long m = -1;               // -1 when no triple fits the built family
    bool counts_ok = false;    // the three real-zero counts are m, m+1, m+1
    bool ab_pattern = false;
    bool bc_pattern = false;
    bool ok() const { return m >= 0 && counts_ok && ab_pattern && bc_pattern; }
};

struct RootReport {
    long n = 0;
    long degree = 0;           // degree of p_n
    bool squarefree = true;

    long real_count = 0;       // exact, from the Sturm chain
    long expected_real = 0;    // floor((n+1)/2)
    bool count_matches = false;
    bool location_ok = false;  // odd n: all in (-1/2,0); even n: all below -2
    std::vector<RootInterval> real_intervals; // sorted, refined

    std::vector<NumericRoot> roots; // all `degree` roots, sorted by (re, im)
    bool pairing_ok = false;   // non-real roots close into conjugate pairs
    // Largest |p_n| over the refined root points (exact interval midpoints
    // for the certified real roots, extended-precision points for the rest)
    // before the coordinates are rounded to double for the report.
    double max_residual = 0;
    double residual_bound = 0; // 1e-10 times the largest |coefficient|
    bool residual_ok = false;

    ChainVerdict chain;        // triple containing this n, when available
};

// Exact real-root profile of p_n plus refined numeric roots. Violations of
// the conjectured counts or locations are reported in the flags, never
// thrown. Requires fam.nmax() >= n.
RootReport root_profile(const PFamily& fam, long n);

// Interlacing verdict for the triple (p_{2m}, ptilde_{2m+1}, p_{2m+2}).
// Requires fam.nmax() >= 2m+2.
ChainVerdict zp_chain(const PFamily& fam, long m);

// All approximate roots of p (not necessarily real), refined by Newton steps
// at `bits` mantissa bits from Aberth-Ehrlich double-precision estimates.
std::vector<NumericRoot> numeric_roots(const RatPoly& p, unsigned long bits = 256);

// CSV with header "re,im", one root per line, sorted by (re, im).
std::string zeros_csv(const RootReport& report);

// ---------- coefficient conjectures ----------

struct ConjectureRow {
    long n = 0;
    bool positive = false;          // every coefficient > 0
    bool strictly_unimodal = false; // strictly increasing then strictly decreasing
    long argmax = -1;               // position of the largest coefficient
    long expected_argmax = -1;      // from the verified case list; -1 when unknown
    bool argmax_matches = false;    // vacuously true when expected_argmax < 0
    bool second_highest_matches = false; // experimental closed form for a_{deg-1}
};

struct ConjectureReport {
    long nmax = 0;
    std::vector<ConjectureRow> rows; // n = 1..nmax
    bool all_positive = false;
    bool all_unimodal = false;
};

// Positivity and strict unimodality of the coefficients of p_n for
// n = 1..nmax, with the maximal-coefficient position compared against the
// verified case list. Requires nmax <= 16 and fam.nmax() >= nmax.
ConjectureReport conjecture_scan(const PFamily& fam, long nmax);

// ---------- zeros of P_n(x, zeta) at fixed zeta ----------

struct PxRow {
    long n = 0;
    long degree = 0;        // x-degree of P_n(x, zeta); n when nondegenerate
    bool simple = false;    // squarefree in x
    bool all_real = false;
    bool positive = false;  // every zero in x > 0
    bool in_window = false; // x > 1 for zeta < -1, 0 < x < 1 for zeta > -1
    bool interlaces_next = false; // zeros of P_{n+1} interlace these; last row vacuous
};

struct PxReport {
    Rat zeta;
    long nmax = 0;
    std::vector<PxRow> rows; // n = 1..nmax
    bool all_ok = false;
};

// Sturm verification that for fixed rational zeta in (-2,-1/2) minus {-1}
// the zeros of P_n(x, zeta) are simple, real and positive, lie in the
// expected window, and interlace between consecutive n. Throws Error when
// zeta is outside the domain. Requires fam.nmax() >= nmax.
PxReport px_interlacing(const PFamily& fam, const Rat& zeta, long nmax);

// ---------- integrality ----------

struct IntegralityRow {
    long n = 0;
    bool q_integral = false;       // q_n in Z[x]
    bool r_integral = false;       // r_n in Z[x]
    bool scaled_p_integral = false; // 2^{floor(n(n+2)/2)} p_n(zeta/2) in Z[zeta]
    bool mu_bound_ok = false;      // 2^{mu_k} a_k integral for every k
};

struct IntegralityReport {
    long nmax = 0;
    std::vector<IntegralityRow> rows; // n = 1..nmax
    bool all_ok = false;
};

// Exponent mu_k in the per-coefficient two-adic bound for p_n.
long mu_exponent(long n, long k);

// Exact two-adic integrality checks for q_n, r_n and the coefficients of
// p_n, n = 1..nmax. Requires fam.nmax() >= nmax.
IntegralityReport integrality_report(const PFamily& fam, long nmax);

// ---------- parameter inversion and free energy ----------

enum class ZetaBranch {
    lower, // 0 < zeta <= 1 (default)
    upper, // zeta >= 1, the reciprocal of the lower root
};

// Symmetric combination T = (t0 t1 + t0 t2 + t1 t2)^3 / (t0 t1 t2)^2 of
// positive weights; equals 27 exactly when the weights coincide.
double t_parameter(double t0, double t1, double t2);

// Positive solution of 2 (zeta^2+4 zeta+1)^3 = T zeta (zeta+1)^4. The two
// positive roots are reciprocal; T = 27 gives zeta = 1 exactly. Throws
// NoPositiveRoot when T < 27.
double zeta_from_T(double T, ZetaBranch branch = ZetaBranch::lower);
double zeta_from_T(const Rat& T, ZetaBranch branch = ZetaBranch::lower);

struct FreeEnergyEstimate {
    Rat zeta;
    std::vector<double> f_sequence; // f_n = log(p_n(zeta))/n^2 for n = 1..nmax
    double extrapolated = 0;        // averaged per-parity Richardson limits
    double even_limit = 0;
    double odd_limit = 0;
    double conjectured = 0;         // log g(zeta)
    double abs_error = 0;           // |extrapolated - conjectured|
    double w_dwbc = 0;
};

// Conjectured bulk quantities.
double log_g(double zeta);  // g = (1+2z)^{3/4} (1+z/2)^{3/4} / (1+z)
double w_dwbc(double zeta); // (z+2)^{3/4} (2z+1)^{3/4} / (2^{2/3} z^{1/12} (z+1)^{4/3})
double w_per(double zeta);  // 2^{5/3} z^{1/3} (z+1)^{4/3} / (2z+1)^{3/2}

// Exact evaluation of p_n(zeta) for n = 1..nmax followed by a float log and
// a second-order Richardson extrapolation in 1/n over each parity class.
// Throws NonPositiveEvaluation when some p_n(zeta) <= 0 and Error when
// nmax < 6 or the family is too short. Requires zeta > 0.
FreeEnergyEstimate free_energy(const PFamily& fam, const Rat& zeta, long nmax);

// JSON object {zeta, f_sequence, extrapolated, conjectured, abs_error}.
std::string free_energy_json(const FreeEnergyEstimate& est);

} // namespace threecolour

#endif
