#ifndef THREECOLOUR_RATIONAL_HPP
#define THREECOLOUR_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "threecolour/errors.hpp"

namespace threecolour {

using Int = mpz_class;
using Rat = mpq_class;

inline int chi(bool cond) { return cond ? 1 : 0; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZero("rat_pow: zero base with negative exponent");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(1);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// log of a positive big integer without overflowing double.
inline double log_int(const Int& v) {
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_rat(const Rat& q) {
    if (q <= 0) throw NonPositiveEvaluation("log_rat: argument must be positive");
    return log_int(q.get_num()) - log_int(q.get_den());
}

// Exact double conversion can overflow for huge rationals; route through logs then.
inline double rat_to_double(const Rat& q) {
    double d = q.get_d();
    if (std::isfinite(d)) return d;
    double s = sgn(q) < 0 ? -1.0 : 1.0;
    return s * std::exp(log_rat(abs(q)));
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("rat_from_string: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

// Exact rational from a binary double (every finite double is a dyadic rational).
inline Rat rat_from_double(double d) {
    if (!std::isfinite(d)) throw Error("rat_from_double: non-finite input");
    Rat q(d);
    q.canonicalize();
    return q;
}

} // namespace threecolour

#endif
