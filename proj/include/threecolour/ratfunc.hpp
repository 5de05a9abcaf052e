#ifndef THREECOLOUR_RATFUNC_HPP
#define THREECOLOUR_RATFUNC_HPP

#include <vector>

#include "threecolour/ratpoly.hpp"

namespace threecolour {

// Reduced rational function: gcd(num, den) = 1 and den monic. The zero
// function is 0/1.
struct RatFunc {
    RatPoly num, den;

    RatFunc() : num(), den(RatPoly::one()) {}
    RatFunc(const Rat& v) : num(v), den(RatPoly::one()) {}
    RatFunc(const RatPoly& p) : num(p), den(RatPoly::one()) {}
    RatFunc(RatPoly n, RatPoly d);

    static RatFunc variable() { return RatFunc(RatPoly::variable()); }

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }
    // Requires a polynomial value; throws otherwise.
    RatPoly as_polynomial() const;

    RatFunc derivative() const;
    Rat eval(const Rat& x) const;

    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc func_pow(const RatFunc& a, long e);

// Uniform zero tests for the coefficient rings used by the generic
// polynomial and series templates.
inline bool coeff_is_zero(const Rat& v) { return v == 0; }
inline bool coeff_is_zero(const RatPoly& v) { return v.is_zero(); }
inline bool coeff_is_zero(const RatFunc& v) { return v.is_zero(); }

// Order of vanishing at a finite point (negative at a pole). Error on the
// zero function, whose valuation is unbounded.
long valuation_at(const RatFunc& f, const Rat& point);

// Truncated Laurent expansion around a finite point.
struct SeriesAtPoint {
    Rat point;
    long valuation = 0;        // exponent of the first stored coefficient
    std::vector<Rat> coeffs;   // coeffs[k] multiplies (x-point)^(valuation+k)
};

SeriesAtPoint laurent_series(const RatFunc& f, const Rat& point, long nterms);

// Value of lim_{x->point} (x-point)^scale_exponent * f(x), which must be
// finite and nonzero unless f is identically zero; throws ValuationMismatch
// when the true valuation of f is not -scale_exponent.
Rat laurent_limit(const RatFunc& f, const Rat& point, long scale_exponent);

} // namespace threecolour

#endif
