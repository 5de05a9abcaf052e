#ifndef THREECOLOUR_RATPOLY_HPP
#define THREECOLOUR_RATPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "threecolour/rational.hpp"

namespace threecolour {

// Dense univariate polynomial over the rationals. c[k] is the coefficient of
// x^k; the zero polynomial has an empty coefficient vector and degree -1.
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(const Rat& v) {
        if (v != 0) c.push_back(v);
    }
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return RatPoly(Rat(1)); }
    static RatPoly variable();                  // x
    static RatPoly monomial(long deg, const Rat& v);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();

    const Rat& coeff(long k) const;             // 0 outside range
    Rat& at(long k);                            // grows on demand; renormalize after
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    RatPoly derivative() const;

    bool operator==(const RatPoly& o) const { return c == o.c; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rat& s, const RatPoly& a);
RatPoly operator*(const RatPoly& a, const Rat& s);

RatPoly poly_pow(const RatPoly& a, unsigned long e);

// Quotient and remainder of a by b over the rationals (b nonzero).
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

// Exact quotient; throws NotDivisible (with the offending remainder in the
// message) when b does not divide a.
RatPoly exact_divide(const RatPoly& a, const RatPoly& b);

// Reversal x^deg(p) * p(1/x). Involutive whenever p(0) != 0; maps zero to zero.
RatPoly reverse_coefficients(const RatPoly& p);

// Reversal against a nominal degree d >= deg(p): x^d * p(1/x).
RatPoly reverse_to_degree(const RatPoly& p, long d);

// Monic gcd via a primitive pseudo-remainder sequence.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// p / gcd(p, p'), normalized monic: same roots, all simple.
RatPoly squarefree_part(const RatPoly& p);

// p(x + a) by repeated synthetic division (exact Taylor shift).
RatPoly taylor_shift(const RatPoly& p, const Rat& a);

// Multiplicity of `point` as a root of p (0 when p(point) != 0).
long root_multiplicity(const RatPoly& p, const Rat& point);

// Largest k with x^k | p (degree+1 convention not used; p must be nonzero).
long trailing_valuation(const RatPoly& p);

// Integer polynomial with positive content pulled out: p = scale * prim with
// prim having integer coefficients, content 1 and the sign of p's lead.
struct ZPoly {
    std::vector<Int> c;
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
    ZPoly derivative() const;
    // Sign of the value at num/den (den > 0), computed in integers.
    int sign_at(const Int& num, const Int& den) const;
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;
};

std::pair<Rat, ZPoly> to_primitive(const RatPoly& p);
RatPoly from_zpoly(const ZPoly& p);

} // namespace threecolour

#endif
