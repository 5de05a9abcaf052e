#include "threecolour/ratfunc.hpp"

#include "threecolour/errors.hpp"

namespace threecolour {

RatFunc::RatFunc(RatPoly n, RatPoly d) {
    if (d.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    if (n.is_zero()) {
        num = RatPoly();
        den = RatPoly::one();
        return;
    }
    RatPoly g = poly_gcd(n, d);
    if (g.degree() > 0) {
        n = exact_divide(n, g);
        d = exact_divide(d, g);
    }
    Rat lead = d.lead();
    num = Rat(1) / lead * n;
    den = Rat(1) / lead * d;
}

RatPoly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw Error("RatFunc: not a polynomial: " + to_string());
    return num;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den.eval(x);
    if (d == 0) throw DivisionByZero("RatFunc::eval: pole at " + x.get_str());
    return num.eval(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num.to_string(var);
    return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num = -r.num;
    return r;
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
}

RatFunc func_pow(const RatFunc& a, long e) {
    if (e == 0) return RatFunc(Rat(1));
    RatFunc base = a;
    if (e < 0) {
        base = RatFunc(Rat(1)) / a;
        e = -e;
    }
    RatFunc r(Rat(1));
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

long valuation_at(const RatFunc& f, const Rat& point) {
    if (f.is_zero()) throw Error("valuation_at: zero function");
    return root_multiplicity(f.num, point) - root_multiplicity(f.den, point);
}

SeriesAtPoint laurent_series(const RatFunc& f, const Rat& point, long nterms) {
    SeriesAtPoint s;
    s.point = point;
    if (f.is_zero() || nterms <= 0) return s;
    RatPoly n = taylor_shift(f.num, point);
    RatPoly d = taylor_shift(f.den, point);
    long vn = trailing_valuation(n);
    long vd = trailing_valuation(d);
    s.valuation = vn - vd;
    // Divide the shifted series: d has a nonzero constant term after shifting
    // out its valuation.
    std::vector<Rat> nc(static_cast<size_t>(nterms), Rat(0));
    std::vector<Rat> dc(static_cast<size_t>(nterms), Rat(0));
    for (long k = 0; k < nterms; ++k) {
        nc[static_cast<size_t>(k)] = n.coeff(vn + k);
        dc[static_cast<size_t>(k)] = d.coeff(vd + k);
    }
    s.coeffs.assign(static_cast<size_t>(nterms), Rat(0));
    for (long k = 0; k < nterms; ++k) {
        Rat acc = nc[static_cast<size_t>(k)];
        for (long j = 0; j < k; ++j) acc -= s.coeffs[static_cast<size_t>(j)] * dc[static_cast<size_t>(k - j)];
        s.coeffs[static_cast<size_t>(k)] = acc / dc[0];
    }
    return s;
}

Rat laurent_limit(const RatFunc& f, const Rat& point, long scale_exponent) {
    if (f.is_zero()) return Rat(0);
    long v = valuation_at(f, point);
    if (v != -scale_exponent)
        throw ValuationMismatch("laurent_limit: valuation " + std::to_string(v) +
                                " but scale exponent " + std::to_string(scale_exponent));
    return laurent_series(f, point, 1).coeffs.at(0);
}

} // namespace threecolour
