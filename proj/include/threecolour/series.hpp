#ifndef THREECOLOUR_SERIES_HPP
#define THREECOLOUR_SERIES_HPP

#include <vector>

#include "threecolour/errors.hpp"
#include "threecolour/ratfunc.hpp"

namespace threecolour {

// Truncated power series in a formal perturbation parameter over a field K.
// All series in one computation share the same truncation length; arithmetic
// below index `trunc` is exact. Used to evaluate removable singularities:
// perturb coincident arguments, track enough terms, read off the limit.
template <class K>
struct Series {
    long trunc = 1;
    std::vector<K> c;

    Series() : trunc(1), c(1) {}
    explicit Series(long t) : trunc(t), c(static_cast<size_t>(t)) {
        if (t < 1) throw Error("series truncation must be at least 1");
    }

    static Series constant(long t, const K& v) {
        Series s(t);
        s.c[0] = v;
        return s;
    }

    // base + slope * eps.
    static Series linear(long t, const K& base, const K& slope) {
        Series s(t);
        s.c[0] = base;
        if (t > 1) s.c[1] = slope;
        return s;
    }

    long valuation() const {
        for (long k = 0; k < trunc; ++k)
            if (!coeff_is_zero(c[static_cast<size_t>(k)])) return k;
        return trunc;
    }
};

template <class K>
Series<K> operator+(const Series<K>& a, const Series<K>& b) {
    if (a.trunc != b.trunc) throw Error("series truncation mismatch");
    Series<K> r(a.trunc);
    for (long k = 0; k < a.trunc; ++k)
        r.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] + b.c[static_cast<size_t>(k)];
    return r;
}

template <class K>
Series<K> operator-(const Series<K>& a) {
    Series<K> r(a.trunc);
    for (long k = 0; k < a.trunc; ++k)
        r.c[static_cast<size_t>(k)] = K() - a.c[static_cast<size_t>(k)];
    return r;
}

template <class K>
Series<K> operator-(const Series<K>& a, const Series<K>& b) {
    if (a.trunc != b.trunc) throw Error("series truncation mismatch");
    Series<K> r(a.trunc);
    for (long k = 0; k < a.trunc; ++k)
        r.c[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k)] - b.c[static_cast<size_t>(k)];
    return r;
}

template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
    if (a.trunc != b.trunc) throw Error("series truncation mismatch");
    Series<K> r(a.trunc);
    for (long i = 0; i < a.trunc; ++i) {
        if (coeff_is_zero(a.c[static_cast<size_t>(i)])) continue;
        for (long j = 0; i + j < a.trunc; ++j) {
            if (coeff_is_zero(b.c[static_cast<size_t>(j)])) continue;
            r.c[static_cast<size_t>(i + j)] =
                r.c[static_cast<size_t>(i + j)] +
                a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
        }
    }
    return r;
}

template <class K>
Series<K> operator*(const K& s, const Series<K>& a) {
    Series<K> r(a.trunc);
    for (long k = 0; k < a.trunc; ++k) r.c[static_cast<size_t>(k)] = s * a.c[static_cast<size_t>(k)];
    return r;
}

// Value of num/den at the origin of the perturbation, where den vanishes to
// some finite order v < trunc and num vanishes to order >= v (the overall
// quotient extends continuously). Throws ValuationMismatch otherwise.
template <class K>
K limit_ratio(const Series<K>& num, const Series<K>& den) {
    if (num.trunc != den.trunc) throw Error("series truncation mismatch");
    long v = den.valuation();
    if (v >= den.trunc) throw DivisionByZero("limit_ratio: denominator series is zero");
    long vn = num.valuation();
    if (vn < v) throw ValuationMismatch("limit_ratio: quotient has a genuine pole");
    if (vn > v) return K();
    return num.c[static_cast<size_t>(v)] / den.c[static_cast<size_t>(v)];
}

} // namespace threecolour

#endif
