#ifndef THREECOLOUR_BIPOLY_HPP
#define THREECOLOUR_BIPOLY_HPP

#include <string>
#include <vector>

#include "threecolour/ratfunc.hpp"
#include "threecolour/ratpoly.hpp"

namespace threecolour {

// Dense bivariate polynomial over a coefficient ring C. g[i][j] is the
// coefficient of X^i Y^j. The main instantiation BiPolyT<Rat> carries the
// two-variable family polynomials (X the spectral variable, Y the weight
// parameter); other rings serve the derivative-determinant machinery.
template <class C>
struct BiPolyT {
    std::vector<std::vector<C>> g;

    BiPolyT() = default;
    static BiPolyT zero() { return BiPolyT(); }
    static BiPolyT constant(const C& v) {
        BiPolyT p;
        if (!coeff_is_zero(v)) p.g = {{v}};
        return p;
    }
    static BiPolyT variable_x(const C& one) {
        BiPolyT p;
        p.g = {{C()}, {one}};
        return p;
    }
    static BiPolyT variable_y(const C& one) {
        BiPolyT p;
        p.g = {{C(), one}};
        return p;
    }

    bool is_zero() const { return g.empty(); }
    long degx() const { return static_cast<long>(g.size()) - 1; }
    long degy() const {
        long d = -1;
        for (const auto& row : g) d = std::max(d, static_cast<long>(row.size()) - 1);
        return d;
    }

    C coeff(long i, long j) const {
        if (i < 0 || i >= static_cast<long>(g.size())) return C();
        const auto& row = g[static_cast<size_t>(i)];
        if (j < 0 || j >= static_cast<long>(row.size())) return C();
        return row[static_cast<size_t>(j)];
    }

    void set(long i, long j, const C& v) {
        if (i >= static_cast<long>(g.size())) g.resize(static_cast<size_t>(i) + 1);
        auto& row = g[static_cast<size_t>(i)];
        if (j >= static_cast<long>(row.size())) row.resize(static_cast<size_t>(j) + 1, C());
        row[static_cast<size_t>(j)] = v;
    }

    void normalize() {
        for (auto& row : g) {
            while (!row.empty() && coeff_is_zero(row.back())) row.pop_back();
        }
        while (!g.empty() && g.back().empty()) g.pop_back();
    }

    BiPolyT dx() const {
        BiPolyT r;
        for (size_t i = 1; i < g.size(); ++i) {
            for (size_t j = 0; j < g[i].size(); ++j) {
                if (coeff_is_zero(g[i][j])) continue;
                C v = C(static_cast<long>(i)) * g[i][j];
                r.set(static_cast<long>(i) - 1, static_cast<long>(j), v);
            }
        }
        r.normalize();
        return r;
    }

    BiPolyT dy() const {
        BiPolyT r;
        for (size_t i = 0; i < g.size(); ++i) {
            for (size_t j = 1; j < g[i].size(); ++j) {
                if (coeff_is_zero(g[i][j])) continue;
                C v = C(static_cast<long>(j)) * g[i][j];
                r.set(static_cast<long>(i), static_cast<long>(j) - 1, v);
            }
        }
        r.normalize();
        return r;
    }

    // Horner evaluation, outer variable first.
    C eval(const C& x, const C& y) const {
        C acc{};
        for (size_t i = g.size(); i-- > 0;) {
            C row{};
            for (size_t j = g[i].size(); j-- > 0;) row = row * y + g[i][j];
            acc = acc * x + row;
        }
        return acc;
    }

    bool operator==(const BiPolyT& o) const {
        BiPolyT a = *this, b = o;
        a.normalize();
        b.normalize();
        return a.g == b.g;
    }
    bool operator!=(const BiPolyT& o) const { return !(*this == o); }
};

template <class C>
BiPolyT<C> operator+(const BiPolyT<C>& a, const BiPolyT<C>& b) {
    BiPolyT<C> r = a;
    for (size_t i = 0; i < b.g.size(); ++i)
        for (size_t j = 0; j < b.g[i].size(); ++j)
            r.set(static_cast<long>(i), static_cast<long>(j),
                  r.coeff(static_cast<long>(i), static_cast<long>(j)) + b.g[i][j]);
    r.normalize();
    return r;
}

template <class C>
BiPolyT<C> operator-(const BiPolyT<C>& a) {
    BiPolyT<C> r = a;
    for (auto& row : r.g)
        for (auto& v : row) v = C() - v;
    return r;
}

template <class C>
BiPolyT<C> operator-(const BiPolyT<C>& a, const BiPolyT<C>& b) {
    return a + (-b);
}

template <class C>
BiPolyT<C> operator*(const BiPolyT<C>& a, const BiPolyT<C>& b) {
    BiPolyT<C> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.g.assign(a.g.size() + b.g.size() - 1, {});
    for (size_t i = 0; i < a.g.size(); ++i) {
        for (size_t j = 0; j < a.g[i].size(); ++j) {
            if (coeff_is_zero(a.g[i][j])) continue;
            for (size_t k = 0; k < b.g.size(); ++k) {
                for (size_t l = 0; l < b.g[k].size(); ++l) {
                    if (coeff_is_zero(b.g[k][l])) continue;
                    long xi = static_cast<long>(i + k), yj = static_cast<long>(j + l);
                    r.set(xi, yj, r.coeff(xi, yj) + a.g[i][j] * b.g[k][l]);
                }
            }
        }
    }
    r.normalize();
    return r;
}

template <class C>
BiPolyT<C> operator*(const C& s, const BiPolyT<C>& a) {
    BiPolyT<C> r;
    if (coeff_is_zero(s)) return r;
    r = a;
    for (auto& row : r.g)
        for (auto& v : row) v = s * v;
    r.normalize();
    return r;
}

template <class C>
BiPolyT<C> bipoly_pow(const BiPolyT<C>& a, unsigned long e) {
    BiPolyT<C> r = BiPolyT<C>::constant(C(1));
    BiPolyT<C> b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

using BiPoly = BiPolyT<Rat>;

// Row i of the grid as a univariate polynomial in Y.
RatPoly bipoly_row(const BiPoly& p, long i);
BiPoly bipoly_from_rows(std::vector<RatPoly> rows);
BiPoly bipoly_from_x_poly(const RatPoly& p);
BiPoly bipoly_from_y_poly(const RatPoly& p);

// Substitute X by a polynomial (or num/den with the denominator cleared) in Y.
RatPoly substitute_x(const BiPoly& p, const RatPoly& value);
// den^degx(p) * p(num/den, Y).
RatPoly substitute_x_cleared(const BiPoly& p, const RatPoly& num, const RatPoly& den);
// Evaluate Y at a rational, leaving a polynomial in X.
RatPoly substitute_y_value(const BiPoly& p, const Rat& y);

// Exact division (long division in X with exact coefficient divisions in Y).
// Throws NotDivisible when b does not divide a.
BiPoly bipoly_exact_divide(const BiPoly& a, const BiPoly& b);

std::string bipoly_to_string(const BiPoly& p, const std::string& xv = "x",
                             const std::string& yv = "zeta");

} // namespace threecolour

#endif
