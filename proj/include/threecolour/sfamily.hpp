#ifndef THREECOLOUR_SFAMILY_HPP
#define THREECOLOUR_SFAMILY_HPP

#include <vector>

#include "threecolour/bipoly.hpp"
#include "threecolour/errors.hpp"
#include "threecolour/series.hpp"

namespace threecolour {

// Symmetric polynomial family on 2n+1 arguments, defined through the kernel
// polynomials F (three slots) and G (two slots): a determinant of F/G entries
// scaled back by all G factors and divided by two Vandermonde factors.
// Coincident arguments are removable singularities; s_eval resolves them with
// a formal perturbation carried in truncated series.

template <class K>
K kconst(long v) {
    return K(Rat(v));
}

// F(x,y,z) = (zeta+2)xyz - zeta(xy+yz+xz+x+y+z) + zeta(2 zeta+1).
template <class K>
K fval(const K& x, const K& y, const K& z, const K& zeta) {
    K one = kconst<K>(1), two = kconst<K>(2);
    return (zeta + two) * x * y * z - zeta * (x * y + y * z + x * z + x + y + z) +
           zeta * (two * zeta + one);
}

// G(x,y) = (zeta+2)xy(x+y) - zeta(x^2+y^2) - 2(zeta^2+3 zeta+1)xy
//          + zeta(2 zeta+1)(x+y).
template <class K>
K gval(const K& x, const K& y, const K& zeta) {
    K one = kconst<K>(1), two = kconst<K>(2), three = kconst<K>(3);
    return (zeta + two) * x * y * (x + y) - zeta * (x * x + y * y) -
           two * (zeta * zeta + three * zeta + one) * x * y +
           zeta * (two * zeta + one) * (x + y);
}

template <class K>
Series<K> series_F(const Series<K>& x, const Series<K>& y, const Series<K>& z,
                   const K& zeta) {
    K one = kconst<K>(1), two = kconst<K>(2);
    K a = K(zeta + two);
    K c = K(zeta * (two * zeta + one));
    return a * (x * y * z) - zeta * (x * y + y * z + x * z + x + y + z) +
           Series<K>::constant(x.trunc, c);
}

template <class K>
Series<K> series_G(const Series<K>& x, const Series<K>& y, const K& zeta) {
    K one = kconst<K>(1), two = kconst<K>(2), three = kconst<K>(3);
    K a = K(zeta + two);
    K b = K(two * (zeta * zeta + three * zeta + one));
    K c = K(zeta * (two * zeta + one));
    Series<K> xy = x * y;
    return a * (xy * (x + y)) - zeta * (x * x + y * y) - b * xy + c * (x + y);
}

// Determinant by cofactor expansion along the first column. Needs only +, -
// and * from R; never materialises a ring zero, so series of any truncation
// pass through unharmed.
template <class R>
R ring_det(const std::vector<std::vector<R>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    R acc{};
    bool assigned = false;
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<R> row(m[r].begin() + 1, m[r].end());
            minor.push_back(std::move(row));
        }
        R term = m[i][0] * ring_det(minor);
        if (!assigned) {
            acc = term;
            assigned = true;
        } else if (i % 2 == 0) {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    return acc;
}

// Value of the symmetric family member on an odd-length argument list of
// 2n+1 entries. The assignment of arguments to determinant slots is
// internal; by symmetry it does not affect the value. Repeats are fine in
// perturbation mode. With perturb = false, a repeat that lands two equal
// values in the same Vandermonde block raises DivisionByZero.
template <class K>
K s_eval(const std::vector<K>& args, const K& zeta, bool perturb = true) {
    if (args.empty() || args.size() % 2 == 0)
        throw Error("s_eval: argument list must have odd length");
    const long n = (static_cast<long>(args.size()) - 1) / 2;
    if (n == 0) return kconst<K>(1);

    // Group equal arguments, keeping first-occurrence order.
    std::vector<K> values;
    std::vector<long> mult;
    for (const K& a : args) {
        bool found = false;
        for (size_t v = 0; v < values.size(); ++v) {
            if (values[v] == a) {
                ++mult[v];
                found = true;
                break;
            }
        }
        if (!found) {
            values.push_back(a);
            mult.push_back(1);
        }
    }

    // The z slot tolerates coincidences with everything, so hand it one copy
    // of the most repeated value.
    size_t zi = 0;
    for (size_t v = 1; v < values.size(); ++v)
        if (mult[v] > mult[zi]) zi = v;
    K zval = values[zi];
    --mult[zi];

    // Deal the remaining copies card by card onto the lighter block; equal
    // values then split as evenly as the block capacities allow, which keeps
    // the Vandermonde vanishing order minimal.
    std::vector<K> xs, ys;
    std::vector<long> xmult(values.size(), 0), ymult(values.size(), 0);
    for (size_t v = 0; v < values.size(); ++v) {
        for (long c = 0; c < mult[v]; ++c) {
            bool to_x;
            if (static_cast<long>(xs.size()) >= n)
                to_x = false;
            else if (static_cast<long>(ys.size()) >= n)
                to_x = true;
            else
                to_x = xs.size() <= ys.size();
            if (to_x) {
                xs.push_back(values[v]);
                ++xmult[v];
            } else {
                ys.push_back(values[v]);
                ++ymult[v];
            }
        }
    }

    long vanish = 0;
    for (size_t v = 0; v < values.size(); ++v)
        vanish += xmult[v] * (xmult[v] - 1) / 2 + ymult[v] * (ymult[v] - 1) / 2;
    if (vanish > 0 && !perturb)
        throw DivisionByZero("s_eval: coincident arguments with perturbation disabled");

    const long trunc = vanish + 1;
    std::vector<Series<K>> X, Y;
    X.reserve(static_cast<size_t>(n));
    Y.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        X.push_back(Series<K>::linear(trunc, xs[static_cast<size_t>(i)], kconst<K>(i + 1)));
    for (long j = 0; j < n; ++j)
        Y.push_back(Series<K>::linear(trunc, ys[static_cast<size_t>(j)], kconst<K>(j + 1)));
    Series<K> Z = Series<K>::constant(trunc, zval);

    // Row-scaled determinant: entry (i,j) carries F(x_i,y_j,z) times the
    // product of G(x_i,y_k) over k != j, so no entry ever divides by G.
    std::vector<std::vector<Series<K>>> gm(static_cast<size_t>(n),
                                           std::vector<Series<K>>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k)
            gm[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                series_G(X[static_cast<size_t>(i)], Y[static_cast<size_t>(k)], zeta);

    std::vector<std::vector<Series<K>>> mat(static_cast<size_t>(n),
                                            std::vector<Series<K>>(static_cast<size_t>(n)));
    std::vector<Series<K>> pre(static_cast<size_t>(n) + 1), suf(static_cast<size_t>(n) + 1);
    for (long i = 0; i < n; ++i) {
        pre[0] = Series<K>::constant(trunc, kconst<K>(1));
        for (long j = 0; j < n; ++j)
            pre[static_cast<size_t>(j) + 1] =
                pre[static_cast<size_t>(j)] * gm[static_cast<size_t>(i)][static_cast<size_t>(j)];
        suf[static_cast<size_t>(n)] = Series<K>::constant(trunc, kconst<K>(1));
        for (long j = n - 1; j >= 0; --j)
            suf[static_cast<size_t>(j)] =
                gm[static_cast<size_t>(i)][static_cast<size_t>(j)] * suf[static_cast<size_t>(j) + 1];
        for (long j = 0; j < n; ++j)
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                series_F(X[static_cast<size_t>(i)], Y[static_cast<size_t>(j)], Z, zeta) *
                pre[static_cast<size_t>(j)] * suf[static_cast<size_t>(j) + 1];
    }

    Series<K> det = ring_det(mat);
    Series<K> van = Series<K>::constant(trunc, kconst<K>(1));
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            van = van * (X[static_cast<size_t>(j)] - X[static_cast<size_t>(i)]);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            van = van * (Y[static_cast<size_t>(j)] - Y[static_cast<size_t>(i)]);
    return limit_ratio(det, van);
}

// Kernel polynomials as explicit bivariate polynomials in (x,y), with the
// third slot of F frozen at a constant.
template <class C>
BiPolyT<C> bipoly_F(const C& z, const C& zeta) {
    C one = kconst<C>(1), two = kconst<C>(2);
    BiPolyT<C> f;
    f.set(1, 1, (zeta + two) * z - zeta);
    f.set(1, 0, C() - zeta * (one + z));
    f.set(0, 1, C() - zeta * (one + z));
    f.set(0, 0, zeta * (two * zeta + one) - zeta * z);
    f.normalize();
    return f;
}

template <class C>
BiPolyT<C> bipoly_G(const C& zeta) {
    C one = kconst<C>(1), two = kconst<C>(2), three = kconst<C>(3);
    BiPolyT<C> g;
    g.set(2, 1, zeta + two);
    g.set(1, 2, zeta + two);
    g.set(2, 0, C() - zeta);
    g.set(0, 2, C() - zeta);
    g.set(1, 1, C() - two * (zeta * zeta + three * zeta + one));
    g.set(1, 0, zeta * (two * zeta + one));
    g.set(0, 1, zeta * (two * zeta + one));
    g.normalize();
    return g;
}

// Matrix N with d^{a+b}(F/G)/dx^a dy^b = N[a][b] / G^{a+b+1} for
// 0 <= a,b < m, built by the quotient-rule recursion that clears one extra
// power of G per derivative.
template <class C>
std::vector<std::vector<BiPolyT<C>>> mixed_partial_numerators(long m, const C& z,
                                                              const C& zeta) {
    BiPolyT<C> G = bipoly_G(zeta);
    BiPolyT<C> Gx = G.dx(), Gy = G.dy();
    std::vector<std::vector<BiPolyT<C>>> N(
        static_cast<size_t>(m), std::vector<BiPolyT<C>>(static_cast<size_t>(m)));
    N[0][0] = bipoly_F(z, zeta);
    for (long b = 1; b < m; ++b)
        N[0][static_cast<size_t>(b)] = G * N[0][static_cast<size_t>(b) - 1].dy() -
                                       kconst<C>(b) * (N[0][static_cast<size_t>(b) - 1] * Gy);
    for (long a = 1; a < m; ++a)
        for (long b = 0; b < m; ++b)
            N[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                G * N[static_cast<size_t>(a) - 1][static_cast<size_t>(b)].dx() -
                kconst<C>(a + b) *
                    (N[static_cast<size_t>(a) - 1][static_cast<size_t>(b)] * Gx);
    return N;
}

// Fully coincident member T_n(x,y) = value on (x repeated n, y repeated n, z)
// as an explicit bivariate polynomial: the confluent determinant divided by
// prod_{k<n} (k!)^2.
BiPoly t_poly(long n, const Rat& zeta, const Rat& z);

} // namespace threecolour

#endif
