#include "threecolour/ratpoly.hpp"

#include <algorithm>

#include "threecolour/errors.hpp"

namespace threecolour {

static const Rat kZero(0);

RatPoly RatPoly::variable() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

RatPoly RatPoly::monomial(long deg, const Rat& v) {
    RatPoly p;
    if (v == 0 || deg < 0) return p;
    p.c.assign(static_cast<size_t>(deg) + 1, Rat(0));
    p.c.back() = v;
    return p;
}

void RatPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rat& RatPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c.size())) return kZero;
    return c[static_cast<size_t>(k)];
}

Rat& RatPoly::at(long k) {
    if (k >= static_cast<long>(c.size())) c.resize(static_cast<size_t>(k) + 1, Rat(0));
    return c[static_cast<size_t>(k)];
}

Rat RatPoly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

double RatPoly::eval_double(double x) const {
    double v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i].get_d();
    return v;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d.c[k - 1] = Rat(static_cast<long>(k)) * c[k];
    d.normalize();
    return d;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c[k].get_str();
        if (k > 0) s += "*" + var + "^" + std::to_string(k);
    }
    return s;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

RatPoly operator-(const RatPoly& a) {
    RatPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    r.normalize();
    return r;
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    if (s == 0) return RatPoly();
    RatPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

RatPoly operator*(const RatPoly& a, const Rat& s) { return s * a; }

RatPoly poly_pow(const RatPoly& a, unsigned long e) {
    RatPoly r = RatPoly::one(), b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZero("divrem: division by zero polynomial");
    RatPoly q, r = a;
    long db = b.degree();
    Rat lb = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        Rat f = r.lead() / lb;
        q.at(k) += f;
        for (long i = 0; i <= db; ++i) r.at(k + i) -= f * b.c[static_cast<size_t>(i)];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

RatPoly exact_divide(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw NotDivisible("exact_divide: remainder " + r.to_string());
    return q;
}

RatPoly reverse_coefficients(const RatPoly& p) {
    RatPoly r = p;
    std::reverse(r.c.begin(), r.c.end());
    r.normalize();
    return r;
}

RatPoly reverse_to_degree(const RatPoly& p, long d) {
    if (p.degree() > d) throw Error("reverse_to_degree: degree exceeds nominal degree");
    RatPoly r;
    if (p.is_zero()) return r;
    r.c.assign(static_cast<size_t>(d) + 1, Rat(0));
    for (size_t k = 0; k < p.c.size(); ++k) r.c[static_cast<size_t>(d) - k] = p.c[k];
    r.normalize();
    return r;
}

// Primitive pseudo-remainder sequence keeps coefficient growth in check while
// staying exact; the rational gcd is the monic image of the last nonzero term.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return RatPoly();
        return Rat(1) / b.lead() * b;
    }
    if (b.is_zero()) return Rat(1) / a.lead() * a;
    ZPoly f = to_primitive(a).second;
    ZPoly g = to_primitive(b).second;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // Pseudo-remainder of f by g: scale by the leading coefficient of g at
        // each reduction step so everything stays integral.
        Int lg = g.c.back();
        ZPoly r = f;
        while (!r.is_zero() && r.degree() >= g.degree()) {
            Int top = r.c.back();
            long k = r.degree() - g.degree();
            for (auto& v : r.c) v *= lg;
            for (long i = 0; i <= g.degree(); ++i)
                r.c[static_cast<size_t>(k + i)] -= top * g.c[static_cast<size_t>(i)];
            r.normalize();
        }
        f = g;
        if (!r.is_zero()) {
            // Strip content.
            Int cont = r.c[0];
            for (const auto& v : r.c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
            cont = abs(cont);
            for (auto& v : r.c) v /= cont;
        }
        g = r;
    }
    RatPoly h = from_zpoly(f);
    return Rat(1) / h.lead() * h;
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return RatPoly::one();
    RatPoly g = poly_gcd(p, p.derivative());
    RatPoly q = exact_divide(p, g);
    return Rat(1) / q.lead() * q;
}

RatPoly taylor_shift(const RatPoly& p, const Rat& a) {
    // Repeated in-place synthetic division; after pass k, w[k] is the
    // coefficient of x^k in p(x + a).
    RatPoly r;
    if (p.is_zero()) return r;
    std::vector<Rat> w = p.c;
    size_t d = w.size() - 1;
    for (size_t k = 0; k <= d; ++k) {
        for (size_t i = d; i-- > k;) w[i] += a * w[i + 1];
    }
    r.c = std::move(w);
    r.normalize();
    return r;
}

long root_multiplicity(const RatPoly& p, const Rat& point) {
    if (p.is_zero()) throw Error("root_multiplicity: zero polynomial");
    RatPoly shifted = taylor_shift(p, point);
    long v = 0;
    while (shifted.coeff(v) == 0) ++v;
    return v;
}

long trailing_valuation(const RatPoly& p) {
    if (p.is_zero()) throw Error("trailing_valuation: zero polynomial");
    long v = 0;
    while (p.coeff(v) == 0) ++v;
    return v;
}

void ZPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::derivative() const {
    ZPoly d;
    if (c.size() <= 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d.c[k - 1] = Int(static_cast<long>(k)) * c[k];
    d.normalize();
    return d;
}

int ZPoly::sign_at(const Int& num, const Int& den) const {
    // Value scaled by den^deg stays integral: sum c[i] * num^i * den^(d-i).
    if (is_zero()) return 0;
    Int acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * num + c[i] * int_pow(den, c.size() - 1 - i);
    return sgn(acc);
}

int ZPoly::sign_at(const Rat& x) const { return sign_at(x.get_num(), x.get_den()); }

int ZPoly::sign_at_pos_inf() const { return is_zero() ? 0 : sgn(c.back()); }

int ZPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sgn(c.back());
    return (degree() % 2 == 0) ? s : -s;
}

std::pair<Rat, ZPoly> to_primitive(const RatPoly& p) {
    ZPoly z;
    if (p.is_zero()) return {Rat(0), z};
    Int den(1);
    for (const auto& v : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> w(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        Rat s = p.c[i] * Rat(den);
        w[i] = s.get_num();
    }
    Int cont = w[0];
    for (const auto& v : w) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    cont = abs(cont);
    for (auto& v : w) v /= cont;
    z.c = std::move(w);
    return {Rat(cont, den), z};
}

RatPoly from_zpoly(const ZPoly& p) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const auto& v : p.c) r.c.emplace_back(v);
    r.normalize();
    return r;
}

} // namespace threecolour
