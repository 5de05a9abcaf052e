#include "threecolour/bipoly.hpp"

#include <sstream>

#include "threecolour/errors.hpp"

namespace threecolour {

RatPoly bipoly_row(const BiPoly& p, long i) {
    if (i < 0 || i >= static_cast<long>(p.g.size())) return RatPoly::zero();
    return RatPoly(p.g[static_cast<size_t>(i)]);
}

BiPoly bipoly_from_rows(std::vector<RatPoly> rows) {
    BiPoly p;
    p.g.reserve(rows.size());
    for (auto& r : rows) p.g.push_back(std::move(r.c));
    p.normalize();
    return p;
}

BiPoly bipoly_from_x_poly(const RatPoly& p) {
    BiPoly r;
    for (long i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) r.set(i, 0, p.coeff(i));
    r.normalize();
    return r;
}

BiPoly bipoly_from_y_poly(const RatPoly& p) {
    BiPoly r;
    if (!p.is_zero()) r.g.push_back(p.c);
    return r;
}

RatPoly substitute_x(const BiPoly& p, const RatPoly& value) {
    RatPoly acc;
    for (size_t i = p.g.size(); i-- > 0;)
        acc = acc * value + RatPoly(p.g[i]);
    return acc;
}

RatPoly substitute_x_cleared(const BiPoly& p, const RatPoly& num, const RatPoly& den) {
    long d = p.degx();
    if (d < 0) return RatPoly::zero();
    RatPoly acc;
    for (long i = d; i >= 0; --i) {
        acc = acc * num + bipoly_row(p, i) * poly_pow(den, static_cast<unsigned long>(d - i));
    }
    return acc;
}

RatPoly substitute_y_value(const BiPoly& p, const Rat& y) {
    RatPoly r;
    for (long i = 0; i <= p.degx(); ++i) {
        Rat v = bipoly_row(p, i).eval(y);
        if (v != 0) r.at(i) = v;
    }
    r.normalize();
    return r;
}

BiPoly bipoly_exact_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("bipoly_exact_divide: zero divisor");
    std::vector<RatPoly> rem;
    for (const auto& row : a.g) rem.push_back(RatPoly(row));
    long db = b.degx();
    RatPoly blead = bipoly_row(b, db);
    auto deg_of = [&](const std::vector<RatPoly>& v) {
        long d = static_cast<long>(v.size()) - 1;
        while (d >= 0 && v[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    long da = deg_of(rem);
    if (da < db) {
        if (da < 0) return BiPoly();
        throw NotDivisible("bipoly_exact_divide: divisor degree exceeds dividend");
    }
    std::vector<RatPoly> quot(static_cast<size_t>(da - db) + 1);
    for (long k = da - db; k >= 0; --k) {
        RatPoly top = (k + db < static_cast<long>(rem.size()))
                          ? rem[static_cast<size_t>(k + db)]
                          : RatPoly::zero();
        if (top.is_zero()) continue;
        RatPoly q = exact_divide(top, blead);
        quot[static_cast<size_t>(k)] = q;
        for (long i = 0; i <= db; ++i) {
            RatPoly& slot = rem[static_cast<size_t>(k + i)];
            slot = slot - q * bipoly_row(b, i);
        }
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw NotDivisible("bipoly_exact_divide: nonzero remainder");
    return bipoly_from_rows(std::move(quot));
}

std::string bipoly_to_string(const BiPoly& p, const std::string& xv, const std::string& yv) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degx(); i >= 0; --i) {
        RatPoly row = bipoly_row(p, i);
        if (row.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << "(" << row.to_string(yv) << ")";
        } else {
            os << "(" << row.to_string(yv) << ")*" << xv;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace threecolour
