#include "threecolour/reconstruct.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "threecolour/errors.hpp"
#include "threecolour/qrfamily.hpp"

namespace threecolour {

namespace {

std::string triple_str(const std::array<long, 3>& p) {
    std::ostringstream os;
    os << "(" << p[0] << "," << p[1] << "," << p[2] << ")";
    return os.str();
}

// Binomial with the conventions needed at tiny sizes: a negative lower index
// gives 0, a zero lower index gives 1 regardless of the upper index.
Int gbinom(long a, long b) {
    if (b < 0) return Int(0);
    if (b == 0) return Int(1);
    if (a < 0) return Int(0);
    return binomial(a, b);
}

Int int_coeff(const Rat& c, const char* which) {
    if (!is_integer(c))
        throw NonIntegerCoefficient(std::string("reconstruction: ") + which +
                                    " has a non-integer coefficient");
    return c.get_num();
}

// The rotation sending a raw census (k0,k1,k2) to triangle coordinates with
// the distinguished colour first.
std::array<long, 3> rotate_census(const std::array<long, 3>& k, long n) {
    switch (n % 3) {
    case 0: return {k[0], k[1], k[2]};
    case 1: return {k[2], k[0], k[1]};
    default: return {k[1], k[2], k[0]};
    }
}

std::map<std::array<long, 3>, Int> rotated_table(const TriPoly& z, long n) {
    std::map<std::array<long, 3>, Int> t;
    for (const auto& [e, c] : z.m) t[rotate_census(e, n)] = c;
    return t;
}

Int table_value(const std::map<std::array<long, 3>, Int>& t,
                const std::array<long, 3>& p) {
    auto it = t.find(p);
    return it == t.end() ? Int(0) : it->second;
}

} // namespace

SupportProfile support_profile(long n) {
    if (n < 1) throw Error("support_profile: need n >= 1");
    SupportProfile s;
    s.n = n;
    switch (n % 6) {
    case 0:
    case 2:
        s.M = (5 * n * n + 8 * n) / 12;
        s.m = (n * n + 4 * n) / 6;
        s.eps = 1;
        break;
    case 1:
        s.M = (5 * n * n + 8 * n + 11) / 12;
        s.m = (n * n + 4 * n + 7) / 6;
        s.eps = -2;
        break;
    case 3:
    case 5:
        s.M = (5 * n * n + 8 * n + 3) / 12;
        s.m = (n * n + 4 * n + 3) / 6;
        s.eps = 0;
        break;
    default:            // n = 4 mod 6
        s.M = (5 * n * n + 8 * n + 8) / 12;
        s.m = (n * n + 4 * n + 4) / 6;
        s.eps = -1;
        break;
    }
    s.delta = n * n / 4;
    s.P = {s.m + s.eps, s.M, s.M};
    s.Q = {s.M + s.eps, s.m, s.M};
    s.R = {s.M + s.eps, s.M, s.m};
    return s;
}

TriPoly z3c_from_qr(const PFamily& fam, long n) {
    if (n < 0) throw Error("z3c_from_qr: negative size");
    auto [q, r] = qr_polys(fam, n);

    TriPoly e2;
    e2.add_term({1, 1, 0}, Int(1));
    e2.add_term({1, 0, 1}, Int(1));
    e2.add_term({0, 1, 1}, Int(1));

    std::vector<TriPoly> e2pow;
    long maxp = std::max(3 * q.degree() + 2, 3 * r.degree() + 1);
    if (maxp < 0) maxp = 0;
    e2pow.push_back(tripoly_monomial(0, 0, 0));
    for (long j = 1; j <= maxp; ++j) e2pow.push_back(e2pow.back() * e2);

    Int two_chi = (n % 2 == 1) ? Int(2) : Int(1);
    Int sign = (n % 2 == 0) ? Int(-1) : Int(1);   // (-1)^(n+1)

    TriPoly acc;
    auto add = [&](const Int& coeff, long p2, long a0, long a1, long a2) {
        if (coeff == 0) return;
        acc = acc + coeff * (e2pow[static_cast<size_t>(p2)] *
                             tripoly_monomial(a0, a1, a2));
    };

    if (n % 3 == 0) {
        long e = n * (n + 2) / 3;
        for (long k = 0; k <= q.degree(); ++k)
            add(sign * int_coeff(q.coeff(k), "q"), 3 * k + 2,
                e - 2 * k - 1, e - 2 * k - 1, e - 2 * k - 1);
        for (long k = 0; k <= r.degree(); ++k)
            add(-sign * two_chi * int_coeff(r.coeff(k), "r"), 3 * k,
                e - 2 * k + 1, e - 2 * k, e - 2 * k);
    } else if (n % 3 == 1) {
        long e = n * (n + 2) / 3;
        for (long k = 0; k <= q.degree(); ++k)
            add(sign * int_coeff(q.coeff(k), "q"), 3 * k,
                e - 2 * k + 1, e - 2 * k + 1, e - 2 * k - 1);
        for (long k = 0; k <= r.degree(); ++k)
            add(-sign * two_chi * int_coeff(r.coeff(k), "r"), 3 * k + 1,
                e - 2 * k, e - 2 * k, e - 2 * k - 1);
    } else {
        long f = (n + 1) * (n + 1) / 3;
        for (long k = 0; k <= q.degree(); ++k)
            add(sign * int_coeff(q.coeff(k), "q"), 3 * k,
                f - 2 * k, f - 2 * k, f - 2 * k);
        for (long k = 0; k <= r.degree(); ++k)
            add(-sign * two_chi * int_coeff(r.coeff(k), "r"), 3 * k + 1,
                f - 2 * k - 1, f - 2 * k, f - 2 * k - 1);
    }

    auto mins = tripoly_min_exponents(acc);
    if (mins[0] < 0 || mins[1] < 0 || mins[2] < 0)
        throw Error("z3c_from_qr: clearing left a negative exponent");
    if (!tripoly_is_homogeneous(acc, (n + 1) * (n + 1)))
        throw Error("z3c_from_qr: result is not homogeneous of degree (n+1)^2");
    if (tripoly_has_negative_coeff(acc))
        throw NegativeCoefficient(
            "reconstruction produced a negative census count");
    return acc;
}

TriPoly z3c_from_qr(long n) {
    PFamily fam = build_P(std::max<long>(1, n - 1));
    return z3c_from_qr(fam, n);
}

CheckReport ecc_check(const TriPoly& z, long n) {
    CheckReport rep{"support-boundary", n, true, ""};
    SupportProfile s = support_profile(n);
    auto t = rotated_table(z, n);
    bool even = (n % 2 == 0);

    long maxx = LONG_MIN, minx = LONG_MAX, maxy = LONG_MIN, miny = LONG_MAX,
         maxz = LONG_MIN, minz = LONG_MAX;
    for (const auto& [p, c] : t) {
        if (c == 0) continue;
        if (p[0] > s.M + s.eps || p[1] > s.M || p[2] > s.M) {
            rep.pass = false;
            rep.detail = "support escapes the triangle at " + triple_str(p);
            return rep;
        }
        maxx = std::max(maxx, p[0]); minx = std::min(minx, p[0]);
        maxy = std::max(maxy, p[1]); miny = std::min(miny, p[1]);
        maxz = std::max(maxz, p[2]); minz = std::min(minz, p[2]);
    }

    long expect_minx = even ? s.m + s.eps + 1 : s.m + s.eps;
    if (maxx != s.M + s.eps || minx != expect_minx || maxy != s.M ||
        miny != s.m || maxz != s.M || minz != s.m) {
        rep.pass = false;
        rep.detail = "extreme counts do not match the profile";
        return rep;
    }

    Int atP = table_value(t, s.P);
    if (even ? (atP != 0) : (atP == 0)) {
        rep.pass = false;
        rep.detail = "corner occupancy has the wrong parity behaviour at P";
        return rep;
    }

    for (long k = 0; k <= s.delta; ++k) {
        Int lateral = even ? gbinom(s.delta - 1, k) : gbinom(s.delta, k);
        Int across = even ? gbinom(s.delta, k)
                          : gbinom(s.delta - 2, k) + gbinom(s.delta - 2, k - 2);
        std::array<long, 3> pq = {s.M + s.eps - k, s.m + k, s.M};
        std::array<long, 3> pr = {s.M + s.eps - k, s.M, s.m + k};
        std::array<long, 3> qr = {s.M + s.eps, s.M - k, s.m + k};
        if (table_value(t, pq) != lateral || table_value(t, pr) != lateral) {
            rep.pass = false;
            rep.detail = "boundary value mismatch at " + triple_str(pq);
            return rep;
        }
        if (table_value(t, qr) != across) {
            rep.pass = false;
            rep.detail = "boundary value mismatch at " + triple_str(qr);
            return rep;
        }
    }
    return rep;
}

CheckReport ecc_check(long n) {
    TriPoly z = n <= 6 ? partition_polynomial(n) : z3c_from_qr(n);
    return ecc_check(z, n);
}

CheckReport mod2_check(const TriPoly& z, long n) {
    if (n % 2 == 0) throw Error("mod2_check: defined for odd sizes only");
    CheckReport rep{"parity-symmetry", n, true, ""};
    SupportProfile s = support_profile(n);

    // shift the distinguished coordinate so the triangle becomes symmetric
    std::map<std::array<long, 3>, int> parity;
    for (const auto& [e, c] : z.m) {
        auto p = rotate_census(e, n);
        p[0] -= s.eps;
        parity[p] = mpz_odd_p(c.get_mpz_t()) ? 1 : 0;
    }
    auto pval = [&](const std::array<long, 3>& p) {
        auto it = parity.find(p);
        return it == parity.end() ? 0 : it->second;
    };

    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& [p, v] : parity) {
        for (const auto& pm : perms) {
            std::array<long, 3> q = {p[pm[0]], p[pm[1]], p[pm[2]]};
            if (pval(q) != v) {
                rep.pass = false;
                rep.detail = "parity differs on the orbit of " + triple_str(p);
                return rep;
            }
        }
    }
    return rep;
}

CheckReport mod2_check(long n) {
    if (n % 2 == 0) throw Error("mod2_check: defined for odd sizes only");
    TriPoly z = n <= 6 ? partition_polynomial(n) : z3c_from_qr(n);
    return mod2_check(z, n);
}

} // namespace threecolour
