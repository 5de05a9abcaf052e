#include "threecolour/tripoly.hpp"

#include <sstream>

#include "threecolour/enumerate.hpp"
#include "threecolour/errors.hpp"

namespace threecolour {

void TriPoly::add_term(const std::array<long, 3>& e, const Int& v) {
    if (v == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, v);
        return;
    }
    it->second += v;
    if (it->second == 0) m.erase(it);
}

Int TriPoly::coeff(const std::array<long, 3>& e) const {
    auto it = m.find(e);
    return it == m.end() ? Int(0) : it->second;
}

std::string TriPoly::to_string() const {
    if (m.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : m) {
        if (!first) os << " + ";
        first = false;
        os << v.get_str() << "*t0^" << e[0] << "*t1^" << e[1] << "*t2^" << e[2];
    }
    return os.str();
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    for (const auto& [e, v] : b.m) r.add_term(e, v);
    return r;
}

TriPoly operator-(const TriPoly& a) {
    TriPoly r;
    for (const auto& [e, v] : a.m) r.m.emplace(e, -v);
    return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ea, va] : a.m) {
        for (const auto& [eb, vb] : b.m) {
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, va * vb);
        }
    }
    return r;
}

TriPoly operator*(const Int& s, const TriPoly& a) {
    TriPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : a.m) r.m.emplace(e, s * v);
    return r;
}

TriPoly tripoly_monomial(long e0, long e1, long e2, const Int& v) {
    TriPoly r;
    r.add_term({e0, e1, e2}, v);
    return r;
}

TriPoly tripoly_pow(const TriPoly& a, unsigned long e) {
    TriPoly r = tripoly_monomial(0, 0, 0);
    TriPoly b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

TriPoly tripoly_permute(const TriPoly& a, const std::array<int, 3>& perm) {
    TriPoly r;
    for (const auto& [e, v] : a.m)
        r.m.emplace(std::array<long, 3>{e[static_cast<size_t>(perm[0])],
                                        e[static_cast<size_t>(perm[1])],
                                        e[static_cast<size_t>(perm[2])]},
                    v);
    return r;
}

Rat tripoly_eval(const TriPoly& a, const Rat& t0, const Rat& t1, const Rat& t2) {
    Rat acc = 0;
    for (const auto& [e, v] : a.m) {
        Rat term = Rat(v) * rat_pow(t0, e[0]) * rat_pow(t1, e[1]) * rat_pow(t2, e[2]);
        acc += term;
    }
    return acc;
}

std::complex<double> tripoly_eval(const TriPoly& a, const std::complex<double>& t0,
                                  const std::complex<double>& t1,
                                  const std::complex<double>& t2) {
    std::complex<double> acc = 0.0;
    for (const auto& [e, v] : a.m) {
        std::complex<double> term = v.get_d();
        term *= std::pow(t0, static_cast<double>(e[0]));
        term *= std::pow(t1, static_cast<double>(e[1]));
        term *= std::pow(t2, static_cast<double>(e[2]));
        acc += term;
    }
    return acc;
}

bool tripoly_is_homogeneous(const TriPoly& a, long degree) {
    for (const auto& [e, v] : a.m)
        if (e[0] + e[1] + e[2] != degree) return false;
    return true;
}

bool tripoly_has_negative_coeff(const TriPoly& a) {
    for (const auto& [e, v] : a.m)
        if (v < 0) return true;
    return false;
}

std::array<long, 3> tripoly_min_exponents(const TriPoly& a) {
    std::array<long, 3> lo{0, 0, 0};
    bool first = true;
    for (const auto& [e, v] : a.m) {
        if (first) {
            lo = e;
            first = false;
            continue;
        }
        for (int i = 0; i < 3; ++i) lo[static_cast<size_t>(i)] = std::min(lo[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
    }
    return lo;
}

TriPoly tripoly_from_counts(const CountTable& t) {
    TriPoly r;
    for (const auto& [k, v] : t.counts) r.m.emplace(k, v);
    return r;
}

TriPoly partition_polynomial(long n, bool force) {
    return tripoly_from_counts(counting_table(n, force));
}

} // namespace threecolour
