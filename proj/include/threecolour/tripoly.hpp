#ifndef THREECOLOUR_TRIPOLY_HPP
#define THREECOLOUR_TRIPOLY_HPP

#include <array>
#include <complex>
#include <map>
#include <string>

#include "threecolour/board.hpp"
#include "threecolour/rational.hpp"

namespace threecolour {

// Sparse trivariate polynomial in t0, t1, t2 with big-integer coefficients.
// Exponents may be negative during intermediate Laurent manipulations; the
// final partition polynomials are ordinary homogeneous polynomials with
// non-negative coefficients.
struct TriPoly {
    std::map<std::array<long, 3>, Int> m;

    bool is_zero() const { return m.empty(); }
    void add_term(const std::array<long, 3>& e, const Int& v);
    Int coeff(const std::array<long, 3>& e) const;

    bool operator==(const TriPoly& o) const { return m == o.m; }
    bool operator!=(const TriPoly& o) const { return !(*this == o); }

    std::string to_string() const;
};

TriPoly operator+(const TriPoly& a, const TriPoly& b);
TriPoly operator-(const TriPoly& a, const TriPoly& b);
TriPoly operator-(const TriPoly& a);
TriPoly operator*(const TriPoly& a, const TriPoly& b);
TriPoly operator*(const Int& s, const TriPoly& a);

TriPoly tripoly_monomial(long e0, long e1, long e2, const Int& v = Int(1));
TriPoly tripoly_pow(const TriPoly& a, unsigned long e);

// Apply a permutation of the three variables: term exponent e goes to
// position perm[i] picking e[perm[i]] ... i.e. result(t0,t1,t2) =
// a(t_{perm[0]}, t_{perm[1]}, t_{perm[2]}).
TriPoly tripoly_permute(const TriPoly& a, const std::array<int, 3>& perm);

Rat tripoly_eval(const TriPoly& a, const Rat& t0, const Rat& t1, const Rat& t2);
std::complex<double> tripoly_eval(const TriPoly& a, const std::complex<double>& t0,
                                  const std::complex<double>& t1,
                                  const std::complex<double>& t2);

bool tripoly_is_homogeneous(const TriPoly& a, long degree);
bool tripoly_has_negative_coeff(const TriPoly& a);
// Smallest exponent of each variable over all terms (0 for the zero poly).
std::array<long, 3> tripoly_min_exponents(const TriPoly& a);

TriPoly tripoly_from_counts(const CountTable& t);

// Exact generating polynomial of the colour censuses of all boards of size n,
// homogeneous of degree (n+1)^2. Same guard as counting_table.
TriPoly partition_polynomial(long n, bool force = false);

} // namespace threecolour

#endif
