#ifndef THREECOLOUR_STURM_HPP
#define THREECOLOUR_STURM_HPP

#include <optional>
#include <vector>

#include "threecolour/ratpoly.hpp"

namespace threecolour {

// One isolated real root. lo == hi means the root is the rational point
// itself; otherwise the root lies strictly inside (lo, hi) and is the only
// root of the polynomial there.
struct RootInterval {
    Rat lo, hi;
    long multiplicity = 1;
    bool exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
};

// Sign-faithful Sturm chain of a squarefree polynomial, kept as primitive
// integer polynomials so sign evaluation is pure integer arithmetic.
class SturmChain {
  public:
    explicit SturmChain(const RatPoly& squarefree);
    long count_half_open(const Rat& a, const Rat& b) const; // roots in (a, b]
    long count_line() const;                                // all real roots
    int sign_changes_at(const Rat& x) const;
    int sign_changes_neg_inf() const;
    int sign_changes_pos_inf() const;

  private:
    std::vector<ZPoly> seq_;
};

// Number of distinct real roots (whole line / half-open interval (a, b]).
long count_real_roots(const RatPoly& p);
long count_real_roots(const RatPoly& p, const Rat& a, const Rat& b);

// Isolating intervals for all real roots, sorted increasing, with
// multiplicities recovered from the derivative gcd chain. An optional window
// restricts the search to (lo, hi].
std::vector<RootInterval> isolate_real_roots(const RatPoly& p);
std::vector<RootInterval> isolate_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi);

// Shrink an isolating interval of a squarefree polynomial below `width`.
void refine_interval(const RatPoly& squarefree, RootInterval& iv, const Rat& width);

// Refine two families of isolating intervals until no interval of one
// overlaps any interval of the other (their polynomials must be coprime).
void refine_until_disjoint(const RatPoly& p1, std::vector<RootInterval>& r1,
                           const RatPoly& p2, std::vector<RootInterval>& r2);

// Rational upper bound B such that all real roots lie in (-B, B).
Rat cauchy_root_bound(const RatPoly& p);

} // namespace threecolour

#endif
