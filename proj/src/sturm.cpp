#include "threecolour/sturm.hpp"

#include <algorithm>

#include "threecolour/errors.hpp"

namespace threecolour {

// Pseudo-remainder of a by b scaled so the result is a positive rational
// multiple of the true remainder (sign matters for Sturm sequences).
static ZPoly positive_pseudo_rem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    Int lb = b.c.back();
    long flips = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int top = r.c.back();
        long k = r.degree() - b.degree();
        for (auto& v : r.c) v *= lb;
        for (long i = 0; i <= b.degree(); ++i)
            r.c[static_cast<size_t>(k + i)] -= top * b.c[static_cast<size_t>(i)];
        r.normalize();
        if (lb < 0) ++flips;
    }
    if (flips % 2) {
        for (auto& v : r.c) v = -v;
    }
    return r;
}

static void strip_content(ZPoly& p) {
    if (p.is_zero()) return;
    Int cont = p.c[0];
    for (const auto& v : p.c) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.get_mpz_t());
    cont = abs(cont);
    for (auto& v : p.c) v /= cont;
}

SturmChain::SturmChain(const RatPoly& squarefree) {
    if (squarefree.is_zero()) throw Error("SturmChain: zero polynomial");
    ZPoly s0 = to_primitive(squarefree).second;
    seq_.push_back(s0);
    ZPoly s1 = s0.derivative();
    strip_content(s1);
    if (s1.is_zero()) return; // constant polynomial
    seq_.push_back(s1);
    while (true) {
        const ZPoly& a = seq_[seq_.size() - 2];
        const ZPoly& b = seq_.back();
        ZPoly r = positive_pseudo_rem(a, b);
        if (r.is_zero()) break;
        for (auto& v : r.c) v = -v;
        strip_content(r);
        seq_.push_back(std::move(r));
    }
}

static long changes(const std::vector<int>& signs) {
    long n = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++n;
        prev = s;
    }
    return n;
}

int SturmChain::sign_changes_at(const Rat& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(p.sign_at(x));
    return static_cast<int>(changes(s));
}

int SturmChain::sign_changes_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(p.sign_at_neg_inf());
    return static_cast<int>(changes(s));
}

int SturmChain::sign_changes_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(p.sign_at_pos_inf());
    return static_cast<int>(changes(s));
}

long SturmChain::count_half_open(const Rat& a, const Rat& b) const {
    if (a >= b) return 0;
    return sign_changes_at(a) - sign_changes_at(b);
}

long SturmChain::count_line() const { return sign_changes_neg_inf() - sign_changes_pos_inf(); }

long count_real_roots(const RatPoly& p) {
    if (p.is_zero()) throw Error("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmChain(squarefree_part(p)).count_line();
}

long count_real_roots(const RatPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw Error("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmChain(squarefree_part(p)).count_half_open(a, b);
}

Rat cauchy_root_bound(const RatPoly& p) {
    if (p.is_zero() || p.degree() < 1) return Rat(1);
    Rat m(0);
    for (long k = 0; k < p.degree(); ++k) {
        Rat a = abs(p.coeff(k));
        if (a > m) m = a;
    }
    return Rat(1) + m / Rat(abs(p.lead()));
}

namespace {

void isolate_rec(const SturmChain& chain, const RatPoly& sf, const Rat& a, const Rat& b,
                 std::vector<RootInterval>& out) {
    long cnt = chain.count_half_open(a, b);
    if (cnt == 0) return;
    if (cnt == 1) {
        Rat lo = a, hi = b;
        if (sf.eval(hi) == 0) {
            out.push_back({hi, hi, 1});
            return;
        }
        // Keep the left endpoint off the root set so sign bisection works.
        while (sf.eval(lo) == 0) {
            Rat m = (lo + hi) / 2;
            if (sf.eval(m) == 0) {
                out.push_back({m, m, 1});
                return;
            }
            if (chain.count_half_open(lo, m) == 1) {
                hi = m;
            } else {
                lo = m;
            }
        }
        out.push_back({lo, hi, 1});
        return;
    }
    Rat mid = (a + b) / 2;
    isolate_rec(chain, sf, a, mid, out);
    isolate_rec(chain, sf, mid, b, out);
}

// Multiplicity via the gcd chain g0 = p, g_{k+1} = gcd(g_k, g_k'): a root has
// multiplicity m exactly when it survives into g_{m-1} but not g_m.
long multiplicity_in_chain(const std::vector<RatPoly>& gcd_chain, const RootInterval& iv) {
    long m = 1;
    for (size_t k = 1; k < gcd_chain.size(); ++k) {
        const RatPoly& g = gcd_chain[k];
        if (g.degree() < 1) break;
        bool contains;
        if (iv.exact()) {
            contains = g.eval(iv.lo) == 0;
        } else {
            contains = count_real_roots(g, iv.lo, iv.hi) > 0;
        }
        if (!contains) break;
        ++m;
    }
    return m;
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const RatPoly& p) {
    Rat b = cauchy_root_bound(p);
    return isolate_real_roots(p, -b, b);
}

std::vector<RootInterval> isolate_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw Error("isolate_real_roots: zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    RatPoly sf = squarefree_part(p);
    SturmChain chain(sf);
    isolate_rec(chain, sf, lo, hi, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });

    if (sf.degree() != p.degree()) {
        std::vector<RatPoly> gcd_chain{p};
        while (gcd_chain.back().degree() > 0)
            gcd_chain.push_back(poly_gcd(gcd_chain.back(), gcd_chain.back().derivative()));
        // Refine until each interval isolates within every chain member too:
        // an interval that contains a root of g_k but also endpoints where g_k
        // vanishes would miscount, so keep endpoints off all chain roots.
        for (auto& iv : out) {
            if (!iv.exact()) {
                bool clean;
                do {
                    clean = true;
                    for (const auto& g : gcd_chain) {
                        if (g.degree() < 1) continue;
                        if (g.eval(iv.lo) == 0 || g.eval(iv.hi) == 0) {
                            clean = false;
                            break;
                        }
                    }
                    if (!clean) {
                        RootInterval tmp = iv;
                        refine_interval(sf, tmp, (iv.hi - iv.lo) / 3);
                        iv = tmp;
                    }
                } while (!clean);
            }
            iv.multiplicity = multiplicity_in_chain(gcd_chain, iv);
        }
    }
    return out;
}

void refine_interval(const RatPoly& squarefree, RootInterval& iv, const Rat& width) {
    if (iv.exact()) return;
    int slo = sgn(squarefree.eval(iv.lo));
    if (slo == 0) throw Error("refine_interval: endpoint on a root");
    while (iv.hi - iv.lo > width) {
        Rat mid = iv.mid();
        int sm = sgn(squarefree.eval(mid));
        if (sm == 0) {
            iv.lo = iv.hi = mid;
            return;
        }
        if (sm == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
}

void refine_until_disjoint(const RatPoly& p1, std::vector<RootInterval>& r1,
                           const RatPoly& p2, std::vector<RootInterval>& r2) {
    if (poly_gcd(p1, p2).degree() > 0)
        throw Error("refine_until_disjoint: polynomials share a root");
    RatPoly s1 = squarefree_part(p1), s2 = squarefree_part(p2);
    auto overlap = [](const RootInterval& a, const RootInterval& b) {
        return !(a.hi < b.lo || b.hi < a.lo);
    };
    bool again = true;
    while (again) {
        again = false;
        for (auto& a : r1) {
            for (auto& b : r2) {
                if (overlap(a, b)) {
                    refine_interval(s1, a, (a.hi - a.lo) / 4);
                    refine_interval(s2, b, (b.hi - b.lo) / 4);
                    if (overlap(a, b)) again = true;
                }
            }
        }
    }
}

} // namespace threecolour
