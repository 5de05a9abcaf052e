#include "threecolour/board.hpp"

#include <sstream>

#include "threecolour/errors.hpp"

namespace threecolour {

namespace {

// +1 if to == from+1 (mod 3), -1 if to == from-1; adjacency guarantees one of
// the two for neighbouring squares.
int cyclic_step(Colour from, Colour to) {
    return to == static_cast<Colour>((from + 1) % 3) ? 1 : -1;
}

} // namespace

ThreeColourBoard board_with_walls(long n) {
    ThreeColourBoard b;
    b.n = n;
    b.cells.assign(static_cast<size_t>((n + 1) * (n + 1)), NO_COLOUR);
    for (long j = 0; j <= n; ++j) {
        b.at(0, j) = static_cast<Colour>(j % 3);
        b.at(n, j) = static_cast<Colour>(((n - j) % 3 + 3) % 3);
    }
    for (long i = 0; i <= n; ++i) {
        b.at(i, 0) = static_cast<Colour>(i % 3);
        b.at(i, n) = static_cast<Colour>(((n - i) % 3 + 3) % 3);
    }
    return b;
}

bool board_is_valid(const ThreeColourBoard& b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    long n = b.n;
    if (n < 0) return fail("negative size");
    if (static_cast<long>(b.cells.size()) != (n + 1) * (n + 1)) return fail("cell count mismatch");
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j)
            if (b.at(i, j) > 2) return fail("colour out of range");
    ThreeColourBoard walls = board_with_walls(n);
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= n; ++j) {
            if (walls.at(i, j) != NO_COLOUR && b.at(i, j) != walls.at(i, j)) {
                std::ostringstream os;
                os << "wall colour mismatch at (" << i << "," << j << ")";
                return fail(os.str());
            }
        }
    }
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= n; ++j) {
            if (j + 1 <= n && b.at(i, j) == b.at(i, j + 1)) return fail("equal horizontal neighbours");
            if (i + 1 <= n && b.at(i, j) == b.at(i + 1, j)) return fail("equal vertical neighbours");
        }
    }
    return true;
}

bool asm_is_valid(const AlternatingSignMatrix& m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    long n = m.n;
    if (n <= 0) return fail("order must be positive");
    if (static_cast<long>(m.a.size()) != n * n) return fail("entry count mismatch");
    for (int v : m.a)
        if (v < -1 || v > 1) return fail("entry outside {-1,0,1}");
    for (long i = 0; i < n; ++i) {
        int sum = 0, last = 0;
        for (long j = 0; j < n; ++j) {
            int v = m.at(i, j);
            if (v != 0) {
                if (v == last) return fail("row signs do not alternate");
                last = v;
            }
            sum += v;
        }
        if (sum != 1) return fail("row sum is not 1");
    }
    for (long j = 0; j < n; ++j) {
        int sum = 0, last = 0;
        for (long i = 0; i < n; ++i) {
            int v = m.at(i, j);
            if (v != 0) {
                if (v == last) return fail("column signs do not alternate");
                last = v;
            }
            sum += v;
        }
        if (sum != 1) return fail("column sum is not 1");
    }
    return true;
}

AlternatingSignMatrix board_to_asm(const ThreeColourBoard& b) {
    long n = b.n;
    AlternatingSignMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n * n), 0);
    // Block with corners a=(i-1,j-1), b=(i-1,j), c=(i,j-1), d=(i,j) contracts
    // to (lift(b)+lift(c)-lift(a)-lift(d))/2, which reduces to half the
    // difference of the two downward steps.
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            int left = cyclic_step(b.at(i - 1, j - 1), b.at(i, j - 1));
            int right = cyclic_step(b.at(i - 1, j), b.at(i, j));
            m.at(i - 1, j - 1) = (left - right) / 2;
        }
    }
    return m;
}

ThreeColourBoard asm_to_board(const AlternatingSignMatrix& m) {
    std::string why;
    if (!asm_is_valid(m, &why)) throw Error("asm_to_board: invalid matrix: " + why);
    long n = m.n;
    ThreeColourBoard b;
    b.n = n;
    b.cells.assign(static_cast<size_t>((n + 1) * (n + 1)), 0);
    // Height function: cells[i][j] = i + j - 2 * sum of the top-left i x j
    // minor, reduced mod 3.
    std::vector<long> partial(static_cast<size_t>((n + 1) * (n + 1)), 0);
    for (long i = 1; i <= n; ++i) {
        long rowacc = 0;
        for (long j = 1; j <= n; ++j) {
            rowacc += m.at(i - 1, j - 1);
            partial[static_cast<size_t>(i * (n + 1) + j)] =
                partial[static_cast<size_t>((i - 1) * (n + 1) + j)] + rowacc;
        }
    }
    for (long i = 0; i <= n; ++i) {
        for (long j = 0; j <= n; ++j) {
            long s = partial[static_cast<size_t>(i * (n + 1) + j)];
            long h = ((i + j - 2 * s) % 3 + 3) % 3;
            b.at(i, j) = static_cast<Colour>(h);
        }
    }
    return b;
}

IceGraph board_to_ice(const ThreeColourBoard& b) {
    long n = b.n;
    IceGraph g;
    g.n = n;
    g.north.assign(static_cast<size_t>((n + 1) * n), 0);
    g.east.assign(static_cast<size_t>(n * (n + 1)), 0);
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j < n; ++j)
            g.north[static_cast<size_t>(i * n + j)] =
                cyclic_step(b.at(i, j), b.at(i, j + 1)) == 1 ? 1 : 0;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= n; ++j)
            g.east[static_cast<size_t>(i * (n + 1) + j)] =
                cyclic_step(b.at(i, j), b.at(i + 1, j)) == 1 ? 1 : 0;
    return g;
}

bool ice_is_six_vertex(const IceGraph& g) {
    long n = g.n;
    for (long vi = 1; vi <= n; ++vi) {
        for (long vj = 1; vj <= n; ++vj) {
            int in = 0;
            // Segment above the vertex: South means incoming.
            if (!g.north[static_cast<size_t>((vi - 1) * n + (vj - 1))]) ++in;
            // Below: North means incoming.
            if (g.north[static_cast<size_t>(vi * n + (vj - 1))]) ++in;
            // Left: East means incoming.
            if (g.east[static_cast<size_t>((vi - 1) * (n + 1) + (vj - 1))]) ++in;
            // Right: West means incoming.
            if (!g.east[static_cast<size_t>((vi - 1) * (n + 1) + vj)]) ++in;
            if (in != 2) return false;
        }
    }
    return true;
}

std::array<long, 3> colour_counts(const ThreeColourBoard& b) {
    std::array<long, 3> k{0, 0, 0};
    for (Colour c : b.cells) ++k[c];
    return k;
}

Int CountTable::total() const {
    Int t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
}

} // namespace threecolour
