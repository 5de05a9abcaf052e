#ifndef THREECOLOUR_BOARD_HPP
#define THREECOLOUR_BOARD_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "threecolour/rational.hpp"

namespace threecolour {

// Colours are residues mod 3, ordered cyclically 0 < 1 < 2 < 0.
using Colour = unsigned char;

// (n+1) x (n+1) grid of colours, row-major, i = row from top, j = column from
// left. Valid boards have distinct colours on every horizontally or
// vertically adjacent pair, and the fixed wall colouring: top row j mod 3,
// left column i mod 3, bottom row (n-j) mod 3, right column (n-i) mod 3.
struct ThreeColourBoard {
    long n = 0;
    std::vector<Colour> cells;

    long side() const { return n + 1; }
    Colour at(long i, long j) const { return cells[static_cast<size_t>(i * side() + j)]; }
    Colour& at(long i, long j) { return cells[static_cast<size_t>(i * side() + j)]; }

    bool operator==(const ThreeColourBoard& o) const { return n == o.n && cells == o.cells; }
};

// Board of size n with the wall squares filled in and interior squares set to
// the sentinel NO_COLOUR.
inline constexpr Colour NO_COLOUR = 3;
ThreeColourBoard board_with_walls(long n);

bool board_is_valid(const ThreeColourBoard& b, std::string* why = nullptr);

struct AlternatingSignMatrix {
    long n = 0;
    std::vector<int> a; // n x n row-major

    int at(long i, long j) const { return a[static_cast<size_t>(i * n + j)]; }
    int& at(long i, long j) { return a[static_cast<size_t>(i * n + j)]; }

    bool operator==(const AlternatingSignMatrix& o) const { return n == o.n && a == o.a; }
};

bool asm_is_valid(const AlternatingSignMatrix& m, std::string* why = nullptr);

// Arrow configuration on the dual grid, one bit per adjacent-square pair.
// north[i*n + j] orients the segment between squares (i,j) and (i,j+1):
// 1 = North. east[i*(n+1) + j] orients the segment between (i,j) and
// (i+1,j): 1 = East.
struct IceGraph {
    long n = 0;
    std::vector<unsigned char> north; // (n+1) rows of n segments
    std::vector<unsigned char> east;  // n rows of n+1 segments
};

// Contract each 2x2 block to a signed entry; valid boards map to valid ASMs.
AlternatingSignMatrix board_to_asm(const ThreeColourBoard& b);

// Inverse map via the height function i + j - 2 * (partial entry sums) mod 3.
// Throws Error when the input violates the alternating-sign invariants.
ThreeColourBoard asm_to_board(const AlternatingSignMatrix& m);

// Arrows point so the cyclically larger of the two separated colours lies to
// the right of the arrow.
IceGraph board_to_ice(const ThreeColourBoard& b);

// Every internal vertex has exactly two incoming and two outgoing arrows.
bool ice_is_six_vertex(const IceGraph& g);

// (k0, k1, k2): squares of each colour; sums to (n+1)^2.
std::array<long, 3> colour_counts(const ThreeColourBoard& b);

// Exact counts N(k0,k1,k2) of boards by colour distribution.
struct CountTable {
    long n = 0;
    std::map<std::array<long, 3>, Int> counts;

    Int total() const;
    bool operator==(const CountTable& o) const { return n == o.n && counts == o.counts; }
};

} // namespace threecolour

#endif
