#ifndef THREECOLOUR_ENUMERATE_HPP
#define THREECOLOUR_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "threecolour/board.hpp"

namespace threecolour {

// Above this size exhaustive enumeration is refused unless forced: the state
// count grows faster than 3^n and n = 8 already has about 1.1e7 states.
inline constexpr long ENUMERATION_GUARD = 8;

// Depth-first enumeration over interior squares in row-major order, trying
// colours in ascending order; walls are pre-filled. Yields each valid board
// exactly once, in this fixed order, through the visitor (which receives a
// reusable buffer: copy if kept). Serial reference implementation.
void enumerate_boards(long n, const std::function<void(const ThreeColourBoard&)>& visit);

std::vector<ThreeColourBoard> all_boards(long n);

// Number of valid boards, counted by the serial backtracker.
Int count_boards(long n);

// Exact N(k0,k1,k2) table. The serial form is the reference; the parallel
// form splits the search tree over a fixed prefix of interior cells and
// merges per-subtree tables, so its result is identical for any worker
// count. jobs = 0 means use the OpenMP default.
CountTable counting_table(long n, bool force = false);
CountTable counting_table_parallel(long n, int jobs = 0, bool force = false);

} // namespace threecolour

#endif
