#ifndef THREECOLOUR_TEST_ORACLES_HPP
#define THREECOLOUR_TEST_ORACLES_HPP

// Frozen reference data for the test suite. Small counting tables and board
// facts were worked out by hand or taken from published values; they are
// independent of the library code under test.

#include <array>
#include <map>
#include <string>
#include <vector>

namespace oracles {

// Alternating sign matrix counts A_0..A_8.
inline const std::vector<long> asm_counts = {1, 1, 2, 7, 42, 429, 7436, 218348, 10850216};

// Cyclically symmetric plane partition counts C_1..C_6. The last value is
// 1452 * (17/16) * (7436/429) = 26741, exact.
inline const std::vector<long> cspp_counts = {2, 5, 20, 132, 1452, 26741};

// Interior colours (cells (1,1),(1,2),(2,1),(2,2)) of the seven size-3 boards
// in backtracking order (row-major cells, colours ascending).
inline const std::vector<std::array<int, 4>> n3_interiors = {
    {0, 1, 1, 0}, {0, 1, 1, 2}, {2, 0, 0, 2}, {2, 0, 1, 2},
    {2, 1, 0, 2}, {2, 1, 1, 0}, {2, 1, 1, 2},
};

// The last size-3 board (the one whose contraction has a central -1).
inline const std::vector<std::vector<int>> n3_last_board = {
    {0, 1, 2, 0},
    {1, 2, 1, 2},
    {2, 1, 2, 1},
    {0, 2, 1, 0},
};

// Its arrow configuration: north[i*3+j] orients the segment between squares
// (i,j),(i,j+1); east[i*4+j] the segment between (i,j),(i+1,j).
inline const std::vector<int> n3_last_north = {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0};
inline const std::vector<int> n3_last_east = {1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0};

// Census counts for size 4: nonzero values of N(k0,k1,k2), k0+k1+k2 = 25.
inline std::map<std::array<long, 3>, long> n4_counts() {
    return {
        {{6, 10, 9}, 1},  {{7, 9, 9}, 4},   {{7, 10, 8}, 3},  {{8, 8, 9}, 6},
        {{8, 9, 8}, 6},   {{8, 10, 7}, 3},  {{9, 7, 9}, 4},   {{9, 8, 8}, 6},
        {{9, 10, 6}, 1},  {{10, 6, 9}, 1},  {{10, 7, 8}, 3},  {{10, 8, 7}, 3},
        {{10, 9, 6}, 1},
    };
}

// Census counts for size 5: nonzero values of N(k0,k1,k2), k0+k1+k2 = 36.
inline std::map<std::array<long, 3>, long> n5_counts() {
    return {
        {{8, 14, 14}, 1},  {{9, 14, 13}, 4},  {{9, 13, 14}, 6},  {{10, 14, 12}, 7},
        {{10, 13, 13}, 18}, {{10, 12, 14}, 15}, {{11, 14, 11}, 8},  {{11, 13, 12}, 12},
        {{11, 12, 13}, 36}, {{11, 11, 14}, 20}, {{12, 14, 10}, 7},  {{12, 13, 11}, 12},
        {{12, 12, 12}, 36}, {{12, 11, 13}, 40}, {{12, 10, 14}, 15}, {{13, 14, 9}, 4},
        {{13, 13, 10}, 18}, {{13, 12, 11}, 36}, {{13, 11, 12}, 40}, {{13, 10, 13}, 24},
        {{13, 9, 14}, 6},  {{14, 14, 8}, 1},  {{14, 13, 9}, 6},  {{14, 12, 10}, 15},
        {{14, 11, 11}, 20}, {{14, 10, 12}, 15}, {{14, 9, 13}, 6},  {{14, 8, 14}, 1},
    };
}

} // namespace oracles

#endif
