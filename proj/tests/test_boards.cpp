#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "threecolour/board.hpp"
#include "threecolour/counts.hpp"
#include "threecolour/enumerate.hpp"
#include "threecolour/errors.hpp"
#include "threecolour/tripoly.hpp"

using namespace threecolour;

namespace {

ThreeColourBoard board_from_rows(const std::vector<std::vector<int>>& rows) {
    ThreeColourBoard b;
    b.n = static_cast<long>(rows.size()) - 1;
    for (const auto& row : rows)
        for (int c : row) b.cells.push_back(static_cast<Colour>(c));
    return b;
}

} // namespace

TEST_CASE("wall colouring and validity") {
    ThreeColourBoard b = board_with_walls(3);
    CHECK(b.at(0, 0) == 0);
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(0, 2) == 2);
    CHECK(b.at(0, 3) == 0);
    CHECK(b.at(3, 0) == 0);
    CHECK(b.at(3, 1) == 2);
    CHECK(b.at(3, 2) == 1);
    CHECK(b.at(3, 3) == 0);
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(2, 0) == 2);
    CHECK(b.at(1, 3) == 2);
    CHECK(b.at(2, 3) == 1);

    ThreeColourBoard last = board_from_rows(oracles::n3_last_board);
    CHECK(board_is_valid(last));

    ThreeColourBoard bad = last;
    bad.at(1, 1) = bad.at(1, 2);
    CHECK_FALSE(board_is_valid(bad));
}

TEST_CASE("size 0 and 1 are forced") {
    auto b0 = all_boards(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].at(0, 0) == 0);

    auto b1 = all_boards(1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].at(0, 0) == 0);
    CHECK(b1[0].at(0, 1) == 1);
    CHECK(b1[0].at(1, 0) == 1);
    CHECK(b1[0].at(1, 1) == 0);

    auto k = colour_counts(b1[0]);
    CHECK(k == std::array<long, 3>{2, 2, 0});
}

TEST_CASE("enumeration counts match the product formula") {
    for (long n = 0; n <= 6; ++n) {
        CHECK(count_boards(n) == asm_count(n));
        CHECK(asm_count(n) == Int(oracles::asm_counts[static_cast<size_t>(n)]));
    }
}

TEST_CASE("size 3 stream order is frozen") {
    auto boards = all_boards(3);
    REQUIRE(boards.size() == 7);
    for (size_t b = 0; b < 7; ++b) {
        const auto& want = oracles::n3_interiors[b];
        CHECK(boards[b].at(1, 1) == want[0]);
        CHECK(boards[b].at(1, 2) == want[1]);
        CHECK(boards[b].at(2, 1) == want[2]);
        CHECK(boards[b].at(2, 2) == want[3]);
        CHECK(board_is_valid(boards[b]));
    }
    CHECK(boards.back() == board_from_rows(oracles::n3_last_board));
}

TEST_CASE("contraction of the central-minus board") {
    ThreeColourBoard last = board_from_rows(oracles::n3_last_board);
    AlternatingSignMatrix m = board_to_asm(last);
    REQUIRE(m.n == 3);
    std::vector<int> expect = {0, 1, 0, 1, -1, 1, 0, 1, 0};
    CHECK(m.a == expect);
    CHECK(asm_is_valid(m));
    CHECK(asm_to_board(m) == last);
}

TEST_CASE("contraction and its inverse are mutually inverse") {
    for (long n = 1; n <= 5; ++n) {
        Int total = 0;
        enumerate_boards(n, [&](const ThreeColourBoard& b) {
            AlternatingSignMatrix m = board_to_asm(b);
            std::string why;
            REQUIRE_MESSAGE(asm_is_valid(m, &why), why);
            REQUIRE(asm_to_board(m) == b);
            total += 1;
        });
        CHECK(total == asm_count(n));
    }
}

TEST_CASE("asm validation rejects bad matrices") {
    AlternatingSignMatrix bad;
    bad.n = 2;
    bad.a = {1, 1, 0, 0};
    CHECK_FALSE(asm_is_valid(bad));
    CHECK_THROWS_AS(asm_to_board(bad), Error);
}

TEST_CASE("arrow configuration of the central-minus board") {
    ThreeColourBoard last = board_from_rows(oracles::n3_last_board);
    IceGraph g = board_to_ice(last);
    REQUIRE(g.n == 3);
    std::vector<unsigned char> north(oracles::n3_last_north.begin(), oracles::n3_last_north.end());
    std::vector<unsigned char> east(oracles::n3_last_east.begin(), oracles::n3_last_east.end());
    CHECK(g.north == north);
    CHECK(g.east == east);
    CHECK(ice_is_six_vertex(g));
}

TEST_CASE("two-in two-out holds for every state") {
    for (long n = 1; n <= 4; ++n) {
        enumerate_boards(n, [&](const ThreeColourBoard& b) {
            REQUIRE(ice_is_six_vertex(board_to_ice(b)));
        });
    }
}

TEST_CASE("census tables for sizes 4 and 5") {
    CountTable t4 = counting_table(4);
    auto want4 = oracles::n4_counts();
    REQUIRE(t4.counts.size() == want4.size());
    for (const auto& [k, v] : want4) CHECK(t4.counts.at(k) == Int(v));
    CHECK(t4.total() == asm_count(4));

    CountTable t5 = counting_table(5);
    auto want5 = oracles::n5_counts();
    REQUIRE(t5.counts.size() == want5.size());
    for (const auto& [k, v] : want5) CHECK(t5.counts.at(k) == Int(v));
    CHECK(t5.total() == asm_count(5));
}

TEST_CASE("parallel census equals the serial reference") {
    for (long n = 0; n <= 5; ++n) {
        CountTable serial = counting_table(n);
        for (int jobs : {1, 2, 4}) {
            CountTable par = counting_table_parallel(n, jobs);
            CHECK(par == serial);
        }
    }
}

TEST_CASE("size guard refuses large enumerations unless forced") {
    CHECK_THROWS_AS(counting_table(9), SizeGuard);
    CHECK_THROWS_AS(counting_table_parallel(9, 2), SizeGuard);
    CHECK_THROWS_AS(counting_table(-1), Error);
}

TEST_CASE("generating polynomial basics") {
    TriPoly z0 = partition_polynomial(0);
    CHECK(z0 == tripoly_monomial(1, 0, 0));

    TriPoly z1 = partition_polynomial(1);
    CHECK(z1 == tripoly_monomial(2, 2, 0));

    TriPoly z3 = partition_polynomial(3);
    CHECK(tripoly_eval(z3, Rat(1), Rat(1), Rat(1)) == 7);
    CHECK(tripoly_is_homogeneous(z3, 16));
    CHECK_FALSE(tripoly_has_negative_coeff(z3));

    for (long n = 0; n <= 7; ++n) {
        TriPoly z = partition_polynomial(n);
        CHECK(tripoly_eval(z, Rat(1), Rat(1), Rat(1)) == Rat(asm_count(n)));
        CHECK(tripoly_is_homogeneous(z, (n + 1) * (n + 1)));
    }
}

TEST_CASE("reflection symmetry of the generating polynomial") {
    for (long n = 0; n <= 6; ++n) {
        TriPoly z = partition_polynomial(n);
        int i = static_cast<int>(((-n + 1) % 3 + 3) % 3);
        int j = static_cast<int>(((-n - 1) % 3 + 3) % 3);
        std::array<int, 3> perm = {0, 1, 2};
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        CHECK(tripoly_permute(z, perm) == z);
    }
}
