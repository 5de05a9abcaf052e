#include "threecolour/enumerate.hpp"

#include <omp.h>

#include <array>
#include <sstream>
#include <utility>

#include "threecolour/errors.hpp"

namespace threecolour {

namespace {

struct Searcher {
    long n;
    ThreeColourBoard b;
    std::vector<std::pair<long, long>> cells;

    explicit Searcher(long n_) : n(n_), b(board_with_walls(n_)) {
        if (n < 0) throw Error("enumeration: size must be non-negative");
        for (long i = 1; i < n; ++i)
            for (long j = 1; j < n; ++j) cells.emplace_back(i, j);
    }

    bool allowed(long i, long j, Colour c) const {
        if (b.at(i - 1, j) == c) return false;
        if (b.at(i, j - 1) == c) return false;
        if (j + 1 == n && b.at(i, n) == c) return false;
        if (i + 1 == n && b.at(n, j) == c) return false;
        return true;
    }

    template <class Leaf>
    void dfs(size_t idx, Leaf&& leaf) {
        if (idx == cells.size()) {
            leaf();
            return;
        }
        auto [i, j] = cells[idx];
        for (Colour c = 0; c < 3; ++c) {
            if (!allowed(i, j, c)) continue;
            b.at(i, j) = c;
            dfs(idx + 1, leaf);
        }
        b.at(i, j) = NO_COLOUR;
    }

    // Same walk with an incrementally maintained colour census.
    template <class Leaf>
    void dfs_counted(size_t idx, std::array<long, 3>& k, Leaf&& leaf) {
        if (idx == cells.size()) {
            leaf(k);
            return;
        }
        auto [i, j] = cells[idx];
        for (Colour c = 0; c < 3; ++c) {
            if (!allowed(i, j, c)) continue;
            b.at(i, j) = c;
            ++k[c];
            dfs_counted(idx + 1, k, leaf);
            --k[c];
        }
        b.at(i, j) = NO_COLOUR;
    }

    std::array<long, 3> wall_census() const {
        std::array<long, 3> k{0, 0, 0};
        for (Colour c : b.cells)
            if (c != NO_COLOUR) ++k[c];
        return k;
    }
};

void check_guard(long n, bool force, const char* what) {
    if (n < 0) throw Error("enumeration: size must be non-negative");
    if (n > ENUMERATION_GUARD && !force) {
        std::ostringstream os;
        os << what << ": size " << n << " exceeds the enumeration guard ("
           << ENUMERATION_GUARD << "); pass the force flag to run anyway";
        throw SizeGuard(os.str());
    }
}

} // namespace

void enumerate_boards(long n, const std::function<void(const ThreeColourBoard&)>& visit) {
    Searcher s(n);
    s.dfs(0, [&] { visit(s.b); });
}

std::vector<ThreeColourBoard> all_boards(long n) {
    std::vector<ThreeColourBoard> out;
    enumerate_boards(n, [&](const ThreeColourBoard& b) { out.push_back(b); });
    return out;
}

Int count_boards(long n) {
    unsigned long count = 0;
    Searcher s(n);
    s.dfs(0, [&] { ++count; });
    return Int(count);
}

CountTable counting_table(long n, bool force) {
    check_guard(n, force, "counting_table");
    CountTable t;
    t.n = n;
    Searcher s(n);
    std::array<long, 3> k = s.wall_census();
    s.dfs_counted(0, k, [&](const std::array<long, 3>& kk) { t.counts[kk] += 1; });
    return t;
}

CountTable counting_table_parallel(long n, int jobs, bool force) {
    check_guard(n, force, "counting_table");
    CountTable t;
    t.n = n;

    // Split the search tree at a fixed interior-cell depth; each prefix is an
    // independent subtree. Merging sums per-census counts, so the result does
    // not depend on the number of workers.
    Searcher splitter(n);
    size_t depth = std::min<size_t>(splitter.cells.size(), 6);
    std::vector<std::vector<Colour>> prefixes;
    {
        std::vector<Colour> cur;
        auto collect = [&](auto&& self, size_t idx) -> void {
            if (idx == depth) {
                prefixes.push_back(cur);
                return;
            }
            auto [i, j] = splitter.cells[idx];
            for (Colour c = 0; c < 3; ++c) {
                if (!splitter.allowed(i, j, c)) continue;
                splitter.b.at(i, j) = c;
                cur.push_back(c);
                self(self, idx + 1);
                cur.pop_back();
            }
            splitter.b.at(i, j) = NO_COLOUR;
        };
        collect(collect, 0);
    }

    int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<std::map<std::array<long, 3>, Int>> partial(prefixes.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t p = 0; p < prefixes.size(); ++p) {
        Searcher s(n);
        std::array<long, 3> k = s.wall_census();
        for (size_t idx = 0; idx < depth; ++idx) {
            auto [i, j] = s.cells[idx];
            Colour c = prefixes[p][idx];
            s.b.at(i, j) = c;
            ++k[c];
        }
        s.dfs_counted(depth, k,
                      [&](const std::array<long, 3>& kk) { partial[p][kk] += 1; });
    }

    for (const auto& part : partial)
        for (const auto& [kk, v] : part) t.counts[kk] += v;
    return t;
}

} // namespace threecolour
