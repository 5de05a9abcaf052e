// Times the serial counting kernel against the OpenMP split-tree kernel and
// checks that both produce the same table. Usage: bench_enumerate [nmax]
// with 1 <= nmax <= 6 (default 5).
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "threecolour/counts.hpp"
#include "threecolour/enumerate.hpp"

using namespace threecolour;

namespace {

template <class F>
double timed(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    long nmax = 5;
    if (argc > 1) nmax = std::strtol(argv[1], nullptr, 10);
    if (nmax < 1 || nmax > 6) {
        std::fprintf(stderr, "usage: bench_enumerate [nmax in 1..6]\n");
        return 2;
    }

    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%4s %14s %12s %12s %9s\n", "n", "boards", "serial[s]", "parallel[s]",
                "speedup");

    bool ok = true;
    for (long n = 1; n <= nmax; ++n) {
        CountTable serial_table, parallel_table;
        const double ts = timed([&] { serial_table = counting_table(n); });
        const double tp = timed([&] { parallel_table = counting_table_parallel(n); });
        ok = ok && serial_table == parallel_table &&
             serial_table.total() == asm_count(n);
        std::printf("%4ld %14s %12.4f %12.4f %8.2fx\n", n,
                    serial_table.total().get_str().c_str(), ts, tp,
                    tp > 0.0 ? ts / tp : 0.0);
    }
    std::printf(ok ? "tables agree\n" : "TABLE MISMATCH\n");
    return ok ? 0 : 1;
}
