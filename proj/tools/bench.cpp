// Times the serial reference search against the partitioned OpenMP driver on
// a fixed set of instances and prints the speedup table.

#include "polyrank/cyclesearch.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polyrank;

int main(int argc, char** argv) {
    int jobs = (int)std::thread::hardware_concurrency();
    if (argc > 1) jobs = std::atoi(argv[1]);
    if (jobs < 1) jobs = 1;

#ifdef _OPENMP
    std::printf("OpenMP enabled, %d worker(s)\n", jobs);
#else
    std::printf("built without OpenMP, parallel driver runs sequentially\n");
#endif

    struct Case {
        unsigned k, n;
        const char* label;
    };
    const Case cases[] = {
        {6, 10, "J(6,3) length 10, exhaustive"},
        {7, 22, "J(7,3) length 22, exhaustive"},
        {7, 23, "J(7,3) length 23, exhaustive"},
        {8, 31, "J(8,4) length 31, certificate"},
        {8, 32, "J(8,4) length 32, certificate"},
    };

    std::printf("%-34s %12s %10s %10s %8s\n", "instance", "nodes", "serial", "parallel",
                "speedup");
    for (const Case& c : cases) {
        SearchLimits serial_lim;
        SearchOutcome s = find_cycle_serial(c.k, c.n, serial_lim);

        SearchLimits par_lim;
        par_lim.jobs = jobs;
        SearchOutcome p = find_cycle(c.k, c.n, par_lim);

        if (s.verdict != p.verdict) {
            std::printf("%-34s verdict mismatch (%d vs %d)\n", c.label, (int)s.verdict,
                        (int)p.verdict);
            return 1;
        }
        if (s.verdict == Verdict::ExhaustedNone && s.nodes != p.nodes) {
            std::printf("%-34s exhaustive node counts differ (%llu vs %llu)\n", c.label,
                        (unsigned long long)s.nodes, (unsigned long long)p.nodes);
            return 1;
        }
        std::printf("%-34s %12llu %9.3fs %9.3fs %7.2fx\n", c.label,
                    (unsigned long long)s.nodes, s.seconds, p.seconds,
                    p.seconds > 0 ? s.seconds / p.seconds : 0.0);
    }
    return 0;
}
