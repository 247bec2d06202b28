// Wall-clock comparison of the OpenMP kernels against their plain-loop
// reference implementations. Build and run:
//   cmake --build build --target windrose_bench && ./build/windrose_bench [workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "windrose/stats.hpp"

using namespace windrose;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(void (*fn)(int), int arg) {
    const auto t0 = Clock::now();
    fn(arg);
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench(const char* name, void (*serial)(int), void (*parallel)(int), int workers) {
    const double ts = time_ms(serial, 0);
    const double tp = time_ms(parallel, workers);
    std::printf("%-28s serial %9.1f ms   parallel(%d) %9.1f ms   speedup %.2fx\n", name,
                ts, workers, tp, ts / tp);
}

}  // namespace

int main(int argc, char** argv) {
    const int workers = argc > 1 ? std::atoi(argv[1]) : resolve_workers(0);
    std::printf("windrose kernel benchmark, %d workers\n\n", workers);

    bench(
        "census n=3 (134M boards)",
        +[](int) { exact_census_serial(3, 0.0, 0); },
        +[](int w) { exact_census(3, w, 0.0, 0); }, workers);

    bench(
        "solvable-prob n=51 2e5",
        +[](int) { estimate_solvable_probability_serial(51, 200000, 42); },
        +[](int w) { estimate_solvable_probability(51, 200000, 42, w); }, workers);

    bench(
        "expected-length n=101 2e4",
        +[](int) { estimate_expected_length_serial(101, 20000, 42); },
        +[](int w) { estimate_expected_length(101, 20000, 42, w); }, workers);

    return 0;
}
