// Compares the OpenMP kernels against their serial reference
// implementations: the periodic-coloring verifier on assembled colorings,
// and the colorability search at different worker counts (fixed node
// budget, so the comparison measures throughput).
#include <omp.h>

#include <chrono>
#include <algorithm>
#include <cstdio>

#include "packdist/bounds.hpp"
#include "packdist/constructions.hpp"
#include "packdist/verifier.hpp"

using namespace packdist;

namespace {

template <typename F>
double time_of(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void bench_verify(int k, int t) {
    GraphSpec spec(k, t);
    PeriodicColoring coloring = assemble(plan_layout(spec));
    VerifyResult serial, parallel;
    double ts = time_of([&] { serial = verify_serial(spec, coloring); });
    double tp = time_of([&] { parallel = verify(spec, coloring); });
    std::printf("verify D(%d,%d) period %lld: serial %.3fs, %d threads %.3fs "
                "(x%.2f), verdicts %s\n",
                k, t, coloring.period(), ts, omp_get_max_threads(), tp,
                tp > 0 ? ts / tp : 0.0,
                serial.valid() == parallel.valid() ? "agree" : "DISAGREE");
}

void bench_search() {
    SearchProblem problem{GraphSpec(2, 3), 213, 12, {{1, 12}},
                          DistanceMode::FullGraph};
    Budget budget{4'000'000, 0.0};
    for (int jobs : {1, std::max(4, omp_get_max_threads())}) {
        SearchOutcome out = search_colorability(problem, budget, jobs);
        std::printf("search D(2,3) p=213 c=12 jobs=%d: %lld nodes in %.3fs "
                    "(%.0f knodes/s)\n",
                    jobs, out.stats.nodes, out.stats.seconds,
                    out.stats.nodes / out.stats.seconds / 1e3);
    }
}

}  // namespace

int main() {
    bench_verify(1, 25);
    bench_verify(24, 25);
    bench_search();
    return 0;
}
