// Timing comparison: serial reference kernels vs the OpenMP kernels, plus a
// bit-identity check between the two paths.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <sstream>
#include <vector>

#include "teich/csvio.hpp"
#include "teich/thick.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace teich;
namespace chrono = std::chrono;

namespace {

template <typename F>
double timeMs(F&& fn, int repeats) {
    auto t0 = chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    auto t1 = chrono::steady_clock::now();
    return chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

} // namespace

int main() {
    int maxThreads = 1;
#if defined(_OPENMP)
    maxThreads = omp_get_max_threads();
#endif
    std::printf("kernel benchmark (max threads: %d)\n\n", maxThreads);

    TeichPoint x = HoledTorusStructure(1.3, 0.4, 1.1);
    auto classes = enumerate(SurfaceKind::HoledTorus, {120, true, true});
    std::printf("torus spectrum, budget 120 (%zu classes)\n", classes.size());

    std::vector<int> threadCounts;
    for (int t : {1, 2, 4, maxThreads})
        if (std::find(threadCounts.begin(), threadCounts.end(), t) == threadCounts.end())
            threadCounts.push_back(t);

    std::vector<double> serial, parallel;
    double tSerial = timeMs([&] { serial = ref::classLengths(x, classes); }, 5);
    std::printf("  serial reference: %8.2f ms\n", tSerial);
    for (int threads : threadCounts) {
        double t = timeMs([&] { parallel = classLengths(x, classes, {threads}); }, 5);
        std::printf("  openmp %2d thread(s): %6.2f ms  speedup %.2fx  identical: %s\n", threads, t,
                    tSerial / t, parallel == serial ? "yes" : "NO");
    }

    SweepConfig cfg;
    cfg.kind = SurfaceKind::HoledTorus;
    cfg.samples = 14;
    cfg.seed = 9;
    cfg.boxLo = {0.7, -0.5, 0.7};
    cfg.boxHi = {1.7, 0.5, 1.8};
    cfg.budget = {40, true, true};
    cfg.thick = ThickPartSpec(0.5, 2.0);

    std::printf("\nthick-part sweep, 14 samples, budget 40\n");
    cfg.policy.threads = 1;
    std::string baseline;
    double tSweep1 = timeMs(
        [&] {
            std::ostringstream os;
            writeSweepCsv(runSweep(cfg), os);
            baseline = os.str();
        },
        3);
    std::printf("  1 thread: %8.2f ms\n", tSweep1);
    for (int threads : threadCounts) {
        if (threads == 1) continue;
        cfg.policy.threads = threads;
        std::string out;
        double t = timeMs(
            [&] {
                std::ostringstream os;
                writeSweepCsv(runSweep(cfg), os);
                out = os.str();
            },
            3);
        std::printf("  %d thread(s): %7.2f ms  speedup %.2fx  identical: %s\n", threads, t,
                    tSweep1 / t, out == baseline ? "yes" : "NO");
    }
    return 0;
}
