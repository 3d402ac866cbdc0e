// Compares the serial reference sweep against the OpenMP-parallel one on the
// duality round-trip corpus and verifies that both report the same outcomes.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ope/enumerate.hpp"
#include "ope/sweep.hpp"

#ifdef OPE_HAVE_OPENMP
#include <omp.h>
#endif

using namespace ope;
using Clock = std::chrono::steady_clock;

int main(int argc, char** argv) {
    int max_nodes = argc > 1 ? std::atoi(argv[1]) : 8;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;

    auto corpus = enumerate_complexes(EnumSpec{ComplexKind::Tree, max_nodes, std::nullopt, std::nullopt});
    std::vector<std::string> labels(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) labels[i] = "#" + std::to_string(i);
    auto check = [&](int i) { return sweep::roundtrip_failures(corpus[i]); };

#ifdef OPE_HAVE_OPENMP
    std::printf("corpus: %zu tree complexes (<= %d nodes), %d reps, %d threads\n", corpus.size(),
                max_nodes, reps, omp_get_max_threads());
#else
    std::printf("corpus: %zu tree complexes (<= %d nodes), %d reps, OpenMP unavailable\n",
                corpus.size(), max_nodes, reps);
#endif

    auto time_mode = [&](sweep::Exec mode) {
        double best = 1e100;
        std::vector<sweep::Outcome> last;
        for (int r = 0; r < reps; ++r) {
            auto t0 = Clock::now();
            last = sweep::run(labels, check, mode);
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (secs < best) best = secs;
        }
        return std::make_pair(best, last);
    };

    auto [serial_s, serial_out] = time_mode(sweep::Exec::Serial);
    auto [parallel_s, parallel_out] = time_mode(sweep::Exec::Parallel);

    size_t failures = 0;
    bool identical = serial_out.size() == parallel_out.size();
    for (size_t i = 0; identical && i < serial_out.size(); ++i) {
        identical = serial_out[i].item == parallel_out[i].item &&
                    serial_out[i].failures == parallel_out[i].failures;
        failures += serial_out[i].failures.size();
    }

    std::printf("serial:   %8.3f s\n", serial_s);
    std::printf("parallel: %8.3f s  (speedup %.2fx)\n", parallel_s, serial_s / parallel_s);
    std::printf("outcomes: %s, %zu failing items\n", identical ? "identical" : "DIFFER", failures);
    return identical && failures == 0 ? 0 : 1;
}
