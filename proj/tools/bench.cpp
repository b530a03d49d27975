#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <omp.h>

#include "cy4/json_io.hpp"
#include "cy4/search.hpp"
#include "cy4/torus.hpp"

// Compares the OpenMP kernels against their serial reference paths:
// the torsion-grid fixed point count, the involution enumerator, and the
// pair scan. Usage: cy4_bench [threads] (default: all cores).

namespace {

double bench_grid(const cy4::Mat3& m, int k, int workers, int reps, std::int64_t& count) {
    double t0 = omp_get_wtime();
    for (int r = 0; r < reps; ++r)
        count = workers == 1 ? cy4::brute_force_fixed_count_serial(m, k)
                             : cy4::brute_force_fixed_count(m, k, workers);
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial, double parallel, int threads) {
    std::printf("%-28s serial %8.3fs   %2d threads %8.3fs   speedup %.2fx\n", name, serial, threads,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    int threads = omp_get_max_threads();
    if (argc > 1) threads = std::max(1, std::atoi(argv[1]));
    std::printf("benchmarking with %d thread(s) against the serial reference\n\n", threads);

    const cy4::Mat3 a2 = cy4::parse_matrix("[[1,0,0],[-1,0,1],[1,1,0]]");
    const cy4::Mat3 probe = a2 - cy4::Mat3::identity();

    {
        const int reps = 200, k = 6;
        std::int64_t c1 = 0, cn = 0;
        double ts = bench_grid(probe, k, 1, reps, c1);
        double tp = bench_grid(probe, k, threads, reps, cn);
        if (c1 != cn) {
            std::printf("grid count mismatch: serial %lld vs parallel %lld\n", static_cast<long long>(c1),
                        static_cast<long long>(cn));
            return 1;
        }
        char name[64];
        std::snprintf(name, sizeof name, "grid count k=%d x%d", k, reps);
        report(name, ts, tp, threads);
    }

    std::vector<cy4::Mat3> serial_ms, parallel_ms;
    {
        double t0 = omp_get_wtime();
        serial_ms = cy4::enumerate_involutions(1, 1);
        double ts = omp_get_wtime() - t0;
        t0 = omp_get_wtime();
        parallel_ms = cy4::enumerate_involutions(1, threads);
        double tp = omp_get_wtime() - t0;
        if (serial_ms != parallel_ms) {
            std::printf("enumeration mismatch between 1 and %d threads\n", threads);
            return 1;
        }
        report("enumerate bound 1", ts, tp, threads);
    }

    {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "cy4_bench";
        fs::create_directories(dir);
        cy4::SearchConfig config;
        config.output_path = (dir / "serial.jsonl").string();
        config.workers = 1;
        double t0 = omp_get_wtime();
        cy4::SearchSummary s1 = cy4::run_pair_scan(serial_ms, config);
        double ts = omp_get_wtime() - t0;
        config.output_path = (dir / "parallel.jsonl").string();
        config.workers = threads;
        t0 = omp_get_wtime();
        cy4::SearchSummary sn = cy4::run_pair_scan(parallel_ms, config);
        double tp = omp_get_wtime() - t0;
        if (s1.pairs_found != sn.pairs_found || s1.chi_histogram != sn.chi_histogram) {
            std::printf("pair scan mismatch between 1 and %d threads\n", threads);
            return 1;
        }
        char name[64];
        std::snprintf(name, sizeof name, "pair scan (%lld pairs kept)", static_cast<long long>(s1.pairs_found));
        report(name, ts, tp, threads);
        fs::remove_all(dir);
    }

    return 0;
}
