#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bfc/explorer.hpp"
#include "bfc/function.hpp"
#include "bfc/glgraph.hpp"
#include "bfc/measures.hpp"
#include "bfc/reference.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_once(const std::function<void()>& body) {
    auto t0 = clock_type::now();
    body();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

// best-of-reps wall time in milliseconds
double best_of(int reps, const std::function<void()>& body) {
    double best = time_once(body);
    for (int i = 1; i < reps; ++i) best = std::min(best, time_once(body));
    return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-24s %12.3f ms %12.3f ms %9.2fx\n", name.c_str(), serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

bfc::TruthTable random_table(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    bfc::TruthTable f(n);
    for (uint64_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1);
    return f;
}

int run_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timing comparison of the parallel kernels against their serial counterparts"};

    int n = 20;
    int scan_n = 4;
    int reps = 5;
    uint64_t seed = 1;
    app.add_option("--n", n, "table size for the sensitivity and max-degree kernels")
        ->check(CLI::Range(4, 24));
    app.add_option("--scan-n", scan_n, "arity for the exhaustive scan comparison")
        ->check(CLI::Range(1, 4));
    app.add_option("--reps", reps, "repetitions per kernel; the best time is kept")
        ->check(CLI::Range(1, 100));
    app.add_option("--seed", seed, "seed for the random table");
    CLI11_PARSE(app, argc, argv);

    bfc::Limits lim;
    lim.dense = std::max(lim.dense, n);

    std::printf("threads: %d\n", run_threads());
    std::printf("%-24s %15s %15s %10s\n", "kernel", "serial", "parallel", "speedup");

    bfc::TruthTable f = random_table(n, seed);

    int s_serial = 0, s_parallel = 0;
    double t_ss = best_of(reps, [&] { s_serial = bfc::sensitivity_serial(f); });
    double t_sp = best_of(reps, [&] { s_parallel = bfc::sensitivity(f); });
    if (s_serial != s_parallel) {
        std::fprintf(stderr, "sensitivity mismatch: serial %d, parallel %d\n", s_serial,
                     s_parallel);
        return 1;
    }
    report("sensitivity n=" + std::to_string(n), t_ss, t_sp);

    bfc::CubeSubgraph g = bfc::function_to_subgraph(f);
    int g_serial = 0, g_parallel = 0;
    double t_gs = best_of(reps, [&] { g_serial = bfc::gamma_serial(g); });
    double t_gp = best_of(reps, [&] { g_parallel = bfc::gamma(g); });
    if (g_serial != g_parallel) {
        std::fprintf(stderr, "max side degree mismatch: serial %d, parallel %d\n", g_serial,
                     g_parallel);
        return 1;
    }
    report("max side degree n=" + std::to_string(n), t_gs, t_gp);

    bfc::ScanOptions opt;
    opt.n = scan_n;
    long long rec_serial = 0, rec_parallel = 0;
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    double t_cs = best_of(reps, [&] { rec_serial = bfc::scan(opt, lim).records; });
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
    double t_cp = best_of(reps, [&] { rec_parallel = bfc::scan(opt, lim).records; });
    if (rec_serial != rec_parallel) {
        std::fprintf(stderr, "scan record count mismatch: %lld vs %lld\n", rec_serial,
                     rec_parallel);
        return 1;
    }
    report("scan n=" + std::to_string(scan_n), t_cs, t_cp);

    std::printf("results agree across all kernels (s=%d, max side degree=%d, records=%lld)\n",
                s_parallel, g_parallel, rec_parallel);
    return 0;
}
