// Acceptance gate: eight self-contained checks, one pass/fail line each.
// Exits nonzero if any check fails.  Everything runs on exact arithmetic;
// the few timing assertions are generous upper bounds, not benchmarks.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bfc/analytic.hpp"
#include "bfc/explorer.hpp"
#include "bfc/glgraph.hpp"
#include "bfc/lattice.hpp"
#include "bfc/measures.hpp"
#include "bfc/spectral.hpp"
#include "bfc/zoo.hpp"

using namespace bfc;
namespace fs = std::filesystem;
using clk = std::chrono::steady_clock;

namespace {

double secs_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error(what);
}

void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    expect(in.good(), "cannot read " + p.string());
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

const ClaimCheck& claim_of(const ZooVerification& v, const std::string& m) {
    for (const auto& c : v.checks)
        if (c.measure == m) return c;
    fail("no verified claim for measure " + m);
}

void expect_claim(const ZooVerification& v, const std::string& m,
                  long long value) {
    const ClaimCheck& c = claim_of(v, m);
    expect(c.expected == value, m + ": claim says " + std::to_string(c.expected) +
                                    ", wanted " + std::to_string(value));
    expect(c.status == "pass", m + ": status " + c.status);
}

// ---- criterion bodies; each returns a short description of what it saw ----

std::string criterion_zoo_regression() {
    auto t0 = clk::now();
    Limits lim;

    ZooVerification ao3 = verify_zoo(make_zoo("and_of_ors", {{"k", 3}}, lim), lim);
    expect(ao3.all_ok, "and_of_ors k=3 verification failed");
    expect_claim(ao3, "s", 3);
    expect_claim(ao3, "bs", 3);
    expect_claim(ao3, "C", 3);
    expect_claim(ao3, "D", 9);
    expect_claim(ao3, "deg", 9);

    ZooVerification ku = verify_zoo(make_zoo("kushilevitz", {}, lim), lim);
    expect(ku.all_ok, "kushilevitz verification failed");
    expect_claim(ku, "deg", 3);
    expect_claim(ku, "s", 6);
    expect_claim(ku, "bs", 6);
    expect_claim(ku, "C", 6);
    expect_claim(ku, "D", 6);
    bool boolean_valid = false;
    for (const auto& [what, ok] : ku.extra)
        if (what.find("Boolean") != std::string::npos) boolean_valid = ok;
    expect(boolean_valid, "kushilevitz polynomial not verified Boolean");

    for (long long n = 1; n <= 8; n++) {
        ZooVerification pv = verify_zoo(make_zoo("parity", {{"n", n}}, lim), lim);
        expect(pv.all_ok, "parity n=" + std::to_string(n) + " verification failed");
        for (const char* m : {"s", "bs", "C", "D", "deg"})
            expect(claim_of(pv, m).expected == n,
                   std::string("parity claim ") + m + " != n");
        expect(claim_of(pv, "degf2").expected == 1, "parity mod-2 degree claim");
        expect(claim_of(pv, "dpar").expected == 1, "parity depth claim");
    }

    // the four-variable AND-of-ORs needs parity-query depth exactly 4
    MeasureReport rep = compute_measures(
        FunctionHandle::dense(and_of_ors_table(2)), {"dpar"}, lim);
    expect(rep.find("dpar") && rep.find("dpar")->exact &&
               rep.find("dpar")->value == 4,
           "and_of_ors k=2 parity depth != 4");

    double dt = secs_since(t0);
    expect(dt < 10.0, "zoo regression exceeded 10s");
    std::ostringstream os;
    os << "and_of_ors k=3 (3,3,3,9,9), kushilevitz (6,6,6,6; deg 3), parity "
          "n=1..8, parity-query depth 4 at n=4; "
       << std::fixed;
    os.precision(1);
    os << dt << "s";
    return os.str();
}

std::string criterion_exhaustive_scan() {
    auto t0 = clk::now();
#ifdef _OPENMP
    int prev = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    long long small = 0;
    for (int n = 1; n <= 3; n++) {
        ScanOptions o;
        o.n = n;
        small += scan(o).records; // relations + naive cross-checks inside
    }
    fs::path sink = fs::temp_directory_path() / "bfc_accept_scan4.jsonl";
    ScanOptions o4;
    o4.n = 4;
    o4.out = sink.string();
    ScanSummary sum = scan(o4);
#ifdef _OPENMP
    omp_set_num_threads(prev);
#endif
    expect(small == 4 + 16 + 256, "small scans emitted a wrong record count");
    expect(sum.records == 65536, "n=4 scan emitted " +
                                     std::to_string(sum.records) + " records");
    fs::remove(sink);
    double dt = secs_since(t0);
    expect(dt < 600.0, "scan exceeded 10 minutes single-threaded");
    std::ostringstream os;
    os << "65,536 records at n=4 plus full n<=3, zero relation violations, "
          "single-threaded, "
       << std::fixed;
    os.precision(1);
    os << dt << "s";
    return os.str();
}

std::string criterion_spectral_identity() {
    Limits lim;
    for (uint64_t v = 0; v < 256; v++) {
        TruthTable f = TruthTable::from_value(3, v);
        FourierSpectrum pm = fourier_transform(f, Values::plus_minus);
        FourierSpectrum zo = fourier_transform(f, Values::zero_one);
        expect(pm.parseval_holds() && zo.parseval_holds(),
               "Parseval failed at tt value " + std::to_string(v));
        RankResult r = comm_rank(f, Combiner::xor_op, Values::plus_minus, lim,
                                 /*force_exact=*/true);
        expect(r.method == "bareiss", "forced elimination did not run");
        expect(r.rank == pm.sparsity(),
               "rank != sparsity at tt value " + std::to_string(v));
    }

    std::vector<TruthTable> zoo;
    for (int n = 1; n <= 8; n++) {
        zoo.push_back(parity_table(n));
        zoo.push_back(and_table(n));
        zoo.push_back(or_table(n));
    }
    zoo.push_back(and_of_ors_table(2));
    zoo.push_back(rubinstein_table(2));
    zoo.push_back(kushilevitz_table());
    for (const TruthTable& f : zoo) {
        FourierSpectrum pm = fourier_transform(f, Values::plus_minus);
        expect(pm.parseval_holds(), "Parseval failed on a generator");
        expect(pm.sparsity() == xor_rank_via_spectrum(f, Values::plus_minus),
               "spectral rank bookkeeping disagrees");
        RankResult r = comm_rank(f, Combiner::xor_op, Values::plus_minus, lim);
        expect(r.rank == pm.sparsity(), "rank != sparsity on a generator");
    }
    return "256 three-variable tables (forced elimination) plus " +
           std::to_string(zoo.size()) +
           " generator instances to n=8; Parseval everywhere";
}

std::string criterion_side_degrees() {
    for (uint64_t v = 0; v < 65536; v++) {
        TruthTable f = TruthTable::from_value(4, v);
        CubeSubgraph g = function_to_subgraph(f);
        expect(gamma(g) == sensitivity(f),
               "max side degree != sensitivity at tt value " + std::to_string(v));
        for (uint64_t x = 0; x < 16; x++)
            expect(side_degree(g, x) == sensitivity_at(f, x),
                   "side degree != pointwise sensitivity at tt value " +
                       std::to_string(v));
        expect(balanced(g) == (degree(f) < 4),
               "half-cube split vs degree mismatch at tt value " +
                   std::to_string(v));
    }
    CubeSubgraph g9 = function_to_subgraph(and_of_ors_table(3));
    expect(g9.n == 9, "nine-variable subgraph has wrong dimension");
    int gm = gamma(g9);
    expect(gm == 3, "nine-variable max side degree != 3");
    expect((gm - 1) * (gm - 1) < 9, "max side degree bound is not strict");
    return "all 65,536 four-variable functions, vertexwise; 9-dimensional "
           "instance has max side degree 3 < sqrt(9)+1";
}

std::string criterion_derivative_bound() {
    auto t0 = clk::now();
    const int grid = 4;
    for (int n = 1; n <= 4; n++) {
        uint64_t count = uint64_t(1) << (uint64_t(1) << n);
        for (uint64_t v = 0; v < count; v++) {
            TruthTable f = TruthTable::from_value(n, v);
            for (uint64_t a = 0; a < f.size(); a++)
                expect(antipodal_derivative(f, a) == sensitivity_at(f, a),
                       "antipodal derivative mismatch at n=" + std::to_string(n) +
                           " tt value " + std::to_string(v));
            SweepResult sw = sup_derivative_sweep(f, grid);
            expect(sw.value == Rational(sensitivity(f)),
                   "sweep maximum != sensitivity at n=" + std::to_string(n) +
                       " tt value " + std::to_string(v));
        }
    }
    std::ostringstream os;
    os << "antipodal derivative = pointwise sensitivity at every vertex of "
          "every function to n=4; pair sweep (grid 1/"
       << grid << ") attains s(f) exactly and never exceeds it; " << std::fixed;
    os.precision(1);
    os << secs_since(t0) << "s";
    return os.str();
}

std::string criterion_lattice_colorings() {
    Limits lim;
    long long colorings = 0;
    for (int n = 1; n <= 4; n++) {
        uint64_t count = uint64_t(1) << (uint64_t(1) << n);
        for (uint64_t v = 0; v < count; v++) {
            TruthTable f = TruthTable::from_value(n, v);
            long long bs = block_sensitivity(f, lim).value;
            if (bs == 0) continue;
            int s2 = 2 * sensitivity(f);
            for (uint64_t x = 0; x < f.size(); x++) {
                if (block_sensitivity_at(f, x, lim).value != bs) continue;
                for (const auto& packing : optimal_packings(f, x)) {
                    expect((long long)packing.size() == bs,
                           "packing size != block sensitivity");
                    std::vector<Block> blocks;
                    for (uint64_t m : packing)
                        blocks.push_back(Block::from_mask(n, m));
                    LatticeColoring c =
                        build_coloring(FunctionHandle::dense(f),
                                       BitVector::from_word(n, x), blocks, true);
                    expect(nontrivial(c), "witness coloring is trivial at n=" +
                                              std::to_string(n) + " tt value " +
                                              std::to_string(v));
                    BoxSweep sw = coloring_sensitivity_exact(c, lim);
                    expect(sw.exact, "period box sweep not flagged exact");
                    expect(sw.value <= s2,
                           "lattice sensitivity exceeds twice the cube "
                           "sensitivity at n=" + std::to_string(n) +
                               " tt value " + std::to_string(v));
                    colorings++;
                }
            }
        }
    }
    return std::to_string(colorings) +
           " witness colorings over all functions to n=4: every one "
           "nontrivial with exact sweep <= 2s(f)";
}

std::string criterion_frozen_profiles() {
    Limits lim;
    ZooVerification r2 = verify_zoo(make_zoo("rubinstein", {{"k", 2}}, lim), lim);
    expect(r2.all_ok, "rubinstein k=2 verification failed");
    expect_claim(r2, "s", 2);
    expect_claim(r2, "bs", 2);
    expect_claim(r2, "C", 2);
    expect_claim(r2, "D", 4);
    expect_claim(r2, "deg", 4);
    ZooVerification r3 = verify_zoo(make_zoo("rubinstein", {{"k", 3}}, lim), lim);
    expect(r3.all_ok, "rubinstein k=3 verification failed");
    expect_claim(r3, "s", 6);
    expect_claim(r3, "bs", 6);
    expect_claim(r3, "C", 6);
    expect_claim(r3, "D", 9);
    expect_claim(r3, "deg", 9);

    TruthTable ku = kushilevitz_table();
    expect(decision_tree_depth(ku, lim).value == 6 && degree(ku) == 3,
           "six-variable function is not depth 6 with degree 3");

    auto t0 = clk::now();
    ZooFunction ch = make_zoo("chakraborty", {{"k", 8}, {"n", 512}}, lim);
    BitVector w = chakraborty_witness(8, 512);
    int sw = sensitivity_at(*ch.fn.point, w); // n+1 point evaluations
    double dt = secs_since(t0);
    expect(sw == 46, "witness sensitivity " + std::to_string(sw) + " != 6k-2");
    expect(dt < 1.0, "witness sensitivity took over a second");
    std::ostringstream os;
    os << "rubinstein k=2/3 and depth-6/degree-3 profiles as frozen; cyclic "
          "pattern witness at n=512 has sensitivity 46 in "
       << std::fixed;
    os.precision(3);
    os << dt << "s";
    return os.str();
}

std::string criterion_determinism() {
    fs::path dir = fs::temp_directory_path();
    fs::path a3 = dir / "bfc_accept_det3_a.jsonl";
    fs::path b3 = dir / "bfc_accept_det3_b.jsonl";
    fs::path a4 = dir / "bfc_accept_det4_a.jsonl";
    fs::path b4 = dir / "bfc_accept_det4_b.jsonl";
    for (const fs::path* p : {&a3, &b3, &a4, &b4}) fs::remove(*p);

    ScanOptions o3;
    o3.n = 3;
    o3.out = a3.string();
    scan(o3);
    o3.out = b3.string();
    scan(o3);
    expect(slurp(a3) == slurp(b3), "n=3 sink files differ between runs");

    std::string rep1 = render_report(a3.string(), "json");
    std::string rep2 = render_report(b3.string(), "json");
    expect(rep1 == rep2, "rendered reports differ between runs");

    ScanOptions o4;
    o4.n = 4;
    o4.out = a4.string();
    scan(o4);
    o4.out = b4.string();
    scan(o4);
    bool same4 = slurp(a4) == slurp(b4);
    for (const fs::path* p : {&a3, &b3, &a4, &b4}) fs::remove(*p);
    expect(same4, "n=4 sink files differ between runs");
    return "repeated n=3 and n=4 scans and their JSON reports are "
           "byte-identical";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::function<std::string()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, criterion_zoo_regression},   {2, criterion_exhaustive_scan},
        {3, criterion_spectral_identity}, {4, criterion_side_degrees},
        {5, criterion_derivative_bound}, {6, criterion_lattice_colorings},
        {7, criterion_frozen_profiles},  {8, criterion_determinism},
    };
    bool all_ok = true;
    for (const Criterion& c : criteria) {
        try {
            std::string note = c.body();
            std::printf("criterion %d: PASS - %s\n", c.id, note.c_str());
        } catch (const std::exception& e) {
            std::printf("criterion %d: FAIL - %s\n", c.id, e.what());
            all_ok = false;
        }
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
