#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"

namespace bfc {

// One scanned function with its full measure vector.  Everything is exact;
// the scan sizes are chosen so no limit fallback can trigger.
struct ScanRecord {
    int n = 0;
    uint64_t table = 0; // table bits as an integer
    int s = 0, bs = 0, C = 0, D = 0, deg = 0, degf2 = 0, dpar = 0;
    long long sparsity = 0;
    long long min_hat_num = 0; // min nonzero |coefficient|, over 2^n
    long long l1_num = 0;      // sum of |coefficients|, over 2^n
    bool depends_all = false;
    bool full_degree = false;
};

ScanRecord measure_record(int n, uint64_t table, const Limits& lim = Limits());

// Asserts every tracked inequality on one record; throws internal_error
// with a tt:<n>:<hex> reproducer on the first failure.
void check_relations(const ScanRecord& r);

// Lexicographically least table over variable permutations, input
// negations and output negation (n <= 6).
TruthTable npn_canonical(const TruthTable& f);

// Extremal ratio tracker.  Plain entries compare num/den by cross
// multiplication; logarithmic entries compare log2(num)/den via exact
// integer powers.  Ties keep the earliest witness.
struct GapEntry {
    std::string ratio;
    bool logarithmic = false;
    long long num = 0, den = 1;
    bool has_witness = false;
    ScanRecord witness;
};

struct Leaderboard {
    std::vector<GapEntry> entries;

    Leaderboard();
    void offer(const ScanRecord& r);
};

struct ScanOptions {
    int n = 3;
    bool npn = false;        // only emit NPN-canonical tables
    bool allow_large = false; // opt-in gate for the n = 5 enumeration
    std::string out;         // JSONL sink path; empty = in-memory only
    bool resume = false;     // continue a previous sink file
};

struct ScanSummary {
    long long records = 0;  // total records in the sink (replayed + new)
    long long emitted = 0;  // records written by this run
    Leaderboard board;
};

ScanSummary scan(const ScanOptions& opt, const Limits& lim = Limits());

// Render a sink file as "csv", "json" or "md".  The leaderboard is
// rebuilt by replaying the records in file order, and its witnesses get
// the observation columns (communication ranks, min coefficient).
std::string render_report(const std::string& jsonl_path,
                          const std::string& format,
                          const Limits& lim = Limits());

} // namespace bfc
