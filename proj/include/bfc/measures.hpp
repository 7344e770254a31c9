#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"

namespace bfc {

// Result of one complexity measure: either an exact value or a certified
// [lo, hi] window when the exact algorithm would exceed its work limit.
struct MeasureValue {
    bool exact = true;
    long long value = 0;
    long long lo = 0, hi = 0;
    std::string reason;

    static MeasureValue of(long long v) {
        MeasureValue m;
        m.value = m.lo = m.hi = v;
        return m;
    }
    static MeasureValue window(long long lo, long long hi, std::string why) {
        MeasureValue m;
        m.exact = false;
        m.lo = lo;
        m.hi = hi;
        m.value = lo;
        m.reason = std::move(why);
        return m;
    }
};

struct MeasureReport {
    std::vector<std::pair<std::string, MeasureValue>> entries;

    const MeasureValue* find(const std::string& name) const {
        for (auto& e : entries)
            if (e.first == name) return &e.second;
        return nullptr;
    }
    bool all_exact() const {
        for (auto& e : entries)
            if (!e.second.exact) return false;
        return true;
    }
};

// ---- sensitivity ----

int sensitivity_at(const TruthTable& f, uint64_t x);
int sensitivity_at(const PointFunction& f, const BitVector& x); // n+1 evaluations
int sensitivity(const TruthTable& f); // max over inputs, OpenMP across inputs

// ---- block sensitivity ----

// Nonempty B with f(x ^ B) != f(x) and no sensitive proper subset,
// ascending in (size, lowest-variable) order.
std::vector<uint64_t> minimal_sensitive_blocks(const TruthTable& f, uint64_t x);

int block_sensitivity_at_exact(const TruthTable& f, uint64_t x);
MeasureValue block_sensitivity_at(const TruthTable& f, uint64_t x, const Limits& lim);
MeasureValue block_sensitivity(const TruthTable& f, const Limits& lim);

struct BsWitness {
    uint64_t x = 0;
    int value = 0;
    std::vector<uint64_t> blocks; // disjoint minimal sensitive blocks at x
};
// First input (ascending) achieving bs(f), with the lexicographically least
// optimal packing at that input.  Requires f.n <= lim.bs.
BsWitness bs_witness(const TruthTable& f, const Limits& lim);

// Every maximum-size disjoint family of minimal sensitive blocks at x.
std::vector<std::vector<uint64_t>> optimal_packings(const TruthTable& f, uint64_t x);

// ---- certificate complexity ----

struct CertificateAt {
    MeasureValue size;
    uint64_t witness = 0; // fixed coordinate set, valid when size.exact
};
CertificateAt certificate_at(const TruthTable& f, uint64_t x, const Limits& lim);
MeasureValue certificate_complexity(const TruthTable& f, const Limits& lim);

// ---- decision trees ----

MeasureValue decision_tree_depth(const TruthTable& f, const Limits& lim);
MeasureValue parity_tree_depth(const TruthTable& f, const Limits& lim);

// ---- algebraic degrees ----

int degree(const TruthTable& f);      // real multilinear degree
int degree_mod2(const TruthTable& f); // GF(2) polynomial degree

// ---- misc ----

bool depends_on_all(const TruthTable& f);
bool depends_on(const TruthTable& f, int var_1indexed);

// Requested names among s, bs, C, D, deg, degf2, dpar; empty = all.
MeasureReport compute_measures(const FunctionHandle& f,
                               const std::vector<std::string>& names,
                               const Limits& lim);

} // namespace bfc
