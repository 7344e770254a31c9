#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bfc/bits.hpp"
#include "bfc/limits.hpp"
#include "bfc/permutation.hpp"

namespace bfc {

// Coordinate subset of {1..n}, stored as the characteristic vector e_B.
struct Block {
    BitVector members;

    Block() = default;
    explicit Block(BitVector m) : members(std::move(m)) {}

    static Block from_mask(int n, uint64_t mask) {
        return Block(BitVector::from_word(n, mask));
    }
    static Block from_vars(int n, const std::vector<int>& vars_1indexed);

    int n() const { return members.n(); }
    int size() const { return members.popcount(); }
    bool empty() const { return !members.any(); }
    uint64_t mask() const { return members.word(); }

    std::vector<int> vars() const; // 1-indexed, ascending

    friend bool operator==(const Block& a, const Block& b) { return a.members == b.members; }
};

// Dense Boolean function: 2^n table bits, entry i = f(x) for the input x
// whose packed word is i.  Text form "tt:<n>:<hex>".
class TruthTable {
  public:
    TruthTable() : n_(0), bits_(1) {}
    explicit TruthTable(int n);
    TruthTable(int n, PackedBits bits);

    static TruthTable from_value(int n, uint64_t tablebits); // n <= 6
    static TruthTable parse(const std::string& text);        // "tt:<n>:<hex>"

    int n() const { return n_; }
    uint64_t size() const { return uint64_t(1) << n_; }

    bool get(uint64_t idx) const { return bits_.get(idx); }
    void set(uint64_t idx, bool v) { bits_.set(idx, v); }

    bool eval(const BitVector& x) const;

    const PackedBits& bits() const { return bits_; }
    uint64_t value() const; // table as an integer, n <= 6 only

    std::string to_spec() const; // "tt:<n>:<hex>"

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const TruthTable& a, const TruthTable& b) { return !(a == b); }

  private:
    int n_;
    PackedBits bits_;
};

// Function given by an evaluator instead of a table; the only dense-free
// representation, used when 2^n storage is out of the question.
struct PointFunction {
    int n = 0;
    std::function<bool(const BitVector&)> eval;

    bool operator()(const BitVector& x) const { return eval(x); }
};

// Either representation, as produced by generators and the spec parser.
struct FunctionHandle {
    int n = 0;
    std::optional<TruthTable> table;
    std::optional<PointFunction> point;

    static FunctionHandle dense(TruthTable t) {
        FunctionHandle h;
        h.n = t.n();
        h.table = std::move(t);
        return h;
    }
    static FunctionHandle sparse(PointFunction p) {
        FunctionHandle h;
        h.n = p.n;
        h.point = std::move(p);
        return h;
    }

    bool is_dense() const { return table.has_value(); }
    bool eval(const BitVector& x) const {
        return table ? table->eval(x) : point->eval(x);
    }
};

bool eval(const TruthTable& f, const BitVector& x);

BitVector flip_block(const BitVector& x, const Block& b);

// Subfunction with the variables of `fixed` pinned to `assignment`
// (support(assignment) must lie inside `fixed`); surviving variables are
// renumbered in ascending order of their original index.
TruthTable restrict_function(const TruthTable& f, const Block& fixed,
                             const BitVector& assignment);

// f(g(block 1), ..., g(block m)) on m*k variables, where block i covers
// x_{(i-1)k+1} .. x_{ik} of the result (m = f.n, k = g.n).
TruthTable compose(const TruthTable& f, const TruthTable& g,
                   const Limits& lim = Limits());

// exhaustive check of f(x) == f(x_{sigma(1)}, ..., x_{sigma(n)})
bool is_invariant(const TruthTable& f, const Permutation& sigma);

// sampled variant for point functions; "true" means not falsified
bool is_invariant_sampled(const PointFunction& f, const Permutation& sigma,
                          long long samples, uint64_t seed = 0x5eed5eedULL);

// Materializes a point function as a dense table; n must be <= lim.dense.
TruthTable materialize(const PointFunction& f, const Limits& lim = Limits());

} // namespace bfc
