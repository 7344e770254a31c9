#include "bfc/measures.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <unordered_map>

#include "bfc/errors.hpp"
#include "bfc/spectral.hpp"

namespace bfc {

// ---- sensitivity ----

int sensitivity_at(const TruthTable& f, uint64_t x) {
    int n = f.n(), s = 0;
    bool fx = f.get(x);
    for (int i = 0; i < n; i++)
        if (f.get(x ^ (uint64_t(1) << i)) != fx) s++;
    return s;
}

int sensitivity_at(const PointFunction& f, const BitVector& x) {
    if (x.n() != f.n) throw domain_error("sensitivity_at: arity mismatch");
    bool fx = f.eval(x);
    int s = 0;
    BitVector y = x;
    for (int i = 0; i < f.n; i++) {
        y.flip(i);
        if (f.eval(y) != fx) s++;
        y.flip(i);
    }
    return s;
}

int sensitivity(const TruthTable& f) {
    int n = f.n();
    long long N = (long long)f.size();
    int best = 0;
#pragma omp parallel for reduction(max : best) schedule(static)
    for (long long x = 0; x < N; x++) {
        bool fx = f.get(x);
        int s = 0;
        for (int i = 0; i < n; i++)
            if (f.get(uint64_t(x) ^ (uint64_t(1) << i)) != fx) s++;
        if (s > best) best = s;
    }
    return best;
}

// ---- block sensitivity ----

// set-lex: the block containing the lowest differing variable comes first
static bool setlex_less(uint64_t a, uint64_t b) {
    uint64_t d = a ^ b;
    if (d == 0) return false;
    return (a >> std::countr_zero(d)) & 1;
}

// all nonzero masks over n bits, ascending popcount (ties by value);
// popcount-ascending is what the minimality filter below relies on
static std::vector<uint64_t> masks_by_popcount(int n) {
    std::vector<uint64_t> order;
    order.reserve((uint64_t(1) << n) - 1);
    for (int k = 1; k <= n; k++)
        for (uint64_t m = 1; m < (uint64_t(1) << n); m++)
            if (std::popcount(m) == k) order.push_back(m);
    return order;
}

static std::vector<uint64_t> minimal_blocks_impl(const TruthTable& f, uint64_t x,
                                                 const std::vector<uint64_t>& order) {
    bool fx = f.get(x);
    std::vector<uint64_t> minimal;
    for (uint64_t b : order) {
        if (f.get(x ^ b) == fx) continue;
        bool has_smaller = false;
        for (uint64_t m : minimal)
            if ((m & ~b) == 0) { has_smaller = true; break; }
        if (!has_smaller) minimal.push_back(b);
    }
    std::sort(minimal.begin(), minimal.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return setlex_less(a, b);
    });
    return minimal;
}

std::vector<uint64_t> minimal_sensitive_blocks(const TruthTable& f, uint64_t x) {
    if (f.n() > 24) throw limit_error("minimal_sensitive_blocks: arity too large");
    return minimal_blocks_impl(f, x, masks_by_popcount(f.n()));
}

// best[avail] = most disjoint blocks that fit inside the coordinate set avail
static std::vector<int8_t> packing_table(const std::vector<uint64_t>& blocks, int n) {
    std::vector<int8_t> best(uint64_t(1) << n, 0);
    for (uint64_t avail = 1; avail < best.size(); avail++) {
        int8_t v = 0;
        for (uint64_t b : blocks)
            if ((b & ~avail) == 0) {
                int8_t c = (int8_t)(1 + best[avail & ~b]);
                if (c > v) v = c;
            }
        best[avail] = v;
    }
    return best;
}

static int bs_at_impl(const TruthTable& f, uint64_t x, const std::vector<uint64_t>& order) {
    std::vector<uint64_t> minimal = minimal_blocks_impl(f, x, order);
    if (minimal.empty()) return 0;
    uint64_t full = (uint64_t(1) << f.n()) - 1;
    return packing_table(minimal, f.n())[full];
}

int block_sensitivity_at_exact(const TruthTable& f, uint64_t x) {
    return bs_at_impl(f, x, masks_by_popcount(f.n()));
}

MeasureValue block_sensitivity_at(const TruthTable& f, uint64_t x, const Limits& lim) {
    if (f.n() <= lim.bs)
        return MeasureValue::of(block_sensitivity_at_exact(f, x));
    long long lo = sensitivity_at(f, x); // singleton packing
    long long hi = f.n();
    if (f.n() <= lim.cert) hi = certificate_at(f, x, lim).size.value;
    return MeasureValue::window(lo, hi,
        "n=" + std::to_string(f.n()) + " exceeds block sensitivity limit " +
        std::to_string(lim.bs) + "; lo is the sensitive-singleton packing");
}

MeasureValue block_sensitivity(const TruthTable& f, const Limits& lim) {
    if (f.n() > lim.bs) {
        long long lo = sensitivity(f);
        long long hi = f.n();
        std::string why = "n=" + std::to_string(f.n()) +
                          " exceeds block sensitivity limit " + std::to_string(lim.bs) +
                          "; lo is s(f), hi is ";
        if (f.n() <= lim.cert) {
            hi = certificate_complexity(f, lim).value;
            why += "C(f)";
        } else {
            why += "n";
        }
        return MeasureValue::window(lo, hi, why);
    }
    std::vector<uint64_t> order = masks_by_popcount(f.n());
    long long N = (long long)f.size();
    int best = 0;
#pragma omp parallel for reduction(max : best) schedule(dynamic, 64)
    for (long long x = 0; x < N; x++) {
        int v = bs_at_impl(f, uint64_t(x), order);
        if (v > best) best = v;
    }
    return MeasureValue::of(best);
}

BsWitness bs_witness(const TruthTable& f, const Limits& lim) {
    if (f.n() > lim.bs)
        throw limit_error("bs_witness: n=" + std::to_string(f.n()) +
                          " exceeds block sensitivity limit " + std::to_string(lim.bs));
    std::vector<uint64_t> order = masks_by_popcount(f.n());
    uint64_t full = (f.n() == 0) ? 0 : (uint64_t(1) << f.n()) - 1;
    BsWitness w;
    w.value = -1;
    for (uint64_t x = 0; x < f.size(); x++) {
        std::vector<uint64_t> minimal = minimal_blocks_impl(f, x, order);
        std::vector<int8_t> best = packing_table(minimal, f.n());
        int v = minimal.empty() ? 0 : best[full];
        if (v <= w.value) continue;
        w.value = v;
        w.x = x;
        w.blocks.clear();
        // lexicographically least optimal family: blocks are already sorted,
        // take the earliest block consistent with a best completion
        uint64_t avail = full;
        int need = v;
        size_t from = 0;
        while (need > 0) {
            for (size_t i = from; i < minimal.size(); i++) {
                uint64_t b = minimal[i];
                if ((b & ~avail) == 0 && best[avail & ~b] == need - 1) {
                    w.blocks.push_back(b);
                    avail &= ~b;
                    need--;
                    from = i + 1;
                    break;
                }
            }
        }
    }
    return w;
}

std::vector<std::vector<uint64_t>> optimal_packings(const TruthTable& f, uint64_t x) {
    std::vector<uint64_t> minimal = minimal_sensitive_blocks(f, x);
    uint64_t full = (f.n() == 0) ? 0 : (uint64_t(1) << f.n()) - 1;
    std::vector<std::vector<uint64_t>> out;
    if (minimal.empty()) {
        out.push_back({});
        return out;
    }
    std::vector<int8_t> best = packing_table(minimal, f.n());
    int target = best[full];
    std::vector<uint64_t> cur;
    // depth-first over blocks in sorted order so each family appears once
    auto rec = [&](auto&& self, size_t from, uint64_t avail, int need) -> void {
        if (need == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < minimal.size(); i++) {
            uint64_t b = minimal[i];
            if ((b & ~avail) == 0 && best[avail & ~b] >= need - 1) {
                cur.push_back(b);
                self(self, i + 1, avail & ~b, need - 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, full, target);
    return out;
}

// ---- certificate complexity ----

static bool subcube_monochromatic(const TruthTable& f, uint64_t x, uint64_t fixed) {
    bool fx = f.get(x);
    uint64_t full = (f.n() == 0) ? 0 : (uint64_t(1) << f.n()) - 1;
    uint64_t free_mask = full & ~fixed;
    uint64_t base = x & fixed;
    uint64_t sub = free_mask;
    while (true) {
        if (f.get(base | sub) != fx) return false;
        if (sub == 0) break;
        sub = (sub - 1) & free_mask;
    }
    return true;
}

// extends S by `extra` positions chosen ascending from candidates >= from;
// first success is the set-lex least witness
static bool extend_certificate(const TruthTable& f, uint64_t x, uint64_t s, int from,
                               int extra, uint64_t& witness) {
    if (extra == 0) {
        if (subcube_monochromatic(f, x, s)) {
            witness = s;
            return true;
        }
        return false;
    }
    int n = f.n();
    for (int p = from; p <= n - extra; p++) {
        if ((s >> p) & 1) continue;
        if (extend_certificate(f, x, s | (uint64_t(1) << p), p + 1, extra - 1, witness))
            return true;
    }
    return false;
}

static std::pair<int, uint64_t> certificate_at_exact(const TruthTable& f, uint64_t x) {
    int n = f.n();
    bool fx = f.get(x);
    uint64_t mandatory = 0;
    for (int i = 0; i < n; i++)
        if (f.get(x ^ (uint64_t(1) << i)) != fx) mandatory |= uint64_t(1) << i;
    int base = std::popcount(mandatory);
    for (int k = base; k <= n; k++) {
        uint64_t witness = 0;
        if (extend_certificate(f, x, mandatory, 0, k - base, witness))
            return {k, witness};
    }
    throw internal_error("certificate_at: no certificate found"); // S = [n] always works
}

CertificateAt certificate_at(const TruthTable& f, uint64_t x, const Limits& lim) {
    CertificateAt out;
    if (f.n() <= lim.cert) {
        auto [size, witness] = certificate_at_exact(f, x);
        out.size = MeasureValue::of(size);
        out.witness = witness;
        return out;
    }
    out.size = MeasureValue::window(sensitivity_at(f, x), f.n(),
        "n=" + std::to_string(f.n()) + " exceeds certificate limit " +
        std::to_string(lim.cert) + "; lo is the sensitive-bit count");
    return out;
}

MeasureValue certificate_complexity(const TruthTable& f, const Limits& lim) {
    if (f.n() > lim.cert)
        return MeasureValue::window(sensitivity(f), f.n(),
            "n=" + std::to_string(f.n()) + " exceeds certificate limit " +
            std::to_string(lim.cert) + "; lo is s(f)");
    long long N = (long long)f.size();
    int best = 0;
#pragma omp parallel for reduction(max : best) schedule(dynamic, 64)
    for (long long x = 0; x < N; x++) {
        int v = certificate_at_exact(f, uint64_t(x)).first;
        if (v > best) best = v;
    }
    return MeasureValue::of(best);
}

// ---- decision tree depth ----

static bool subcube_constant(const TruthTable& f, uint64_t assign, uint64_t free_mask) {
    bool fx = f.get(assign);
    uint64_t sub = free_mask;
    while (sub != 0) {
        if (f.get(assign | sub) != fx) return false;
        sub = (sub - 1) & free_mask;
    }
    return true;
}

// minimax over variable queries, memoized on the restriction: each variable
// is free, fixed to 0, or fixed to 1, giving a base-3 state index
static int dtree_impl(const TruthTable& f) {
    int n = f.n();
    std::vector<size_t> p3(n + 1);
    p3[0] = 1;
    for (int i = 1; i <= n; i++) p3[i] = p3[i - 1] * 3;
    std::vector<int8_t> memo(p3[n], -1);
    uint64_t full = (n == 0) ? 0 : (uint64_t(1) << n) - 1;
    auto rec = [&](auto&& self, uint64_t fixed, uint64_t assign, size_t idx) -> int {
        int8_t& m = memo[idx];
        if (m >= 0) return m;
        uint64_t free_mask = full & ~fixed;
        if (subcube_constant(f, assign, free_mask)) return m = 0;
        int best = INT_MAX;
        for (int i = 0; i < n; i++) {
            uint64_t b = uint64_t(1) << i;
            if (fixed & b) continue;
            int d0 = self(self, fixed | b, assign, idx + p3[i]);
            if (1 + d0 >= best) continue;
            int d1 = self(self, fixed | b, assign | b, idx + 2 * p3[i]);
            best = std::min(best, 1 + std::max(d0, d1));
        }
        return m = (int8_t)best;
    };
    return rec(rec, 0, 0, 0);
}

MeasureValue decision_tree_depth(const TruthTable& f, const Limits& lim) {
    if (f.n() > lim.dtree)
        return MeasureValue::window(degree(f), f.n(),
            "n=" + std::to_string(f.n()) + " exceeds decision tree limit " +
            std::to_string(lim.dtree) + "; lo is deg(f)");
    return MeasureValue::of(dtree_impl(f));
}

// ---- parity decision tree depth ----

namespace {

// affine subspace of F_2^n in canonical form: basis in reduced echelon form
// ordered by pivot (lowest set bit), offset zero on every pivot coordinate
struct Affine {
    std::vector<uint64_t> basis;
    uint64_t offset = 0;

    void canonicalize() {
        std::vector<uint64_t> red;
        for (uint64_t v : basis) {
            for (uint64_t b : red) {
                uint64_t pb = b & (~b + 1);
                if (v & pb) v ^= b;
            }
            if (!v) continue;
            uint64_t pv = v & (~v + 1);
            for (uint64_t& b : red)
                if (b & pv) b ^= v;
            red.push_back(v);
        }
        std::sort(red.begin(), red.end(), [](uint64_t a, uint64_t b) {
            return (a & (~a + 1)) < (b & (~b + 1));
        });
        for (uint64_t b : red) {
            uint64_t pb = b & (~b + 1);
            if (offset & pb) offset ^= b;
        }
        basis = std::move(red);
    }

    std::vector<uint64_t> key() const {
        std::vector<uint64_t> k;
        k.reserve(basis.size() + 1);
        k.push_back(offset);
        k.insert(k.end(), basis.begin(), basis.end());
        return k;
    }
};

struct VecHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : v) {
            h ^= (size_t)x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

bool constant_on(const TruthTable& f, const Affine& a) {
    bool v0 = f.get(a.offset);
    uint64_t cur = a.offset;
    uint64_t count = uint64_t(1) << a.basis.size();
    for (uint64_t t = 1; t < count; t++) {
        cur ^= a.basis[std::countr_zero(t)];
        if (f.get(cur) != v0) return false;
    }
    return true;
}

int dpar_impl(const TruthTable& f) {
    int n = f.n();
    std::unordered_map<std::vector<uint64_t>, int, VecHash> memo;
    auto rec = [&](auto&& self, const Affine& a) -> int {
        if (constant_on(f, a)) return 0;
        auto it = memo.find(a.key());
        if (it != memo.end()) return it->second;
        int d = (int)a.basis.size();
        // distinct splits are indexed by the pattern <S, basis_i> over the
        // basis, so different parities with one pattern share a subtree
        std::vector<bool> seen(uint64_t(1) << d, false);
        int best = INT_MAX;
        for (uint64_t s = 1; s < (uint64_t(1) << n) && best > 1; s++) {
            uint64_t ts = 0;
            for (int i = 0; i < d; i++)
                if (std::popcount(a.basis[i] & s) & 1) ts |= uint64_t(1) << i;
            if (ts == 0 || seen[ts]) continue; // constant on the subspace, or a repeat
            seen[ts] = true;
            int j = 63 - std::countl_zero(ts);
            int worst = 0;
            for (int eps = 0; eps < 2 && worst < best; eps++) {
                Affine child;
                child.basis.reserve(d - 1);
                for (int i = 0; i < d; i++) {
                    if (i == j) continue;
                    child.basis.push_back(((ts >> i) & 1) ? a.basis[i] ^ a.basis[j]
                                                          : a.basis[i]);
                }
                child.offset = eps ? a.offset ^ a.basis[j] : a.offset;
                child.canonicalize();
                worst = std::max(worst, self(self, child));
            }
            best = std::min(best, 1 + worst);
        }
        memo.emplace(a.key(), best);
        return best;
    };
    Affine full;
    for (int i = 0; i < n; i++) full.basis.push_back(uint64_t(1) << i);
    return rec(rec, full);
}

} // namespace

MeasureValue parity_tree_depth(const TruthTable& f, const Limits& lim) {
    if (f.n() > lim.dpar) {
        long long sp = fourier_transform(f, Values::plus_minus).sparsity();
        long long lg = 0;
        while ((1LL << lg) < sp) lg++; // ceil(log2 sparsity)
        long long lo = std::max((long long)degree_mod2(f), (lg + 1) / 2);
        MeasureValue d = decision_tree_depth(f, lim);
        long long hi = d.exact ? d.value : d.hi;
        // a collapsed window is an exact answer (e.g. full mod-2 degree
        // meets the query-every-variable upper bound of n)
        if (lo >= hi) return MeasureValue::of(lo);
        return MeasureValue::window(lo, hi,
            "n=" + std::to_string(f.n()) + " exceeds parity tree limit " +
            std::to_string(lim.dpar) +
            "; lo is max(deg_F2, ceil(log4 sparsity)), hi from D(f)");
    }
    return MeasureValue::of(dpar_impl(f));
}

// ---- algebraic degrees ----

int degree(const TruthTable& f) {
    return fourier_transform(f, Values::plus_minus).max_degree();
}

int degree_mod2(const TruthTable& f) {
    uint64_t size = f.size();
    std::vector<uint8_t> a(size);
    for (uint64_t x = 0; x < size; x++) a[x] = f.get(x);
    for (int i = 0; i < f.n(); i++) {
        uint64_t b = uint64_t(1) << i;
        for (uint64_t x = 0; x < size; x++)
            if (x & b) a[x] ^= a[x ^ b];
    }
    int deg = 0;
    for (uint64_t x = 0; x < size; x++)
        if (a[x]) deg = std::max(deg, std::popcount(x));
    return deg;
}

// ---- misc ----

bool depends_on(const TruthTable& f, int var_1indexed) {
    if (var_1indexed < 1 || var_1indexed > f.n())
        throw domain_error("depends_on: variable index out of range");
    uint64_t b = uint64_t(1) << (var_1indexed - 1);
    for (uint64_t x = 0; x < f.size(); x++)
        if ((x & b) == 0 && f.get(x) != f.get(x | b)) return true;
    return false;
}

bool depends_on_all(const TruthTable& f) {
    for (int j = 1; j <= f.n(); j++)
        if (!depends_on(f, j)) return false;
    return true;
}

// ---- report assembly ----

static const std::vector<std::string> kAllMeasures = {"s",   "bs",    "C",   "D",
                                                      "deg", "degf2", "dpar"};

MeasureReport compute_measures(const FunctionHandle& f,
                               const std::vector<std::string>& names,
                               const Limits& lim) {
    const std::vector<std::string>& want = names.empty() ? kAllMeasures : names;
    for (const auto& name : want)
        if (std::find(kAllMeasures.begin(), kAllMeasures.end(), name) == kAllMeasures.end())
            throw domain_error("compute_measures: unknown measure \"" + name + "\"");

    MeasureReport rep;
    FunctionHandle dense = f;
    if (!f.is_dense() && f.n <= lim.dense)
        dense = FunctionHandle::dense(materialize(*f.point, lim));

    if (!dense.is_dense()) {
        std::string why = "n=" + std::to_string(f.n) + " exceeds dense limit " +
                          std::to_string(lim.dense) + "; only point evaluation available";
        for (const auto& name : want)
            rep.entries.emplace_back(name, MeasureValue::window(0, f.n, why));
        return rep;
    }

    const TruthTable& t = *dense.table;
    for (const auto& name : want) {
        if (name == "s") rep.entries.emplace_back(name, MeasureValue::of(sensitivity(t)));
        else if (name == "bs") rep.entries.emplace_back(name, block_sensitivity(t, lim));
        else if (name == "C") rep.entries.emplace_back(name, certificate_complexity(t, lim));
        else if (name == "D") rep.entries.emplace_back(name, decision_tree_depth(t, lim));
        else if (name == "deg") rep.entries.emplace_back(name, MeasureValue::of(degree(t)));
        else if (name == "degf2") rep.entries.emplace_back(name, MeasureValue::of(degree_mod2(t)));
        else if (name == "dpar") rep.entries.emplace_back(name, parity_tree_depth(t, lim));
    }
    return rep;
}

} // namespace bfc
