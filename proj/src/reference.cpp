#include "bfc/reference.hpp"

#include <algorithm>
#include <bit>

#include <boost/multiprecision/cpp_int.hpp>

#include "bfc/errors.hpp"

namespace bfc {

int sensitivity_serial(const TruthTable& f) {
    int n = f.n(), best = 0;
    for (uint64_t x = 0; x < f.size(); x++) {
        int s = 0;
        bool v = f.get(x);
        for (int i = 0; i < n; i++) s += f.get(x ^ (uint64_t(1) << i)) != v;
        best = std::max(best, s);
    }
    return best;
}

int gamma_serial(const CubeSubgraph& g) {
    int best = 0;
    for (uint64_t v = 0; v < g.size(); v++)
        best = std::max(best, side_degree(g, v));
    return best;
}

namespace {

int best_packing(const std::vector<uint64_t>& blocks, size_t i, uint64_t used) {
    if (i == blocks.size()) return 0;
    int r = best_packing(blocks, i + 1, used);
    if ((blocks[i] & used) == 0)
        r = std::max(r, 1 + best_packing(blocks, i + 1, used | blocks[i]));
    return r;
}

} // namespace

int naive_block_sensitivity_at(const TruthTable& f, uint64_t x) {
    bool v = f.get(x);
    std::vector<uint64_t> blocks;
    for (uint64_t b = 1; b < f.size(); b++)
        if (f.get(x ^ b) != v) blocks.push_back(b);
    return best_packing(blocks, 0, 0);
}

int naive_block_sensitivity(const TruthTable& f) {
    int best = 0;
    for (uint64_t x = 0; x < f.size(); x++)
        best = std::max(best, naive_block_sensitivity_at(f, x));
    return best;
}

int naive_certificate_at(const TruthTable& f, uint64_t x) {
    int n = f.n();
    bool v = f.get(x);
    for (int k = 0; k <= n; k++)
        for (uint64_t set = 0; set < f.size(); set++) {
            if (std::popcount(set) != k) continue;
            bool forces = true;
            for (uint64_t y = 0; y < f.size() && forces; y++)
                if ((y & set) == (x & set)) forces = f.get(y) == v;
            if (forces) return k;
        }
    throw internal_error("naive_certificate_at: no certificate found");
}

int naive_certificate(const TruthTable& f) {
    int best = 0;
    for (uint64_t x = 0; x < f.size(); x++)
        best = std::max(best, naive_certificate_at(f, x));
    return best;
}

namespace {

int depth_rec(const TruthTable& f, uint64_t fixed, uint64_t vals) {
    bool seen = false, first = false, varies = false;
    for (uint64_t y = 0; y < f.size() && !varies; y++) {
        if ((y & fixed) != vals) continue;
        if (!seen) {
            first = f.get(y);
            seen = true;
        } else {
            varies = f.get(y) != first;
        }
    }
    if (!varies) return 0;
    int best = f.n();
    for (int i = 0; i < f.n(); i++) {
        uint64_t b = uint64_t(1) << i;
        if (fixed & b) continue;
        int d = std::max(depth_rec(f, fixed | b, vals),
                         depth_rec(f, fixed | b, vals | b));
        best = std::min(best, 1 + d);
    }
    return best;
}

} // namespace

int naive_decision_depth(const TruthTable& f) { return depth_rec(f, 0, 0); }

std::vector<long long> naive_fourier(const TruthTable& f, Values conv) {
    std::vector<long long> a(f.size());
    for (uint64_t set = 0; set < f.size(); set++) {
        long long sum = 0;
        for (uint64_t x = 0; x < f.size(); x++) {
            long long v = conv == Values::plus_minus ? 1 - 2 * (long long)f.get(x)
                                                     : (long long)f.get(x);
            sum += (std::popcount(x & set) & 1) ? -v : v;
        }
        a[set] = sum;
    }
    return a;
}

int rational_rank(const std::vector<std::vector<long long>>& m) {
    using boost::multiprecision::cpp_rational;
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<cpp_rational>> a(rows,
                                             std::vector<cpp_rational>(cols));
    for (size_t i = 0; i < rows; i++) {
        if (m[i].size() != cols)
            throw domain_error("rational_rank: ragged matrix");
        for (size_t j = 0; j < cols; j++) a[i][j] = m[i][j];
    }
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) piv++;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = 0; i < rows; i++) {
            if (i == r || a[i][c] == 0) continue;
            cpp_rational t = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; j++) a[i][j] -= t * a[r][j];
        }
        r++;
    }
    return (int)r;
}

} // namespace bfc
