#include "bfc/spectral.hpp"

#include <algorithm>
#include <bit>

#include <boost/multiprecision/cpp_int.hpp>

#include "bfc/errors.hpp"

namespace bfc {

using boost::multiprecision::cpp_int;

Values parse_values(const std::string& s) {
    if (s == "01" || s == "zero-one") return Values::zero_one;
    if (s == "pm" || s == "plus-minus") return Values::plus_minus;
    throw domain_error("value convention must be \"01\" or \"pm\", got \"" + s + "\"");
}

Combiner parse_combiner(const std::string& s) {
    if (s == "and") return Combiner::and_op;
    if (s == "or") return Combiner::or_op;
    if (s == "xor") return Combiner::xor_op;
    throw domain_error("combiner must be and/or/xor, got \"" + s + "\"");
}

long long FourierSpectrum::sparsity() const {
    long long c = 0;
    for (long long v : a)
        if (v != 0) c++;
    return c;
}

long long FourierSpectrum::min_nonzero_abs() const {
    long long best = 0;
    for (long long v : a) {
        if (v == 0) continue;
        long long m = v < 0 ? -v : v;
        if (best == 0 || m < best) best = m;
    }
    return best;
}

long long FourierSpectrum::l1_numerator() const {
    long long sum = 0;
    for (long long v : a) sum += v < 0 ? -v : v;
    return sum;
}

int FourierSpectrum::max_degree() const {
    int deg = 0;
    for (size_t s = 0; s < a.size(); s++)
        if (a[s] != 0) deg = std::max(deg, std::popcount(s));
    return deg;
}

bool FourierSpectrum::parseval_holds() const {
    // sum_S a[S]^2 = 2^n * sum_x v(x)^2; in the plus-minus convention the
    // right side is 4^n
    long long lhs = 0;
    for (long long v : a) lhs += v * v;
    long long n2 = (long long)a.size();
    long long energy = 0;
    if (conv == Values::plus_minus) {
        energy = n2;
    } else {
        // recover |f| from a[0] = sum_x f(x)
        energy = a.empty() ? 0 : a[0];
        // the zero-one transform of a Boolean function satisfies
        // sum v^2 = sum v = a[0]
    }
    return lhs == energy * n2;
}

FourierSpectrum fourier_transform(const TruthTable& f, Values conv) {
    FourierSpectrum sp;
    sp.n = f.n();
    sp.conv = conv;
    uint64_t size = f.size();
    sp.a.resize(size);
    for (uint64_t x = 0; x < size; x++) {
        bool v = f.get(x);
        sp.a[x] = (conv == Values::plus_minus) ? (v ? -1 : 1) : (v ? 1 : 0);
    }
    for (uint64_t len = 1; len < size; len <<= 1)
        for (uint64_t i = 0; i < size; i += len << 1)
            for (uint64_t j = i; j < i + len; j++) {
                long long u = sp.a[j], w = sp.a[j + len];
                sp.a[j] = u + w;
                sp.a[j + len] = u - w;
            }
    return sp;
}

long long xor_rank_via_spectrum(const TruthTable& f, Values conv) {
    return fourier_transform(f, conv).sparsity();
}

TruthTable negate_inputs(const TruthTable& f) {
    TruthTable out(f.n());
    uint64_t mask = f.size() - 1;
    for (uint64_t x = 0; x < f.size(); x++)
        out.set(x, f.get(~x & mask));
    return out;
}

// ---- exact rank ----

static long long bareiss_rank_big(std::vector<std::vector<cpp_int>>& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    cpp_int prev = 1;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) piv++;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; i++) {
            for (size_t j = c + 1; j < cols; j++) {
                cpp_int t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                m[i][j] = t / prev; // exact: entries stay minors of the input
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r++;
    }
    return (long long)r;
}

long long bareiss_rank(std::vector<std::vector<long long>> m) {
    std::vector<std::vector<cpp_int>> big(m.size());
    for (size_t i = 0; i < m.size(); i++)
        big[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank_big(big);
}

static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return (uint64_t)((unsigned __int128)a * b % p);
}

static uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

long long modular_rank(const std::vector<std::vector<long long>>& in, uint64_t p) {
    if (in.empty()) return 0;
    size_t rows = in.size(), cols = in[0].size();
    std::vector<std::vector<uint64_t>> m(rows, std::vector<uint64_t>(cols));
    for (size_t i = 0; i < rows; i++)
        for (size_t j = 0; j < cols; j++) {
            long long v = in[i][j] % (long long)p;
            if (v < 0) v += (long long)p;
            m[i][j] = (uint64_t)v;
        }
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) piv++;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        uint64_t inv = powmod(m[r][c], p - 2, p);
        for (size_t i = r + 1; i < rows; i++) {
            if (m[i][c] == 0) continue;
            uint64_t factor = mulmod(m[i][c], inv, p);
            for (size_t j = c; j < cols; j++) {
                uint64_t sub = mulmod(factor, m[r][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        r++;
    }
    return (long long)r;
}

static std::vector<std::vector<long long>> comm_matrix(const TruthTable& f, Combiner op,
                                                       Values conv) {
    uint64_t size = f.size();
    std::vector<std::vector<long long>> m(size, std::vector<long long>(size));
    for (uint64_t x = 0; x < size; x++)
        for (uint64_t y = 0; y < size; y++) {
            uint64_t z = op == Combiner::and_op ? (x & y)
                       : op == Combiner::or_op  ? (x | y)
                                                : (x ^ y);
            bool v = f.get(z);
            m[x][y] = (conv == Values::plus_minus) ? (v ? -1 : 1) : (v ? 1 : 0);
        }
    return m;
}

RankResult comm_rank(const TruthTable& f, Combiner op, Values conv, const Limits& lim,
                     bool force_exact) {
    if (f.n() > lim.rank)
        throw limit_error("comm_rank: n=" + std::to_string(f.n()) +
                          " exceeds rank limit " + std::to_string(lim.rank));
    std::vector<std::vector<long long>> m = comm_matrix(f, op, conv);
    RankResult out;
    if (!force_exact) {
        // two independent prime moduli; an agreeing answer is accepted,
        // disagreement (p divided some pivot minor) falls through to the
        // fraction-free elimination
        const uint64_t p1 = 2305843009213693951ull; // 2^61 - 1
        const uint64_t p2 = 2305843009213693669ull;
        long long r1 = modular_rank(m, p1);
        long long r2 = modular_rank(m, p2);
        if (r1 == r2) {
            out.rank = r1;
            out.method = "modular";
            return out;
        }
    }
    std::vector<std::vector<cpp_int>> big(m.size());
    for (size_t i = 0; i < m.size(); i++)
        big[i].assign(m[i].begin(), m[i].end());
    out.rank = bareiss_rank_big(big);
    out.method = "bareiss";
    return out;
}

} // namespace bfc
