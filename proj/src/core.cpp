#include "bfc/function.hpp"

#include <algorithm>
#include <random>

#include "bfc/errors.hpp"

namespace bfc {

Block Block::from_vars(int n, const std::vector<int>& vars_1indexed) {
    BitVector m(n);
    for (int v : vars_1indexed) {
        if (v < 1 || v > n)
            throw domain_error("Block::from_vars: variable " + std::to_string(v) +
                               " outside 1.." + std::to_string(n));
        if (m.get(v - 1)) throw domain_error("Block::from_vars: duplicate variable");
        m.set(v - 1, true);
    }
    return Block(m);
}

std::vector<int> Block::vars() const {
    std::vector<int> out;
    for (int i = 0; i < members.n(); i++)
        if (members.get(i)) out.push_back(i + 1);
    return out;
}

TruthTable::TruthTable(int n) : n_(n), bits_(uint64_t(1) << (n < 0 ? 0 : n)) {
    if (n < 0) throw domain_error("TruthTable: negative arity");
    if (n > 30) throw domain_error("TruthTable: arity " + std::to_string(n) +
                                   " too large for a dense table");
}

TruthTable::TruthTable(int n, PackedBits bits) : TruthTable(n) {
    if (bits.size() != size()) throw domain_error("TruthTable: bit count != 2^n");
    bits_ = std::move(bits);
}

TruthTable TruthTable::from_value(int n, uint64_t tablebits) {
    if (n > 6) throw domain_error("TruthTable::from_value: n > 6 does not fit one word");
    TruthTable t(n);
    if (n < 6 && (tablebits >> (uint64_t(1) << n)) != 0)
        throw domain_error("TruthTable::from_value: bits set beyond table size");
    for (uint64_t i = 0; i < t.size(); i++)
        if ((tablebits >> i) & 1) t.set(i, true);
    return t;
}

uint64_t TruthTable::value() const {
    if (n_ > 6) throw domain_error("TruthTable::value: n > 6 does not fit one word");
    return bits_.words().empty() ? 0 : bits_.words()[0];
}

TruthTable TruthTable::parse(const std::string& text) {
    if (text.rfind("tt:", 0) != 0)
        throw domain_error("TruthTable::parse: expected \"tt:<n>:<hex>\"");
    size_t colon = text.find(':', 3);
    if (colon == std::string::npos)
        throw domain_error("TruthTable::parse: missing second ':'");
    int n;
    try {
        size_t used = 0;
        n = std::stoi(text.substr(3, colon - 3), &used);
        if (used != colon - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw domain_error("TruthTable::parse: bad arity field");
    }
    if (n < 0 || n > 30) throw domain_error("TruthTable::parse: arity out of range");
    return TruthTable(n, PackedBits::from_hex(uint64_t(1) << n, text.substr(colon + 1)));
}

std::string TruthTable::to_spec() const {
    return "tt:" + std::to_string(n_) + ":" + bits_.to_hex();
}

bool TruthTable::eval(const BitVector& x) const {
    if (x.n() != n_) throw domain_error("TruthTable::eval: arity mismatch");
    return bits_.get(x.word());
}

bool eval(const TruthTable& f, const BitVector& x) { return f.eval(x); }

BitVector flip_block(const BitVector& x, const Block& b) {
    BitVector y = x;
    y.xor_with(b.members);
    return y;
}

TruthTable restrict_function(const TruthTable& f, const Block& fixed,
                             const BitVector& assignment) {
    if (fixed.n() != f.n() || assignment.n() != f.n())
        throw domain_error("restrict_function: arity mismatch");
    if (!assignment.subset_of(fixed.members))
        throw domain_error("restrict_function: assignment sets a variable outside the fixed block");
    uint64_t m = fixed.mask();
    uint64_t a = assignment.word();
    std::vector<int> free_pos;
    for (int i = 0; i < f.n(); i++)
        if (!((m >> i) & 1)) free_pos.push_back(i);
    int nf = (int)free_pos.size();
    TruthTable out(nf);
    for (uint64_t i = 0; i < out.size(); i++) {
        uint64_t orig = a;
        for (int b = 0; b < nf; b++)
            if ((i >> b) & 1) orig |= uint64_t(1) << free_pos[b];
        out.set(i, f.get(orig));
    }
    return out;
}

TruthTable compose(const TruthTable& f, const TruthTable& g, const Limits& lim) {
    long long total = (long long)f.n() * g.n();
    if (total > lim.dense)
        throw limit_error("compose: result arity " + std::to_string(total) +
                          " exceeds dense limit " + std::to_string(lim.dense));
    int m = f.n(), k = g.n();
    TruthTable out((int)total);
    uint64_t subm = (k == 64) ? ~uint64_t(0) : ((uint64_t(1) << k) - 1);
    for (uint64_t x = 0; x < out.size(); x++) {
        uint64_t fx = 0;
        for (int i = 0; i < m; i++)
            if (g.get((x >> (i * k)) & subm)) fx |= uint64_t(1) << i;
        out.set(x, f.get(fx));
    }
    return out;
}

bool is_invariant(const TruthTable& f, const Permutation& sigma) {
    if (sigma.n() != f.n()) throw domain_error("is_invariant: arity mismatch");
    if (!sigma.is_valid()) throw domain_error("is_invariant: not a bijection");
    int n = f.n();
    for (uint64_t x = 0; x < f.size(); x++) {
        uint64_t y = 0;
        for (int j = 0; j < n; j++)
            if ((x >> sigma.map[j]) & 1) y |= uint64_t(1) << j;
        if (f.get(x) != f.get(y)) return false;
    }
    return true;
}

bool is_invariant_sampled(const PointFunction& f, const Permutation& sigma,
                          long long samples, uint64_t seed) {
    if (sigma.n() != f.n) throw domain_error("is_invariant_sampled: arity mismatch");
    if (!sigma.is_valid()) throw domain_error("is_invariant_sampled: not a bijection");
    std::mt19937_64 rng(seed);
    for (long long s = 0; s < samples; s++) {
        BitVector x(f.n);
        for (int i = 0; i < f.n; i += 64) {
            uint64_t w = rng();
            for (int b = 0; b < 64 && i + b < f.n; b++)
                if ((w >> b) & 1) x.set(i + b, true);
        }
        if (f.eval(x) != f.eval(sigma.apply_to_input(x))) return false;
    }
    return true;
}

TruthTable materialize(const PointFunction& f, const Limits& lim) {
    if (f.n > lim.dense)
        throw limit_error("materialize: arity " + std::to_string(f.n) +
                          " exceeds dense limit " + std::to_string(lim.dense));
    TruthTable out(f.n);
    for (uint64_t i = 0; i < out.size(); i++)
        if (f.eval(BitVector::from_word(f.n, i))) out.set(i, true);
    return out;
}

} // namespace bfc
