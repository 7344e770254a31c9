#include "bfc/lattice.hpp"

#include <algorithm>

#include "bfc/errors.hpp"

namespace bfc {

namespace {

uint64_t gray(uint64_t t) { return t ^ (t >> 1); }

uint64_t gray_inverse(uint64_t g) {
    uint64_t t = g;
    for (int sh = 1; sh < 64; sh <<= 1) t ^= t >> sh;
    return t;
}

uint64_t positive_mod(long long a, uint64_t p) {
    long long r = a % (long long)p;
    return (uint64_t)(r < 0 ? r + (long long)p : r);
}

} // namespace

LatticeColoring::LatticeColoring(FunctionHandle f, BitVector base,
                                 std::vector<Block> blocks,
                                 bool require_sensitive)
    : f_(std::move(f)), base_(std::move(base)), blocks_(std::move(blocks)) {
    if (base_.n() != f_.n)
        throw domain_error("LatticeColoring: base input arity mismatch");
    BitVector seen(f_.n);
    for (const Block& b : blocks_) {
        if (b.n() != f_.n)
            throw domain_error("LatticeColoring: block arity mismatch");
        if (b.empty()) throw domain_error("LatticeColoring: empty block");
        if (seen.intersects(b.members))
            throw domain_error("LatticeColoring: blocks overlap");
        seen.xor_with(b.members);
        std::vector<int> p;
        for (int i = 0; i < f_.n; i++)
            if (b.members.get(i)) p.push_back(i);
        if (p.size() > 62)
            throw limit_error("LatticeColoring: block too large for a Gray index");
        uint64_t pattern = 0;
        for (size_t j = 0; j < p.size(); j++)
            if (base_.get(p[j])) pattern |= uint64_t(1) << j;
        start_.push_back(gray_inverse(pattern));
        pos_.push_back(std::move(p));
    }
    base_value_ = f_.eval(base_);
    if (require_sensitive)
        for (const Block& b : blocks_)
            if (f_.eval(flip_block(base_, b)) == base_value_)
                throw domain_error(
                    "LatticeColoring: block {" + b.members.to_string() +
                    "} is not sensitive at the base input");
}

BitVector LatticeColoring::phi(const std::vector<long long>& a) const {
    if ((int)a.size() != dimension())
        throw domain_error("LatticeColoring: point dimension mismatch");
    BitVector y = base_;
    for (int i = 0; i < dimension(); i++) {
        uint64_t p = (uint64_t)period(i);
        uint64_t g = gray((start_[i] + positive_mod(a[i], p)) & (p - 1));
        for (size_t j = 0; j < pos_[i].size(); j++)
            y.set(pos_[i][j], (g >> j) & 1);
    }
    return y;
}

bool LatticeColoring::color_at(const std::vector<long long>& a) const {
    return f_.eval(phi(a));
}

LatticeColoring build_coloring(const FunctionHandle& f, const BitVector& x,
                               const std::vector<Block>& blocks,
                               bool require_sensitive) {
    return LatticeColoring(f, x, blocks, require_sensitive);
}

int coloring_sensitivity_at(const LatticeColoring& c,
                            const std::vector<long long>& a) {
    bool here = c.color_at(a);
    std::vector<long long> nb = a;
    int count = 0;
    for (int i = 0; i < c.dimension(); i++)
        for (int step : {1, -1}) {
            nb[i] = a[i] + step;
            count += c.color_at(nb) != here;
            nb[i] = a[i];
        }
    return count;
}

namespace {

BoxSweep sweep(const LatticeColoring& c, const std::vector<long long>& lo,
               const std::vector<long long>& hi, bool exact,
               const Limits& lim) {
    int b = c.dimension();
    long long total = 1;
    for (int i = 0; i < b; i++) {
        long long side = hi[i] - lo[i] + 1;
        if (total > lim.box_budget / side)
            throw limit_error("lattice sweep: box of " + std::to_string(total) +
                              "+ points exceeds budget " +
                              std::to_string(lim.box_budget));
        total *= side;
    }
    BoxSweep out;
    out.exact = exact;
    out.argmax = lo;
    std::vector<long long> a = lo;
    while (true) {
        int s = coloring_sensitivity_at(c, a);
        if (s > out.value) {
            out.value = s;
            out.argmax = a;
        }
        int i = 0;
        while (i < b && a[i] == hi[i]) {
            a[i] = lo[i];
            i++;
        }
        if (i == b) break;
        a[i]++;
    }
    return out;
}

} // namespace

BoxSweep coloring_sensitivity_box(const LatticeColoring& c, long long radius,
                                  const Limits& lim) {
    if (radius < 0) throw domain_error("lattice sweep: negative radius");
    int b = c.dimension();
    std::vector<long long> lo(b, -radius), hi(b, radius);
    bool exact = true;
    for (int i = 0; i < b; i++) exact = exact && 2 * radius + 1 >= c.period(i);
    return sweep(c, lo, hi, exact, lim);
}

BoxSweep coloring_sensitivity_exact(const LatticeColoring& c,
                                    const Limits& lim) {
    int b = c.dimension();
    std::vector<long long> lo(b, 0), hi(b);
    for (int i = 0; i < b; i++) hi[i] = c.period(i) - 1;
    return sweep(c, lo, hi, true, lim);
}

bool nontrivial(const LatticeColoring& c) {
    if (c.dimension() == 0) return false;
    std::vector<long long> a(c.dimension(), 0);
    if (!c.red(a)) return false;
    for (int i = 0; i < c.dimension(); i++) {
        bool blue = false;
        for (long long j = 1; j < c.period(i) && !blue; j++) {
            a[i] = j;
            blue = !c.red(a);
        }
        a[i] = 0;
        if (!blue) return false;
    }
    return true;
}

} // namespace bfc
