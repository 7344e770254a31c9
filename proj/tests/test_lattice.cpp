#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/lattice.hpp"
#include "bfc/measures.hpp"
#include "bfc/zoo.hpp"

using namespace bfc;

namespace {

uint64_t xs(uint64_t& st) {
    st ^= st << 13;
    st ^= st >> 7;
    st ^= st << 17;
    return st;
}

FunctionHandle dense_of(const TruthTable& t) { return FunctionHandle::dense(t); }

} // namespace

TEST_CASE("origin reproduces the base input, axes are periodic") {
    uint64_t st = 0x1a77ceULL;
    for (int trial = 0; trial < 20; trial++) {
        TruthTable f(4);
        for (uint64_t i = 0; i < 16; i++) f.set(i, xs(st) & 1);
        BitVector base = BitVector::from_word(4, xs(st) & 15);
        std::vector<Block> blocks = {Block::from_vars(4, {1, 2}),
                                     Block::from_vars(4, {3}),
                                     Block::from_vars(4, {4})};
        LatticeColoring c = build_coloring(dense_of(f), base, blocks);
        CHECK(c.dimension() == 3);
        CHECK(c.period(0) == 4);
        CHECK(c.period(1) == 2);
        CHECK(c.period(2) == 2);
        CHECK(c.phi({0, 0, 0}) == base);
        CHECK(c.base_value() == f.eval(base));

        for (int probe = 0; probe < 30; probe++) {
            std::vector<long long> a(3);
            for (auto& v : a) v = (long long)(xs(st) % 11) - 5;
            bool col = c.color_at(a);
            for (int i = 0; i < 3; i++) {
                std::vector<long long> shifted = a;
                shifted[i] += c.period(i);
                CHECK(c.color_at(shifted) == col);
                CHECK(c.phi(shifted) == c.phi(a));

                // a unit step flips exactly one coordinate, inside block i
                std::vector<long long> next = a;
                next[i] += 1;
                uint64_t diff = c.phi(a).word() ^ c.phi(next).word();
                CHECK(std::popcount(diff) == 1);
                CHECK((diff & blocks[i].mask()) == diff);
            }
        }
    }
}

TEST_CASE("two-variable functions at the all-zero base") {
    std::vector<Block> blocks = {Block::from_vars(2, {1}),
                                 Block::from_vars(2, {2})};
    BitVector zero(2);

    LatticeColoring c_or = build_coloring(dense_of(or_table(2)), zero, blocks);
    // both unit neighbors on each axis land on the same flipped input
    CHECK(coloring_sensitivity_at(c_or, {0, 0}) == 4);
    BoxSweep sw = coloring_sensitivity_exact(c_or);
    CHECK(sw.value == 4);
    CHECK(sw.exact);
    CHECK(sw.argmax == std::vector<long long>{0, 0});

    LatticeColoring c_and = build_coloring(dense_of(and_table(2)), zero, blocks);
    CHECK(coloring_sensitivity_at(c_and, {0, 0}) == 0);
    CHECK(coloring_sensitivity_exact(c_and).value == 4); // at (1,1)
}

TEST_CASE("single block of size two walks a four-cycle") {
    std::vector<Block> blocks = {Block::from_vars(2, {1, 2})};
    LatticeColoring c =
        build_coloring(dense_of(or_table(2)), BitVector(2), blocks);
    CHECK(c.period(0) == 4);
    // colors along the axis: 0,1,1,1
    CHECK_FALSE(c.color_at({0}));
    CHECK(c.color_at({1}));
    CHECK(c.color_at({2}));
    CHECK(c.color_at({3}));
    CHECK(coloring_sensitivity_at(c, {0}) == 2);
    CHECK(coloring_sensitivity_at(c, {2}) == 0);

    BoxSweep exact = coloring_sensitivity_exact(c);
    CHECK(exact.value == 2);
    CHECK(exact.argmax == std::vector<long long>{0});

    BoxSweep r1 = coloring_sensitivity_box(c, 1);
    CHECK(r1.value == 2);
    CHECK_FALSE(r1.exact); // box of 3 points, period 4
    BoxSweep r2 = coloring_sensitivity_box(c, 2);
    CHECK(r2.value == 2);
    CHECK(r2.exact);
}

TEST_CASE("sweep maximum never exceeds twice the sensitivity") {
    Limits lim;
    for (uint64_t v = 0; v < 256; v++) {
        TruthTable f = TruthTable::from_value(3, v);
        int s2 = 2 * sensitivity(f);
        for (uint64_t x = 0; x < 8; x++) {
            for (const auto& packing : optimal_packings(f, x)) {
                std::vector<Block> blocks;
                for (uint64_t m : packing) blocks.push_back(Block::from_mask(3, m));
                LatticeColoring c = build_coloring(
                    dense_of(f), BitVector::from_word(3, x), blocks, true);
                BoxSweep sw = coloring_sensitivity_exact(c, lim);
                CHECK(sw.value <= s2);
                CHECK(coloring_sensitivity_at(c, sw.argmax) == sw.value);
                CHECK(nontrivial(c) == !packing.empty());
            }
        }
    }
}

TEST_CASE("sweep bound on random four-variable functions") {
    Limits lim;
    uint64_t st = 0xfeedULL;
    for (int trial = 0; trial < 16; trial++) {
        TruthTable f(4);
        for (uint64_t i = 0; i < 16; i++) f.set(i, xs(st) & 1);
        int s2 = 2 * sensitivity(f);
        uint64_t x = xs(st) & 15;
        auto packs = optimal_packings(f, x);
        if (packs.empty() || packs.front().empty()) continue;
        std::vector<Block> blocks;
        for (uint64_t m : packs.front()) blocks.push_back(Block::from_mask(4, m));
        LatticeColoring c =
            build_coloring(dense_of(f), BitVector::from_word(4, x), blocks, true);
        CHECK(coloring_sensitivity_exact(c, lim).value <= s2);
        CHECK(nontrivial(c));
    }
}

TEST_CASE("construction validation") {
    TruthTable f = or_table(2);
    BitVector zero(2);
    CHECK_THROWS_AS(build_coloring(dense_of(f), BitVector(3),
                                   {Block::from_vars(2, {1})}),
                    domain_error);
    CHECK_THROWS_AS(build_coloring(dense_of(f), zero,
                                   {Block::from_vars(3, {1})}),
                    domain_error);
    CHECK_THROWS_AS(build_coloring(dense_of(f), zero, {Block::from_mask(2, 0)}),
                    domain_error);
    CHECK_THROWS_AS(build_coloring(dense_of(f), zero,
                                   {Block::from_vars(2, {1}),
                                    Block::from_vars(2, {1, 2})}),
                    domain_error);
    // requiring sensitivity rejects AND blocks at the all-zero input
    CHECK_THROWS_AS(build_coloring(dense_of(and_table(2)), zero,
                                   {Block::from_vars(2, {1})}, true),
                    domain_error);

    LatticeColoring c =
        build_coloring(dense_of(f), zero,
                       {Block::from_vars(2, {1}), Block::from_vars(2, {2})});
    CHECK_THROWS_AS(c.phi({0}), domain_error);
    CHECK_THROWS_AS(coloring_sensitivity_box(c, -1), domain_error);
    Limits tight;
    tight.box_budget = 3;
    CHECK_THROWS_AS(coloring_sensitivity_box(c, 2, tight), limit_error);
}

TEST_CASE("zero-dimensional coloring") {
    LatticeColoring c = build_coloring(dense_of(or_table(2)), BitVector(2), {});
    CHECK(c.dimension() == 0);
    CHECK_FALSE(nontrivial(c));
    BoxSweep sw = coloring_sensitivity_exact(c);
    CHECK(sw.value == 0);
    CHECK(sw.exact);
}
