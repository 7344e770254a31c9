#pragma once

#include <cstdint>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"

namespace bfc {

// Two-coloring of Z^b induced by a function, a base input and b pairwise
// disjoint coordinate blocks: axis i drives the bits of block i through a
// cyclic reflected Gray code whose index 0 reproduces the base pattern, so
// unit steps on any axis flip at most one cube coordinate.  Coordinates
// outside the blocks stay pinned to the base input.  A point is "red" when
// its color equals the base value.
class LatticeColoring {
  public:
    LatticeColoring(FunctionHandle f, BitVector base, std::vector<Block> blocks,
                    bool require_sensitive);

    int dimension() const { return (int)blocks_.size(); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const BitVector& base() const { return base_; }
    bool base_value() const { return base_value_; }
    long long period(int axis) const { return 1LL << pos_[axis].size(); }

    BitVector phi(const std::vector<long long>& a) const;
    bool color_at(const std::vector<long long>& a) const;
    bool red(const std::vector<long long>& a) const {
        return color_at(a) == base_value_;
    }

  private:
    FunctionHandle f_;
    BitVector base_;
    std::vector<Block> blocks_;
    std::vector<std::vector<int>> pos_; // bit positions per block, ascending
    std::vector<uint64_t> start_;       // Gray index of the base pattern
    bool base_value_;
};

// require_sensitive additionally demands that flipping each block alone
// changes the value at the base input
LatticeColoring build_coloring(const FunctionHandle& f, const BitVector& x,
                               const std::vector<Block>& blocks,
                               bool require_sensitive = false);

// differently-colored points among the 2b unit neighbors of a
int coloring_sensitivity_at(const LatticeColoring& c,
                            const std::vector<long long>& a);

struct BoxSweep {
    int value = 0;
    bool exact = false; // the box provably contains a global maximum
    std::vector<long long> argmax;
};

// max over the box [-radius, radius]^b; exact once every axis period fits
// inside the box, since the coloring is periodic per axis
BoxSweep coloring_sensitivity_box(const LatticeColoring& c, long long radius,
                                  const Limits& lim = Limits());

// max over one full period box, always exact
BoxSweep coloring_sensitivity_exact(const LatticeColoring& c,
                                    const Limits& lim = Limits());

// origin red and a blue point on each coordinate axis (within one period);
// false for the zero-dimensional coloring
bool nontrivial(const LatticeColoring& c);

} // namespace bfc
