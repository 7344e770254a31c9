#pragma once

#include <string>
#include <vector>

#include "bfc/bits.hpp"

namespace bfc {

// Permutation of variable indices, stored 0-indexed: perm[i] is the image
// of variable i+1, minus one.  Text form is one-line cycle notation with
// 1-indexed variables, e.g. "(1 2 3)(5 6)"; fixed points may be omitted.
struct Permutation {
    std::vector<int> map;

    int n() const { return (int)map.size(); }

    static Permutation identity(int n);
    static Permutation parse_cycles(int n, const std::string& text);
    std::string to_cycles() const;

    Permutation inverse() const;
    bool is_valid() const;

    // y with y_j = x_{sigma(j)}
    BitVector apply_to_input(const BitVector& x) const;
};

// true when the group generated by the given permutations has a single
// orbit on {1..n}; computed by closing {1} under generators and inverses
bool orbit_transitive(const std::vector<Permutation>& gens, int n);

} // namespace bfc
