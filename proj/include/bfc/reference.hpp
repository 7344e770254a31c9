#pragma once

#include <cstdint>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/glgraph.hpp"
#include "bfc/spectral.hpp"

namespace bfc {

// Plain serial counterparts of the parallel kernels, plus deliberately
// naive oracles that cross-check the optimized algorithms in tests and
// benchmarks.  Nothing here shares shortcuts with the main code paths.

int sensitivity_serial(const TruthTable& f);
int gamma_serial(const CubeSubgraph& g);

// every sensitive block (no minimality filter), max disjoint family by
// exhaustive recursion
int naive_block_sensitivity_at(const TruthTable& f, uint64_t x);
int naive_block_sensitivity(const TruthTable& f);

// smallest fixed set forcing the value, by subset enumeration in
// ascending size over all inputs
int naive_certificate_at(const TruthTable& f, uint64_t x);
int naive_certificate(const TruthTable& f);

// minimax recursion with no memoization or pruning
int naive_decision_depth(const TruthTable& f);

// transform straight from the definition, one character at a time
std::vector<long long> naive_fourier(const TruthTable& f, Values conv);

// rank over the rationals by textbook elimination
int rational_rank(const std::vector<std::vector<long long>>& m);

} // namespace bfc
