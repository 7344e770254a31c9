#pragma once

#include <cstdint>
#include <string>

#include "bfc/function.hpp"

namespace bfc {

// Induced subgraph of the n-dimensional hypercube, stored as the 2^n-bit
// membership of its vertex set.  Text form "vs:<n>:<hex>" with the same
// digit layout as truth tables.
struct CubeSubgraph {
    int n = 0;
    PackedBits member;

    CubeSubgraph() : member(1) {}
    explicit CubeSubgraph(int n);

    static CubeSubgraph parse(const std::string& text);
    std::string to_spec() const;

    uint64_t size() const { return uint64_t(1) << n; }
    bool contains(uint64_t v) const { return member.get(v); }
    uint64_t vertex_count() const { return member.popcount(); }
};

// Vertex set where the +/-1 values of f and of the parity function agree.
CubeSubgraph function_to_subgraph(const TruthTable& f);

// Inverse of function_to_subgraph (the two maps are mutually inverse).
TruthTable subgraph_to_function(const CubeSubgraph& g);

// Hamming neighbors of v on v's own side: inside the subgraph induced on
// the vertex set for members, inside the one on its complement otherwise.
int side_degree(const CubeSubgraph& g, uint64_t v);

// Max side_degree over all vertices, i.e. the larger of the two induced
// max degrees.  Parallel over vertex ranges.
int gamma(const CubeSubgraph& g);

// true iff the vertex set is exactly half the cube
bool balanced(const CubeSubgraph& g);

} // namespace bfc
