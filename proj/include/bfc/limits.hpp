#pragma once

#include <cstdint>

namespace bfc {

// Work limits for the exponential algorithms.  Each can be overridden per
// call site or through BFC_*_LIMIT environment variables; operations that
// would blow past a limit either return bounds or throw limit_error.
struct Limits {
    int dense = 20;       // max n for materialized 2^n truth tables
    int bs = 12;          // max n for exact block sensitivity
    int cert = 12;        // max n for exact certificate complexity
    int dtree = 13;       // max n for exact decision tree depth
    int dpar = 6;         // max n for exact parity decision tree depth
    int rank = 10;        // max n for 2^n x 2^n communication matrices
    int ext = 16;         // max n for multilinear extension coefficients
    long long invariance_samples = 10000;  // sampled invariance checks
    long long box_budget = 10000000;       // max lattice box sweep points

    // Reads BFC_DENSE_LIMIT, BFC_BS_LIMIT, BFC_C_LIMIT, BFC_D_LIMIT,
    // BFC_DPAR_LIMIT, BFC_RANK_LIMIT, BFC_EXT_LIMIT when set.
    static Limits from_env();
};

} // namespace bfc
