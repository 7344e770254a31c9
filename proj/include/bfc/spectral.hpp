#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"

namespace bfc {

// Value convention for transforms and communication matrices: the function's
// {0,1} outputs used as-is, or mapped 0 -> +1, 1 -> -1.
enum class Values { zero_one, plus_minus };

enum class Combiner { and_op, or_op, xor_op };

Values parse_values(const std::string& s);    // "01" / "pm"
Combiner parse_combiner(const std::string& s); // "and" / "or" / "xor"

// Walsh-Hadamard coefficients as exact integer numerators: the coefficient
// of chi_S is a[S] / 2^n with a[S] = sum_x v(x) (-1)^{popcount(x & S)}.
struct FourierSpectrum {
    int n = 0;
    Values conv = Values::plus_minus;
    std::vector<long long> a; // indexed by subset mask S

    long long sparsity() const;
    long long min_nonzero_abs() const; // 0 when the spectrum is all-zero
    long long l1_numerator() const;    // sum |a[S]|, value is that / 2^n
    int max_degree() const;            // largest |S| with a[S] != 0
    // sum of squares equals v dot v * 2^n: 4^n in the plus-minus convention
    bool parseval_holds() const;
};

FourierSpectrum fourier_transform(const TruthTable& f, Values conv = Values::plus_minus);

// Number of nonzero coefficients; equals the rank of the 2^n x 2^n matrix
// M[x][y] = v(f(x ^ y)) because H M H is diagonal with entries 2^n fhat(S).
long long xor_rank_via_spectrum(const TruthTable& f, Values conv);

struct RankResult {
    long long rank = 0;
    std::string method; // "bareiss" or "modular"
};

// Exact rank over the rationals of M[x][y] = v(f(x op y)).  By default two
// independent 61-bit prime moduli are tried first and their agreeing answer
// is reported as "modular"; any disagreement falls back to fraction-free
// integer elimination.  force_exact skips the modular path entirely.
RankResult comm_rank(const TruthTable& f, Combiner op, Values conv,
                     const Limits& lim, bool force_exact = false);

// g(x) = f(~x)
TruthTable negate_inputs(const TruthTable& f);

// Exposed for tests: rank of an integer matrix via Bareiss elimination and
// via elimination mod p.
long long bareiss_rank(std::vector<std::vector<long long>> m);
long long modular_rank(const std::vector<std::vector<long long>>& m, uint64_t p);

} // namespace bfc
