#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bfc/function.hpp"
#include "bfc/limits.hpp"

namespace bfc {

using Rational = boost::multiprecision::cpp_rational;

// The unique multilinear polynomial agreeing with f on {0,1}^n, stored as
// integer coefficients: f(x) = sum_S c[S] * prod_{i in S} x_i.
struct MultilinearPoly {
    int n = 0;
    std::vector<long long> c;

    int degree() const;
};

MultilinearPoly mobius_extend(const TruthTable& f, const Limits& lim = Limits());

// Exact evaluation on the solid cube; every coordinate must lie in [0, 1].
Rational eval_extension(const MultilinearPoly& p, const std::vector<Rational>& x);

// Segment between two points of the solid cube, parametrized as
// z(t) = (1-t) a + t b for t in [0, 1].
struct Line {
    std::vector<Rational> a, b;
};

// d/dt f(z(t)) = sum_i (b_i - a_i) * (f(z(t) with x_i=1) - f(z(t) with x_i=0))
Rational line_restriction_derivative(const MultilinearPoly& p, const Line& line,
                                     const Rational& t);

// f restricted to the segment between Boolean points a and b is a univariate
// polynomial in t with integer coefficients; returns its coefficient vector.
std::vector<long long> line_poly(const MultilinearPoly& p, uint64_t a, uint64_t b);

std::vector<long long> poly_derivative(const std::vector<long long>& c);

// numerator of q(num/den) over den^deg(q)
boost::multiprecision::cpp_int poly_eval_scaled(const std::vector<long long>& c,
                                                long long num, long long den);

// |f'_l(0)| on the line from a to its antipode; checked against s(f, a),
// which it must equal, before returning.
int antipodal_derivative(const TruthTable& f, uint64_t a);

struct SweepResult {
    Rational value; // max |f'_l(t)| over all sampled lines and grid points
    uint64_t a = 0, b = 0;
    long long tnum = 0, tden = 1;
};

// Sweeps every unordered pair of cube vertices with t on the uniform grid
// {0, 1/grid_den, ..., 1}; exact arithmetic throughout.
SweepResult sup_derivative_sweep(const TruthTable& f, int grid_den = 32,
                                 const Limits& lim = Limits());

} // namespace bfc
