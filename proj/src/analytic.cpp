#include "bfc/analytic.hpp"

#include <algorithm>
#include <bit>

#include "bfc/errors.hpp"
#include "bfc/measures.hpp"

namespace bfc {

using boost::multiprecision::cpp_int;

int MultilinearPoly::degree() const {
    int d = 0;
    for (size_t s = 0; s < c.size(); s++)
        if (c[s] != 0) d = std::max(d, std::popcount(s));
    return d;
}

MultilinearPoly mobius_extend(const TruthTable& f, const Limits& lim) {
    if (f.n() > lim.ext)
        throw limit_error("mobius_extend: n=" + std::to_string(f.n()) +
                          " exceeds extension limit " + std::to_string(lim.ext));
    MultilinearPoly p;
    p.n = f.n();
    uint64_t size = f.size();
    p.c.resize(size);
    for (uint64_t x = 0; x < size; x++) p.c[x] = f.get(x);
    for (int i = 0; i < f.n(); i++) {
        uint64_t b = uint64_t(1) << i;
        for (uint64_t x = 0; x < size; x++)
            if (x & b) p.c[x] -= p.c[x ^ b];
    }
    return p;
}

static void check_box(const std::vector<Rational>& x) {
    for (const Rational& v : x)
        if (v < 0 || v > 1)
            throw domain_error("point coordinate outside [0, 1]");
}

Rational eval_extension(const MultilinearPoly& p, const std::vector<Rational>& x) {
    if ((int)x.size() != p.n)
        throw domain_error("eval_extension: point arity mismatch");
    check_box(x);
    std::vector<Rational> v(p.c.begin(), p.c.end());
    for (int var = p.n - 1; var >= 0; var--) {
        uint64_t half = uint64_t(1) << var;
        for (uint64_t s = 0; s < half; s++)
            v[s] += x[var] * v[s | half];
        v.resize(half);
    }
    return v.empty() ? Rational(0) : v[0];
}

Rational line_restriction_derivative(const MultilinearPoly& p, const Line& line,
                                     const Rational& t) {
    if ((int)line.a.size() != p.n || (int)line.b.size() != p.n)
        throw domain_error("line_restriction_derivative: line arity mismatch");
    check_box(line.a);
    check_box(line.b);
    if (t < 0 || t > 1) throw domain_error("line parameter outside [0, 1]");
    std::vector<Rational> z(p.n);
    for (int i = 0; i < p.n; i++)
        z[i] = (1 - t) * line.a[i] + t * line.b[i];
    Rational sum = 0;
    for (int i = 0; i < p.n; i++) {
        Rational diff = line.b[i] - line.a[i];
        if (diff == 0) continue;
        Rational saved = z[i];
        z[i] = 1;
        Rational hi = eval_extension(p, z);
        z[i] = 0;
        Rational lo = eval_extension(p, z);
        z[i] = saved;
        sum += diff * (hi - lo);
    }
    return sum;
}

// ---- integer path along vertex-to-vertex segments ----

static void poly_add(std::vector<long long>& dst, const std::vector<long long>& src) {
    if (src.size() > dst.size()) dst.resize(src.size(), 0);
    for (size_t i = 0; i < src.size(); i++) dst[i] += src[i];
}

static void poly_sub_shifted(std::vector<long long>& dst, const std::vector<long long>& src) {
    if (src.size() + 1 > dst.size()) dst.resize(src.size() + 1, 0);
    for (size_t i = 0; i < src.size(); i++) dst[i + 1] -= src[i];
}

static void poly_add_shifted(std::vector<long long>& dst, const std::vector<long long>& src) {
    if (src.size() + 1 > dst.size()) dst.resize(src.size() + 1, 0);
    for (size_t i = 0; i < src.size(); i++) dst[i + 1] += src[i];
}

std::vector<long long> line_poly(const MultilinearPoly& p, uint64_t a, uint64_t b) {
    uint64_t size = uint64_t(1) << p.n;
    if ((p.n < 64 && (a >= size || b >= size)))
        throw domain_error("line_poly: endpoint outside the cube");
    std::vector<std::vector<long long>> cur(size);
    for (uint64_t s = 0; s < size; s++)
        if (p.c[s] != 0) cur[s] = {p.c[s]};
    for (int var = p.n - 1; var >= 0; var--) {
        uint64_t half = uint64_t(1) << var;
        bool abit = (a >> var) & 1, bbit = (b >> var) & 1;
        for (uint64_t s = 0; s < half; s++) {
            std::vector<long long>& hi = cur[s | half];
            if (hi.empty()) continue;
            if (!abit && !bbit) continue;           // x_var = 0
            if (abit && bbit) poly_add(cur[s], hi); // x_var = 1
            else if (!abit && bbit) poly_add_shifted(cur[s], hi); // x_var = t
            else { // x_var = 1 - t
                poly_add(cur[s], hi);
                poly_sub_shifted(cur[s], hi);
            }
        }
        cur.resize(half);
    }
    std::vector<long long> out = cur.empty() ? std::vector<long long>{} : std::move(cur[0]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<long long> poly_derivative(const std::vector<long long>& c) {
    std::vector<long long> d;
    for (size_t k = 1; k < c.size(); k++) d.push_back((long long)k * c[k]);
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

cpp_int poly_eval_scaled(const std::vector<long long>& c, long long num, long long den) {
    // Horner on the numerator of q(num/den) * den^(deg q)
    cpp_int acc = 0;
    for (size_t k = c.size(); k-- > 0;)
        acc = acc * num + cpp_int(c[k]) * boost::multiprecision::pow(cpp_int(den), (unsigned)(c.size() - 1 - k));
    return acc;
}

int antipodal_derivative(const TruthTable& f, uint64_t a) {
    MultilinearPoly p = mobius_extend(f);
    uint64_t mask = f.size() - 1;
    std::vector<long long> q = line_poly(p, a, ~a & mask);
    std::vector<long long> d = poly_derivative(q);
    long long at0 = d.empty() ? 0 : d[0];
    int v = (int)(at0 < 0 ? -at0 : at0);
    int s = sensitivity_at(f, a);
    if (v != s)
        throw internal_error("antipodal derivative " + std::to_string(v) +
                             " != sensitivity " + std::to_string(s));
    return v;
}

SweepResult sup_derivative_sweep(const TruthTable& f, int grid_den, const Limits& lim) {
    if (grid_den < 1) throw domain_error("sup_derivative_sweep: grid_den must be >= 1");
    if (f.n() > lim.ext)
        throw limit_error("sup_derivative_sweep: n=" + std::to_string(f.n()) +
                          " exceeds extension limit " + std::to_string(lim.ext));
    uint64_t size = f.size();
    double pairs = 0.5 * (double)size * (double)(size - 1) * (grid_den + 1);
    if (pairs > 5e7)
        throw limit_error("sup_derivative_sweep: " + std::to_string((long long)pairs) +
                          " samples exceed the sweep budget");
    MultilinearPoly p = mobius_extend(f, lim);
    SweepResult best;
    best.value = -1;
    long long N = (long long)size;
#pragma omp parallel
    {
        SweepResult local;
        local.value = -1;
#pragma omp for schedule(dynamic, 4)
        for (long long a = 0; a < N; a++) {
            for (long long b = a + 1; b < N; b++) {
                std::vector<long long> d = poly_derivative(line_poly(p, a, b));
                if (d.empty()) continue;
                for (int j = 0; j <= grid_den; j++) {
                    cpp_int num = poly_eval_scaled(d, j, grid_den);
                    if (num < 0) num = -num;
                    Rational v(num, boost::multiprecision::pow(cpp_int(grid_den),
                                                               (unsigned)(d.size() - 1)));
                    // iteration is ascending (a, b, j), so strict improvement
                    // keeps the first witness within each thread
                    if (v > local.value) {
                        local.value = v;
                        local.a = a;
                        local.b = b;
                        local.tnum = j;
                        local.tden = grid_den;
                    }
                }
            }
        }
#pragma omp critical
        {
            if (local.value > best.value ||
                (local.value == best.value && local.value >= 0 &&
                 std::make_tuple(local.a, local.b, local.tnum) <
                     std::make_tuple(best.a, best.b, best.tnum)))
                best = local;
        }
    }
    if (best.value < 0) { // constant function, no pair produced a derivative
        best.value = 0;
        best.a = 0;
        best.b = size > 1 ? 1 : 0;
        best.tnum = 0;
        best.tden = grid_den;
    }
    return best;
}

} // namespace bfc
