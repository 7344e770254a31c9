#include <doctest.h>

#include <cstdint>

#include "bfc/analytic.hpp"
#include "bfc/errors.hpp"
#include "bfc/measures.hpp"
#include "bfc/zoo.hpp"

using namespace bfc;

TEST_CASE("multilinear extension interpolates the table") {
    for (uint64_t bits = 0; bits < 256; bits += 3) {
        TruthTable f = TruthTable::from_value(3, bits);
        MultilinearPoly p = mobius_extend(f);
        CHECK(p.degree() == degree(f));
        for (uint64_t x = 0; x < 8; x++) {
            std::vector<Rational> pt;
            for (int i = 0; i < 3; i++) pt.emplace_back((x >> i) & 1);
            CHECK(eval_extension(p, pt) == Rational(f.get(x) ? 1 : 0));
        }
    }
    MultilinearPoly p = mobius_extend(TruthTable::parse("tt:2:8"));
    CHECK_THROWS_AS(eval_extension(p, {Rational(2), Rational(0)}), domain_error);
    CHECK_THROWS_AS(eval_extension(p, {Rational(0)}), domain_error);
}

TEST_CASE("midpoint value of AND is a quarter") {
    MultilinearPoly p = mobius_extend(TruthTable::parse("tt:2:8"));
    Rational half(1, 2);
    CHECK(eval_extension(p, {half, half}) == Rational(1, 4));
}

TEST_CASE("antipodal derivative equals pointwise sensitivity everywhere") {
    for (int n = 1; n <= 3; n++) {
        for (uint64_t bits = 0; bits < (uint64_t(1) << (1 << n)); bits++) {
            TruthTable f = TruthTable::from_value(n, bits);
            for (uint64_t a = 0; a < f.size(); a++)
                CHECK(antipodal_derivative(f, a) == sensitivity_at(f, a));
        }
    }
}

TEST_CASE("derivative along the parity diagonal vanishes at the center") {
    MultilinearPoly p = mobius_extend(TruthTable::parse("tt:2:6"));
    Line diag;
    diag.a = {Rational(0), Rational(0)};
    diag.b = {Rational(1), Rational(1)};
    CHECK(line_restriction_derivative(p, diag, Rational(1, 2)) == Rational(0));
    // and at the ends it has the antipodal magnitude 2
    CHECK(line_restriction_derivative(p, diag, Rational(0)) == Rational(2));
}

TEST_CASE("line polynomial differentiates consistently") {
    TruthTable f = TruthTable::parse("tt:3:E8");
    MultilinearPoly p = mobius_extend(f);
    uint64_t a = 0, b = 7;
    std::vector<long long> q = line_poly(p, a, b);
    std::vector<long long> dq = poly_derivative(q);

    Line l;
    for (int i = 0; i < 3; i++) {
        l.a.emplace_back((a >> i) & 1);
        l.b.emplace_back((b >> i) & 1);
    }
    for (long long num = 0; num <= 8; num++) {
        Rational t(num, 8);
        Rational direct = line_restriction_derivative(p, l, t);
        // dq evaluated exactly at num/8, scaled by 8^(deg dq)
        boost::multiprecision::cpp_int scaled = poly_eval_scaled(dq, num, 8);
        int degd = (int)dq.size() - 1;
        boost::multiprecision::cpp_int denom = 1;
        for (int i = 0; i < degd; i++) denom *= 8;
        CHECK(direct == Rational(scaled, denom));
    }
}

TEST_CASE("sweep of small functions") {
    Limits lim;
    // the sweep upper bound never exceeds s(f) and is attained, for every
    // function on up to three variables
    for (int n = 1; n <= 3; n++) {
        for (uint64_t bits = 0; bits < (uint64_t(1) << (1 << n)); bits++) {
            TruthTable f = TruthTable::from_value(n, bits);
            SweepResult sr = sup_derivative_sweep(f, 4, lim);
            CHECK(sr.value == Rational(sensitivity(f)));
        }
    }
}

TEST_CASE("sweep witness reproduces its own value") {
    Limits lim;
    TruthTable f = rubinstein_table(2);
    SweepResult sr = sup_derivative_sweep(f, 8, lim);
    CHECK(sr.value == Rational(sensitivity(f)));
    MultilinearPoly p = mobius_extend(f);
    Line l;
    for (int i = 0; i < 4; i++) {
        l.a.emplace_back((sr.a >> i) & 1);
        l.b.emplace_back((sr.b >> i) & 1);
    }
    Rational at = line_restriction_derivative(p, l, Rational(sr.tnum, sr.tden));
    CHECK(boost::multiprecision::abs(at) == sr.value);
}

TEST_CASE("grid denominators must be positive") {
    Limits lim;
    CHECK_THROWS_AS(sup_derivative_sweep(TruthTable::parse("tt:2:8"), 0, lim),
                    domain_error);
}
