#include <doctest.h>

#include <cstdint>
#include <map>

#include "bfc/errors.hpp"
#include "bfc/measures.hpp"
#include "bfc/spectral.hpp"
#include "bfc/zoo.hpp"

using namespace bfc;

namespace {

// measured once with an independent exhaustive-search script and frozen here
struct Golden {
    int s, bs, C, D, deg;
};

void check_profile(const TruthTable& f, Golden g) {
    Limits lim;
    CHECK(sensitivity(f) == g.s);
    CHECK(block_sensitivity(f, lim).value == g.bs);
    CHECK(certificate_complexity(f, lim).value == g.C);
    CHECK(decision_tree_depth(f, lim).value == g.D);
    CHECK(degree(f) == g.deg);
}

} // namespace

TEST_CASE("sensitivity-equals-block-sensitivity family, frozen profiles") {
    check_profile(and_of_ors_table(2), {2, 2, 2, 4, 4});
    check_profile(and_of_ors_table(3), {3, 3, 3, 9, 9});
}

TEST_CASE("square-gap family, frozen profiles") {
    check_profile(rubinstein_table(2), {2, 2, 2, 4, 4});
    check_profile(rubinstein_table(3), {6, 6, 6, 9, 9});
}

TEST_CASE("degree-3 six-variable function, frozen profile") {
    TruthTable h = kushilevitz_table();
    check_profile(h, {6, 6, 6, 6, 3});
    // every plus-minus coefficient is 0 or +-16/64, and exactly 16 survive
    FourierSpectrum sp = fourier_transform(h);
    CHECK(sp.sparsity() == 16);
    CHECK(sp.min_nonzero_abs() == 16);
    for (long long a : sp.a) CHECK((a == 0 || a == 16 || a == -16));
}

TEST_CASE("point and table forms agree") {
    for (int k = 2; k <= 3; k++) {
        TruthTable t = rubinstein_table(k);
        PointFunction p = rubinstein_point(k);
        for (uint64_t x = 0; x < t.size(); x++)
            CHECK(t.get(x) == p(BitVector::from_word(t.n(), x)));
    }
    for (int k = 1; k <= 2; k++) {
        TruthTable t = and_of_ors_table(k);
        PointFunction p = and_of_ors_point(k);
        for (uint64_t x = 0; x < t.size(); x++)
            CHECK(t.get(x) == p(BitVector::from_word(t.n(), x)));
    }
}

TEST_CASE("handpicked values") {
    TruthTable r3 = rubinstein_table(3);
    // a single group whose content is two adjacent ones
    CHECK(r3.eval(BitVector::parse(9, "110000000")));
    CHECK(r3.eval(BitVector::parse(9, "011000000")));
    // three ones in a group is not an adjacent pair
    CHECK_FALSE(r3.eval(BitVector::parse(9, "111000000")));
    // a non-adjacent pair is not enough
    CHECK_FALSE(r3.eval(BitVector::parse(9, "101000000")));
    // two groups may match at once
    CHECK(r3.eval(BitVector::parse(9, "110110000")));

    TruthTable a2 = and_of_ors_table(2);
    CHECK(a2.eval(BitVector::parse(4, "0110")));
    CHECK_FALSE(a2.eval(BitVector::parse(4, "0011")));

    TruthTable h = kushilevitz_table();
    CHECK_FALSE(h.eval(BitVector::parse(6, "000000")));
    CHECK(h.eval(BitVector::parse(6, "100000"))); // w = 1 gives value 1
    CHECK(h.eval(BitVector::parse(6, "110000"))); // w = 2: 2 - 1 + 0 = 1
}

TEST_CASE("cyclic pattern family") {
    int k = 8;
    long long n = 64;
    PointFunction f = chakraborty_point(k, n);
    BitVector w = chakraborty_witness(k, n);
    CHECK(f(w));
    CHECK_FALSE(f(BitVector((int)n)));

    // the witness pattern fixes 6k - 2 coordinates
    int sens = sensitivity_at(f, w);
    CHECK(sens == 6 * k - 2);

    // rotating the witness still matches (the matcher is cyclic)
    BitVector rot((int)n);
    for (int j = 0; j < n; j++) rot.set((j + 1) % (int)n, w.get(j));
    CHECK(f(rot));

    CHECK_THROWS_AS(chakraborty_point(7, 49), domain_error);
    CHECK_THROWS_AS(chakraborty_point(8, 63), domain_error);
}

TEST_CASE("generator catalog") {
    auto infos = zoo_list();
    CHECK(infos.size() == 7);
    Limits lim;
    for (const auto& info : infos) {
        // every catalog entry builds at its smallest legal parameters
        std::map<std::string, long long> params;
        if (info.name == "parity" || info.name == "and" || info.name == "or")
            params["n"] = 1;
        else if (info.name == "and_of_ors")
            params["k"] = 1;
        else if (info.name == "rubinstein")
            params["k"] = 2;
        else if (info.name == "chakraborty")
            params["k"] = 8;
        ZooFunction z = make_zoo(info.name, params, lim);
        CHECK(z.fn.n == zoo_arity(info.name, params));
    }
}

TEST_CASE("parameter validation") {
    Limits lim;
    CHECK_THROWS_AS(make_zoo("nosuch", {}, lim), domain_error);
    CHECK_THROWS_AS(make_zoo("parity", {}, lim), domain_error);
    CHECK_THROWS_AS(make_zoo("parity", {{"n", 0}}, lim), domain_error);
    CHECK_THROWS_AS(make_zoo("parity", {{"n", 3}, {"k", 1}}, lim), domain_error);
    CHECK_THROWS_AS(make_zoo("rubinstein", {{"k", 1}}, lim), domain_error);
    CHECK_THROWS_AS(make_zoo("chakraborty", {{"k", 4}}, lim), domain_error);
    CHECK_THROWS_AS(make_zoo("kushilevitz", {{"levels", 2}}, lim), limit_error);
}

TEST_CASE("generators switch to point form past the dense limit") {
    Limits lim;
    ZooFunction small = make_zoo("parity", {{"n", 10}}, lim);
    CHECK(small.fn.is_dense());
    ZooFunction big = make_zoo("parity", {{"n", 40}}, lim);
    CHECK_FALSE(big.fn.is_dense());
    BitVector x(40);
    x.set(7, true);
    CHECK(big.fn.eval(x));
    ZooFunction rub = make_zoo("rubinstein", {{"k", 7}}, lim); // n = 49
    CHECK_FALSE(rub.fn.is_dense());
    BitVector y(49);
    y.set(0, true);
    y.set(1, true);
    CHECK(rub.fn.eval(y));
}

TEST_CASE("claim verification passes for the exactly-known families") {
    Limits lim;
    for (const char* name : {"parity", "and", "or"}) {
        ZooFunction z = make_zoo(name, {{"n", 5}}, lim);
        ZooVerification v = verify_zoo(z, lim);
        CHECK(v.all_ok);
    }
    ZooVerification v2 =
        verify_zoo(make_zoo("rubinstein", {{"k", 3}}, lim), lim);
    CHECK(v2.all_ok);
    ZooVerification v3 = verify_zoo(make_zoo("kushilevitz", {}, lim), lim);
    CHECK(v3.all_ok);
    ZooVerification v4 =
        verify_zoo(make_zoo("chakraborty", {{"k", 8}, {"n", 256}}, lim), lim);
    CHECK(v4.all_ok);
    // no exact claims survive for the asymptotic-only family
    CHECK(v4.checks.empty());
    CHECK(!v4.extra.empty());
}

TEST_CASE("spec strings") {
    Limits lim;
    CHECK(make_zoo("rubinstein", {{"k", 3}}, lim).spec_string() ==
          "zoo:rubinstein:k=3");
    CHECK(make_zoo("chakraborty", {{"k", 8}, {"n", 512}}, lim).spec_string() ==
          "zoo:chakraborty:k=8,n=512");
    CHECK(make_zoo("kushilevitz", {}, lim).spec_string() ==
          "zoo:kushilevitz:levels=1");
}
