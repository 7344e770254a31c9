#include <doctest.h>

#include <string>

#include "bfc/errors.hpp"
#include "bfc/funcspec.hpp"
#include "bfc/spectral.hpp"
#include "bfc/zoo.hpp"

using namespace bfc;

namespace {

std::string canon(const std::string& text) {
    return parse_spec(text).to_string();
}

TruthTable dense(const std::string& text) {
    FunctionHandle h = function_from_spec(text);
    REQUIRE(h.is_dense());
    return *h.table;
}

} // namespace

TEST_CASE("canonical forms and round trips") {
    CHECK(canon("tt:3:96") == "tt:3:96");
    CHECK(canon("tt:3:fe") == "tt:3:FE");
    CHECK(canon("zoo:parity:n=5") == "zoo:parity:n=5");
    CHECK(canon("zoo:chakraborty:n=512,k=8") == "zoo:chakraborty:k=8,n=512");
    CHECK(canon("zoo:kushilevitz") == "zoo:kushilevitz");
    CHECK(canon("compose(tt:2:8,tt:2:E)") == "compose(tt:2:8,tt:2:E)");
    CHECK(canon("negate(tt:2:8)") == "negate(tt:2:8)");
    CHECK(canon("restrict(tt:3:96,3=0,1=1)") == "restrict(tt:3:96,1=1,3=0)");
    CHECK(canon("  compose( tt:2:8 ,\tnegate( tt:1:2 ) )  ") ==
          "compose(tt:2:8,negate(tt:1:2))");

    for (const char* text :
         {"tt:3:96", "zoo:chakraborty:k=8,n=512",
          "compose(zoo:and:n=2,zoo:or:n=2)",
          "restrict(negate(compose(tt:2:8,tt:2:E)),2=1,4=0)"})
        CHECK(canon(canon(text)) == canon(text));
}

TEST_CASE("kinds and arity") {
    CHECK(parse_spec("tt:1:2").kind == FunctionSpec::Kind::table);
    CHECK(parse_spec("zoo:parity:n=3").kind == FunctionSpec::Kind::zoo);
    CHECK(parse_spec("compose(tt:1:2,tt:1:2)").kind ==
          FunctionSpec::Kind::compose);
    CHECK(parse_spec("negate(tt:1:2)").kind == FunctionSpec::Kind::negate);
    CHECK(parse_spec("restrict(tt:2:8,1=1)").kind ==
          FunctionSpec::Kind::restriction);

    CHECK(parse_spec("tt:3:96").arity() == 3);
    CHECK(parse_spec("zoo:rubinstein:k=9").arity() == 81);
    CHECK(parse_spec("compose(tt:2:8,tt:2:E)").arity() == 4);
    CHECK(parse_spec("restrict(tt:3:96,2=1)").arity() == 2);
    // the zoo-parameter comma and the compose comma disambiguate by `key=`
    FunctionSpec nested = parse_spec("compose(zoo:chakraborty:k=8,n=512,tt:2:8)");
    CHECK(nested.arity() == 1024);
    CHECK(nested.to_string() == "compose(zoo:chakraborty:k=8,n=512,tt:2:8)");
    // arity is known without generating anything; realizing is what's barred
    CHECK_THROWS_AS(nested.realize(), limit_error);
}

TEST_CASE("realized semantics") {
    CHECK(dense("compose(tt:2:8,tt:2:E)") == and_of_ors_table(2));
    CHECK(dense("compose(zoo:and:n=2,zoo:or:n=2)") == and_of_ors_table(2));
    CHECK(dense("zoo:kushilevitz") == kushilevitz_table());
    CHECK(dense("negate(tt:2:8)") == TruthTable::parse("tt:2:1"));
    CHECK(dense("negate(zoo:parity:n=2)") == parity_table(2));
    CHECK(dense("restrict(tt:3:96,2=1)") == TruthTable::parse("tt:2:9"));
    CHECK(dense("restrict(tt:3:96,1=1,3=0)") == TruthTable::parse("tt:1:1"));

    TruthTable f = parity_table(3);
    CHECK(dense("negate(tt:3:96)") == negate_inputs(f));

    FunctionHandle big = function_from_spec("zoo:parity:n=40");
    CHECK_FALSE(big.is_dense());
    CHECK(big.n == 40);
    BitVector x(40);
    x.set(3, true);
    CHECK(big.eval(x));
}

TEST_CASE("parse errors carry a position") {
    for (const char* bad : {
             "",
             "mystery(tt:1:2)",
             "tt:3:FFF",
             "tt:2:8)",
             "tt:2:",
             "zoo:parity",
             "zoo:parity:n=3,n=4",
             "zoo:parity:5",
             "zoo:nosuch:k=1",
             "compose(tt:1:2)",
             "compose(tt:1:2,tt:1:2",
             "negate()",
             "restrict(tt:2:8)",
             "restrict(tt:2:8,0=1)",
             "restrict(tt:2:8,1=2)",
             "restrict(tt:2:8,1=0,1=1)",
             "restrict(tt:2:8,1)",
         }) {
        CHECK_THROWS_WITH_AS(parse_spec(bad), doctest::Contains("position"),
                             domain_error);
    }
    // the reported offset points at the offending token
    CHECK_THROWS_WITH_AS(parse_spec("compose(tt:1:2,glorp)"),
                         doctest::Contains("position 15"), domain_error);
}

TEST_CASE("range problems surface at parse time") {
    CHECK_THROWS_WITH_AS(
        parse_spec("compose(zoo:parity:n=1048576,zoo:parity:n=1048576)"),
        doctest::Contains("arity overflow"), domain_error);
    CHECK_THROWS_WITH_AS(parse_spec("restrict(tt:2:8,3=1)"),
                         doctest::Contains("out of range"), domain_error);
    // limit problems keep their own category
    CHECK_THROWS_AS(parse_spec("zoo:kushilevitz:levels=20"), limit_error);
    CHECK_THROWS_AS(parse_spec("zoo:parity:n=9999999999"), limit_error);
    // a parseable spec may still be unbuildable at the configured limits
    FunctionSpec deep = parse_spec("zoo:kushilevitz:levels=2");
    CHECK(deep.arity() == 36);
    CHECK_THROWS_AS(deep.realize(), limit_error);
}

TEST_CASE("restriction chains compose") {
    TruthTable two_step =
        dense("restrict(restrict(tt:3:96,2=1),2=0)"); // pins x2 then new-x2
    TruthTable one_step = dense("restrict(tt:3:96,2=1,3=0)");
    CHECK(two_step == one_step);
}
