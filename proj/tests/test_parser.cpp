#include "ladderlie/parser.hpp"
#include "ladderlie/serialize.hpp"

#include <doctest.h>

using namespace ladderlie;

namespace {
LieElement Z(Index n, Index m) { return LieElement::generator(n, m); }
} // namespace

TEST_CASE("parsing atoms and brackets")
{
    CHECK(eval_lie(parse("Z[1,0]")) == Z(1, 0));
    CHECK(eval_lie(parse("[Z[1,0],Z[0,1]]")) == Z(1, 1) - Z(0, 0));
    CHECK(eval_lie(parse("2*Z[1,1] - 1/3*Z[0,2]")) ==
          Scalar(2) * Z(1, 1) - Scalar(Rational(1, 3)) * Z(0, 2));
    CHECK(eval_lie(parse("h[0]")) == Z(0, 0) - Scalar(2) * Z(1, 1) + Z(2, 2));
    CHECK(eval_lie(parse("[e[0],f[0]] - h[0]")).is_zero());
    CHECK(eval_lie(parse("i*Z[1,0] + 1/2i*Z[0,1]")) ==
          Scalar::i() * Z(1, 0) + Scalar(Rational(0), Rational(1, 2)) * Z(0, 1));
}

TEST_CASE("gl and vector universes")
{
    EvalResult r = eval(parse("[E[0,1],E[1,0]]"));
    REQUIRE(std::holds_alternative<GlElement>(r));
    CHECK(std::get<GlElement>(r) == GlElement::unit(0, 0) - GlElement::unit(1, 1));

    CHECK(eval_vector(parse("t[2] + 3*t[0]")) ==
          SVector::basis(2) + Scalar(3) * SVector::basis(0));
}

TEST_CASE("mixed universes are rejected")
{
    CHECK_THROWS_WITH_AS(eval(parse("[Z[1,0],E[0,1]]")),
                         doctest::Contains("phi()"), std::invalid_argument);
    CHECK_THROWS_AS(eval(parse("Z[1,0] + t[2]")), std::invalid_argument);
}

TEST_CASE("syntax errors carry byte offsets")
{
    try {
        parse("Z[1,0] + Q[2]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 9);
    }
    CHECK_THROWS_AS(parse("Z[1"), ParseError);
    CHECK_THROWS_AS(parse("Z[-1,0]"), ParseError);
    CHECK_THROWS_AS(parse("1/0*Z[0,0]"), ParseError);
}

TEST_CASE("format and parse round trip")
{
    const char* corpus[] = {
        "Z[1,0]",
        "2*Z[1,1] - 1/3*Z[0,2]",
        "[Z[2,1],Z[1,2]]",
        "[[Z[1,0],Z[0,1]],Z[2,2]]",
        "h[3] + e[1] - f[2]",
        "i*Z[1,0] - 2/7i*Z[0,3] + Z[5,5]",
        "-Z[1,0] + 1/2*Z[2,2]",
    };
    for (const char* s : corpus) {
        LieElement once = eval_lie(parse(s));
        std::string printed = format(once);
        CHECK(eval_lie(parse(printed)) == once);
        CHECK(format(eval_lie(parse(printed))) == printed);
    }
}
