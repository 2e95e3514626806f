#include "ladderlie/scalar.hpp"

#include <doctest.h>

using namespace ladderlie;

TEST_CASE("rational strings are canonical")
{
    CHECK(rational_to_string(rational_from_string("4/6")) == "2/3");
    CHECK(rational_to_string(rational_from_string("-4/6")) == "-2/3");
    CHECK(rational_to_string(rational_from_string("5")) == "5");
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("gaussian rational arithmetic is exact")
{
    Scalar a(Rational(1, 2), Rational(1, 3));
    Scalar b(Rational(1, 2), Rational(-1, 3));
    CHECK(a + b == Scalar(Rational(1)));
    CHECK(a * b == Scalar(Rational(1, 4) + Rational(1, 9)));
    CHECK((a * a.inverse()) == Scalar(1));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1L));
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("scalar string round trip")
{
    for (const char* s : {"0", "1", "-2/3", "1/2+1/3*i", "1/2-1/3*i", "-1/2-2/3*i",
                          "2*i", "-1*i", "-7"}) {
        Scalar v = scalar_from_string(s);
        CHECK(scalar_from_string(scalar_to_string(v)) == v);
    }
    CHECK(scalar_to_string(Scalar(Rational(1, 2), Rational(-2, 5))) == "1/2-2/5*i");
    CHECK(scalar_to_string(Scalar(Rational(0), Rational(1))) == "1*i");
}
