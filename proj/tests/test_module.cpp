#include "ladderlie/smodule.hpp"

#include <doctest.h>

using namespace ladderlie;

namespace {
LieElement Z(Index n, Index m) { return LieElement::generator(n, m); }
SVector t(Index k) { return SVector::basis(k); }
} // namespace

TEST_CASE("standard module action")
{
    CHECK(act(Z(3, 1), t(2)) == t(4));
    CHECK(act(Z(0, 4), t(2)).is_zero());
    CHECK(act(Z(0, 0), t(7)) == t(7));
}

TEST_CASE("star product")
{
    CHECK(star(t(2), t(3)) == t(5));
    SVector v = t(1) + Scalar(3) * t(4);
    CHECK(star(t(0), v) == v);
    CHECK(star(t(1) + t(2), t(1)) == t(2) + t(3));
}

TEST_CASE("truncated matrices")
{
    TruncatedMatrix m = matrix(Z(2, 0), 4);
    for (Index r = 0; r <= 4; ++r)
        for (Index c = 0; c <= 4; ++c) {
            bool expected_one = (r == 2 && c == 0) || (r == 3 && c == 1) || (r == 4 && c == 2);
            CHECK(m.entries[r][c] == (expected_one ? Scalar(1) : Scalar(0)));
        }

    TruncatedMatrix m31 = matrix(Z(3, 1), 4);
    CHECK(m31.entries[3][1] == Scalar(1));
    CHECK(m31.entries[4][2] == Scalar(1));
    CHECK(m31.entries[2][0] == Scalar(0));

    CHECK(matrix(LieElement::zero(), 3).is_zero());
    CHECK_THROWS_AS(matrix(Z(0, 0), 0), std::invalid_argument);
}

TEST_CASE("singular vectors")
{
    CHECK(is_singular(t(0)));
    CHECK(!is_singular(t(3)));
    CHECK(!is_singular(t(0) + t(1)));
    CHECK_THROWS_AS(is_singular(SVector{}), std::invalid_argument);
}

TEST_CASE("highest weight generation")
{
    CHECK(hw_generate(0) == t(0));
    CHECK(hw_generate(5) == t(5));
    CHECK(hw_generate(12) == t(12));
}
