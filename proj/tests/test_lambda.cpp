#include "ladderlie/lambda.hpp"

#include <doctest.h>

using namespace ladderlie;

namespace {
LambdaBasis e(Index k) { return LambdaBasis(Parity::even, k); }
LambdaBasis o(Index k) { return LambdaBasis(Parity::odd, k); }
LambdaElement el(const LambdaBasis& b) { return LambdaElement::basis(b); }
} // namespace

TEST_CASE("bullet product on labels")
{
    CHECK(bullet(o(1), o(1)) == e(1));
    CHECK(bullet(e(0), o(3)) == o(3));
    CHECK(bullet(e(2), e(3)) == e(5));
    CHECK(bullet(e(2), o(1)) == o(3));
}

TEST_CASE("label range invariants")
{
    CHECK_THROWS_AS(LambdaBasis(Parity::odd, 0), std::invalid_argument);
    CHECK_THROWS_AS(LambdaBasis(Parity::even, -1), std::invalid_argument);
}

TEST_CASE("phi relabeling")
{
    CHECK(phi_iso(4) == e(2));
    CHECK(phi_iso(3) == o(2));
    CHECK(phi_iso(0) == e(0));
    for (Index k = 0; k <= 40; ++k)
        CHECK(phi_inv(phi_iso(k)) == k);
}

TEST_CASE("lambda actions")
{
    // Z_{-n}^- sends o(k) to e(k-n) when in range, else 0
    CHECK(lambda_act(Side::minus, -2, el(o(5))) == el(e(3)));
    CHECK(lambda_act(Side::minus, 2, el(o(2))).is_zero());
    CHECK(lambda_act(Side::plus, -1, el(e(0))) == el(o(1)));
}

TEST_CASE("commuting diagrams")
{
    CHECK(diagram_check(GenIndex(0, 3), 5)); // Z[0,2n-1] on t_{2k-1}
    for (Index n = 0; n <= 10; ++n)
        for (Index k = 0; k <= 10; ++k)
            CHECK(diagram_check(GenIndex(2 * n, 0), k));
    CHECK(diagram_check(GenIndex(0, 0), 5));
    CHECK_THROWS_AS(diagram_check(GenIndex(1, 1), 0), std::invalid_argument);
}
