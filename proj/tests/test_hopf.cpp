#include "ladderlie/hopf.hpp"
#include "ladderlie/serialize.hpp"

#include <doctest.h>

using namespace ladderlie;

namespace {

HopfElement G(Index k) { return HopfElement::generator(k); }

// convolution-inverse oracle: m(S (x) id) Delta(x) must be counit(x) 1
bool antipode_axiom_holds(const HopfElement& x)
{
    HopfElement conv;
    TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms())
        conv += c * (antipode(HopfElement::monomial(key.first)) *
                     HopfElement::monomial(key.second));
    return conv == counit(x) * HopfElement::one();
}

} // namespace

TEST_CASE("coproduct")
{
    TensorElement d2 = coproduct(G(2));
    TensorElement expected;
    expected.add_term({{2}, {}}, Scalar(1));
    expected.add_term({{}, {2}}, Scalar(1));
    expected.add_term({{1}, {1}}, Scalar(1));
    CHECK(d2 == expected);

    CHECK(coproduct(HopfElement::one()) == TensorElement::of(HopfElement::one(), HopfElement::one()));

    TensorElement dsq = coproduct(G(1) * G(1));
    TensorElement expected_sq;
    expected_sq.add_term({{1, 1}, {}}, Scalar(1));
    expected_sq.add_term({{1}, {1}}, Scalar(2));
    expected_sq.add_term({{}, {1, 1}}, Scalar(1));
    CHECK(dsq == expected_sq);
}

TEST_CASE("counit")
{
    CHECK(counit(G(3)).is_zero());
    CHECK(counit(HopfElement::one()) == Scalar(1));
    CHECK(counit(HopfElement::scalar(Scalar(2)) + G(1)) == Scalar(2));
}

TEST_CASE("antipode")
{
    CHECK(antipode(G(1)) == Scalar(-1) * G(1));
    CHECK(antipode(G(2)) == Scalar(-1) * G(2) + G(1) * G(1));
    CHECK(antipode(G(3)) ==
          Scalar(-1) * G(3) + Scalar(2) * G(1) * G(2) + Scalar(-1) * G(1) * G(1) * G(1));
    for (Index m = 0; m <= 8; ++m)
        CHECK(antipode_axiom_holds(G(m)));
    CHECK(antipode_axiom_holds(G(2) * G(3)));
}

TEST_CASE("grading derivation Y")
{
    CHECK(grading_Y(G(3)) == Scalar(3) * G(3));
    CHECK(grading_Y(HopfElement::one()).is_zero());
    CHECK(grading_Y(G(1) * G(2)) == Scalar(3) * (G(1) * G(2)));
}

TEST_CASE("generator action")
{
    CHECK(lie_act(GenIndex(0, 1), 3) == G(2));
    CHECK(lie_act(GenIndex(0, 4), 2).is_zero());
    CHECK(lie_act(GenIndex(0, 2), 2) == HopfElement::one());
}

TEST_CASE("derivations D1 and D3")
{
    CHECK(D1(1) == Scalar(2) * G(1));
    CHECK(D1(2) == Scalar(2) * G(2) + G(1) * G(1));
    CHECK(D1(0) == HopfElement::one());

    CHECK(D3(0).is_zero());
    CHECK(D3(1) == Scalar(-1) * G(1));
    CHECK(D3(2) == Scalar(-1) * G(2) + G(1) * G(1));
    for (Index m = 1; m <= 10; ++m)
        CHECK(D3(m) == antipode(G(m)));
}

TEST_CASE("character convolution")
{
    Character eps; // counit: zero on all generators
    Character ones;
    for (Index k = 1; k <= 12; ++k)
        ones.values[k] = Scalar(1);

    for (Index m = 1; m <= 6; ++m)
        CHECK(char_convolve(eps, eps, G(m)).is_zero());
    CHECK(char_convolve(ones, eps, G(2)) == Scalar(1));
    CHECK(char_convolve(ones, ones, G(2)) == Scalar(3));
}

TEST_CASE("S star Y")
{
    CHECK(s_star_y(0).is_zero());
    CHECK(s_star_y(1) == G(1));
    CHECK(s_star_y(2) == Scalar(2) * G(2) + Scalar(-1) * (G(1) * G(1)));
    for (Index m = 0; m <= 10; ++m)
        CHECK(s_star_y(m) == s_star_y_direct(m));
}
