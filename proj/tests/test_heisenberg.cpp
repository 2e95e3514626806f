#include "ladderlie/fock.hpp"
#include "ladderlie/heisenberg.hpp"

#include <doctest.h>

using namespace ladderlie;

TEST_CASE("interleaved relabelings")
{
    CHECK(a_plus(GenIndex(4, 0)) == HeisLabel{Side::plus, 2});
    CHECK(a_plus(GenIndex(3, 0)) == HeisLabel{Side::plus, -2});
    CHECK(a_plus(GenIndex(0, 0)) == HeisLabel{Side::plus, 0});
    CHECK(a_minus(GenIndex(0, 5)) == HeisLabel{Side::minus, -3});
    CHECK_THROWS_AS(a_plus(GenIndex(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(a_minus(GenIndex(2, 0)), std::invalid_argument);

    for (Index k = 0; k <= 25; ++k) {
        CHECK(a_plus_inverse(a_plus(GenIndex(k, 0))) == GenIndex(k, 0));
        CHECK(a_minus_inverse(a_minus(GenIndex(0, k))) == GenIndex(0, k));
    }
}

TEST_CASE("cocycle values")
{
    CHECK(cocycle(HeisLabel{Side::plus, 3}, HeisLabel{Side::plus, -3}) ==
          Scalar(Rational(3)));
    CHECK(cocycle(HeisLabel{Side::plus, 2}, HeisLabel{Side::plus, 5}).is_zero());
    CHECK(cocycle(HeisLabel{Side::plus, -4}, HeisLabel{Side::plus, 4}) ==
          Scalar(Rational(-4)));
    CHECK_THROWS_AS(cocycle(HeisLabel{Side::plus, 1}, HeisLabel{Side::minus, -1}),
                    std::invalid_argument);
}

TEST_CASE("heisenberg bracket")
{
    auto gen = [](Index n) { return HeisenbergElement::generator(HeisLabel{Side::plus, n}); };
    CHECK(heis_bracket(gen(2), gen(-2)) == HeisenbergElement::central(Scalar(2)));
    CHECK(heis_bracket(gen(2), HeisenbergElement::central(Scalar(1))).is_zero());
    CHECK(heis_bracket(gen(1) + gen(2), gen(-2)) == HeisenbergElement::central(Scalar(2)));
}

TEST_CASE("fock realization")
{
    FockConfig cfg{Scalar(Rational(1, 2)), Scalar(Rational(1, 3))};
    FockVector vac = FockVector::vacuum();

    CHECK(fock_apply(cfg, -2, vac) == FockVector::monomial({2}));
    CHECK(fock_apply(cfg, 2, FockVector::monomial({2})) == Scalar(2) * vac);
    CHECK(fock_apply(cfg, 3, FockVector::monomial({2})).is_zero());
    CHECK(fock_apply(cfg, 0, vac) == cfg.mu * vac);

    // commutation oracle [Z_n, Z_-n] = n id on a composite monomial
    FockVector v = FockVector::monomial({1, 1, 3});
    for (Index n = 1; n <= 4; ++n) {
        FockVector comm = fock_apply(cfg, n, fock_apply(cfg, -n, v)) -
                          fock_apply(cfg, -n, fock_apply(cfg, n, v));
        CHECK(comm == Scalar(Rational(static_cast<long>(n))) * v);
    }
}

TEST_CASE("virasoro operators on the vacuum")
{
    FockConfig cfg{Scalar(Rational(1, 2)), Scalar(Rational(1, 3))};
    FockVector vac = FockVector::vacuum();

    Scalar half(Rational(1, 2));
    Scalar l0 = (cfg.mu * cfg.mu + cfg.lambda * cfg.lambda) * half;
    CHECK(virasoro_L(cfg, 0, vac) == l0 * vac);
    CHECK(virasoro_L(cfg, 1, vac).is_zero());
    CHECK(virasoro_L(cfg, -1, vac) ==
          (cfg.mu - Scalar::i() * cfg.lambda) * FockVector::monomial({1}));
}

TEST_CASE("virasoro commutators")
{
    FockConfig cfg{Scalar(Rational(1, 2)), Scalar(Rational(1, 3))};
    FockVector vac = FockVector::vacuum();

    CHECK(virasoro_residual(cfg, 1, -1, vac).is_zero());
    FockVector comm = virasoro_L(cfg, 1, virasoro_L(cfg, -1, vac)) -
                      virasoro_L(cfg, -1, virasoro_L(cfg, 1, vac));
    CHECK(comm == (cfg.mu * cfg.mu + cfg.lambda * cfg.lambda) * vac);

    // [L_2, L_-2] on the vacuum is (2 mu^2 + 8 lambda^2 + 1/2) vacuum
    FockVector comm2 = virasoro_L(cfg, 2, virasoro_L(cfg, -2, vac)) -
                       virasoro_L(cfg, -2, virasoro_L(cfg, 2, vac));
    Scalar expected = Scalar(2) * cfg.mu * cfg.mu + Scalar(8) * cfg.lambda * cfg.lambda +
                      Scalar(Rational(1, 2));
    CHECK(comm2 == expected * vac);
    CHECK(virasoro_residual(cfg, 2, -2, vac).is_zero());

    // no central term away from n = -m
    CHECK(virasoro_residual(cfg, 1, 2, FockVector::monomial({2, 3})).is_zero());
}

TEST_CASE("virasoro result is window independent")
{
    FockConfig cfg{Scalar(1), Scalar(Rational(2, 5))};
    FockVector v = FockVector::monomial({1, 2, 2});
    for (Index n = -3; n <= 3; ++n) {
        if (n == 0)
            continue;
        CHECK(virasoro_L(cfg, n, v) == virasoro_L(cfg, n, v, 2 * v.max_degree() + 5));
    }
}
