#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spindiv/divisor_class.hpp"
#include "spindiv/pullback.hpp"

using namespace spindiv;

namespace {

DivisorClass random_class(const ModuliSpace& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-99, 99);
    std::uniform_int_distribution<long> den(1, 12);
    DivisorClass out = DivisorClass::zero(space);
    for (const auto& s : space.basis()) {
        if (rng() % 2) out.add_term(s, Rational(num(rng), den(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("rational helpers are exact and normalized") {
    CHECK(to_string(rat(6, -8)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational("-237/4") == Rational(-237, 4));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow2(5) == Rational(32));
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/-4"), std::invalid_argument);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("admissible bases per space") {
    const ModuliSpace spin6 = ModuliSpace::spin_bar(6);
    CHECK(spin6.admissible(BasisSymbol::alpha(3)));
    CHECK_FALSE(spin6.admissible(BasisSymbol::alpha(4)));
    CHECK_FALSE(spin6.admissible(BasisSymbol::psi()));

    const ModuliSpace mg1 = ModuliSpace::mg1_bar(3);
    CHECK(mg1.admissible(BasisSymbol::delta(2)));
    CHECK_FALSE(mg1.admissible(BasisSymbol::delta(3)));
    CHECK_FALSE(mg1.admissible(BasisSymbol::delta(0)));

    // the rank-2 pencil bundle exists only when r = 1
    CHECK(ModuliSpace::spin_grd_stack(6, 1, 4).admissible(BasisSymbol::c1h()));
    CHECK_FALSE(ModuliSpace::spin_grd_stack(9, 2, 8).admissible(BasisSymbol::c1h()));

    CHECK_THROWS_AS(ModuliSpace::grd_stack(6, 1, 5), std::invalid_argument);
}

TEST_CASE("class arithmetic is exact and sparse") {
    const ModuliSpace spin = ModuliSpace::spin_bar(6);
    const DivisorClass half = DivisorClass::make(
        spin, {{BasisSymbol::lambda(), Rational(1, 4)}, {BasisSymbol::alpha(0), Rational(-1, 16)}});
    const DivisorClass doubled = Rational(2) * half;
    CHECK(doubled == DivisorClass::make(spin, {{BasisSymbol::lambda(), Rational(1, 2)},
                                               {BasisSymbol::alpha(0), Rational(-1, 8)}}));

    const DivisorClass u = DivisorClass::make(spin, {{BasisSymbol::lambda(), 451},
                                                     {BasisSymbol::alpha(0), Rational(-237, 4)},
                                                     {BasisSymbol::beta(0), -106}});
    CHECK(u == u);
    CHECK((u + (Rational(-1) * u)).is_zero());

    // zero coefficients are never stored
    DivisorClass c = DivisorClass::zero(spin);
    c.add_term(BasisSymbol::lambda(), Rational(1, 3));
    c.add_term(BasisSymbol::lambda(), Rational(-1, 3));
    CHECK(c.is_zero());
    CHECK(c.coeffs().empty());

    CHECK_THROWS_WITH(u + DivisorClass::zero(ModuliSpace::spin_bar(7)),
                      Catch::Matchers::ContainsSubstring("incompatible spaces"));
    CHECK_THROWS_WITH(DivisorClass::single(spin, BasisSymbol::psi()),
                      Catch::Matchers::ContainsSubstring("not admissible"));
}

TEST_CASE("parity is metadata, not identity") {
    const DivisorClass either = DivisorClass::single(ModuliSpace::spin_bar(6), BasisSymbol::lambda());
    const DivisorClass plus =
        DivisorClass::single(ModuliSpace::spin_bar(6, Parity::Plus), BasisSymbol::lambda());
    CHECK(either == plus);
    CHECK(plus.space().parity() == Parity::Plus);
}

TEST_CASE("pi pullback") {
    const ModuliSpace mg5 = ModuliSpace::mg_bar(5);
    CHECK(pullback_pi(DivisorClass::single(mg5, BasisSymbol::delta(0))) ==
          DivisorClass::make(ModuliSpace::spin_bar(5),
                             {{BasisSymbol::alpha(0), 1}, {BasisSymbol::beta(0), 2}}));
    CHECK(pullback_pi(DivisorClass::single(mg5, BasisSymbol::delta(2))) ==
          DivisorClass::make(ModuliSpace::spin_bar(5),
                             {{BasisSymbol::alpha(2), 1}, {BasisSymbol::beta(2), 1}}));
    CHECK(pullback_pi(DivisorClass::single(mg5, BasisSymbol::lambda())) ==
          DivisorClass::single(ModuliSpace::spin_bar(5), BasisSymbol::lambda()));
    CHECK_THROWS_AS(pullback_pi(DivisorClass::zero(ModuliSpace::mg1_bar(5))),
                    std::invalid_argument);
}

TEST_CASE("p pullback") {
    const ModuliSpace mg3 = ModuliSpace::mg_bar(3);
    CHECK(pullback_p(DivisorClass::single(mg3, BasisSymbol::delta(1))) ==
          DivisorClass::make(ModuliSpace::mg1_bar(3),
                             {{BasisSymbol::delta(1), 1}, {BasisSymbol::delta(2), 1}}));
    CHECK(pullback_p(DivisorClass::single(mg3, BasisSymbol::delta(0))) ==
          DivisorClass::single(ModuliSpace::mg1_bar(3), BasisSymbol::delta_irr()));

    const DivisorClass c = DivisorClass::make(
        mg3, {{BasisSymbol::lambda(), 9}, {BasisSymbol::delta(0), -1}, {BasisSymbol::delta(1), -3}});
    CHECK(pullback_p(c) == DivisorClass::make(ModuliSpace::mg1_bar(3),
                                              {{BasisSymbol::lambda(), 9},
                                               {BasisSymbol::delta_irr(), -1},
                                               {BasisSymbol::delta(1), -3},
                                               {BasisSymbol::delta(2), -3}}));

    // self-paired middle index of even genus maps with coefficient 1
    CHECK(pullback_p(DivisorClass::single(ModuliSpace::mg_bar(4), BasisSymbol::delta(2))) ==
          DivisorClass::single(ModuliSpace::mg1_bar(4), BasisSymbol::delta(2)));
}

TEST_CASE("nu pullback reduces to {psi_x, delta_0xq}") {
    const ModuliSpace mg1 = ModuliSpace::mg1_bar(5);
    const ModuliSpace m12 = ModuliSpace::m12_bar();
    CHECK(pullback_nu(DivisorClass::single(mg1, BasisSymbol::delta(1))) ==
          DivisorClass::single(m12, BasisSymbol::psi_x(), -1));
    CHECK(pullback_nu(DivisorClass::single(mg1, BasisSymbol::lambda())) ==
          DivisorClass::make(m12, {{BasisSymbol::psi_x(), 1}, {BasisSymbol::delta_0xq(), -1}}));
    CHECK(pullback_nu(DivisorClass::single(mg1, BasisSymbol::delta(3))).is_zero());

    // a lambda + b psi - b_irr delta_irr - sum b_i delta_i
    const Rational a(7), b(14), b_irr(1), b1(9), b2(3), b3(2), b4(5);
    const DivisorClass c = DivisorClass::make(mg1, {{BasisSymbol::lambda(), a},
                                                    {BasisSymbol::psi(), b},
                                                    {BasisSymbol::delta_irr(), -b_irr},
                                                    {BasisSymbol::delta(1), -b1},
                                                    {BasisSymbol::delta(2), -b2},
                                                    {BasisSymbol::delta(3), -b3},
                                                    {BasisSymbol::delta(4), -b4}});
    CHECK(pullback_nu(c) ==
          DivisorClass::make(m12, {{BasisSymbol::psi_x(), a + b - 12 * b_irr + b1},
                                   {BasisSymbol::delta_0xq(), -(a + b4 - 12 * b_irr)}}));
}

TEST_CASE("mumford normalization in genus 2") {
    const ModuliSpace mg1 = ModuliSpace::mg1_bar(2);
    const DivisorClass raw = DivisorClass::make(mg1, {{BasisSymbol::lambda(), Rational(3, 2)},
                                                      {BasisSymbol::psi(), 3},
                                                      {BasisSymbol::delta_irr(), Rational(-1, 4)},
                                                      {BasisSymbol::delta(1), Rational(-3, 2)}});
    CHECK(mumford_normalize_g2(raw) == DivisorClass::make(mg1, {{BasisSymbol::lambda(), -1},
                                                                {BasisSymbol::psi(), 3},
                                                                {BasisSymbol::delta(1), -1}}));
    CHECK(mumford_normalize_g2(DivisorClass::single(mg1, BasisSymbol::delta_irr())) ==
          DivisorClass::make(mg1, {{BasisSymbol::lambda(), 10}, {BasisSymbol::delta(1), -2}}));
    const DivisorClass untouched =
        DivisorClass::make(mg1, {{BasisSymbol::lambda(), 1}, {BasisSymbol::psi(), 1}});
    CHECK(mumford_normalize_g2(untouched) == untouched);
    CHECK_THROWS_WITH(mumford_normalize_g2(DivisorClass::zero(ModuliSpace::mg1_bar(3))),
                      Catch::Matchers::ContainsSubstring("genus 2"));
}

TEST_CASE("in_p_image recognizes pullbacks") {
    const ModuliSpace mg1 = ModuliSpace::mg1_bar(3);
    const DivisorClass c = DivisorClass::make(mg1, {{BasisSymbol::lambda(), 9},
                                                    {BasisSymbol::delta_irr(), -1},
                                                    {BasisSymbol::delta(1), -3},
                                                    {BasisSymbol::delta(2), -3}});
    const auto pre = in_p_image(c);
    REQUIRE(pre.has_value());
    CHECK(*pre == DivisorClass::make(ModuliSpace::mg_bar(3), {{BasisSymbol::lambda(), 9},
                                                              {BasisSymbol::delta(0), -1},
                                                              {BasisSymbol::delta(1), -3}}));
    CHECK_FALSE(in_p_image(DivisorClass::single(mg1, BasisSymbol::psi())).has_value());
    CHECK_FALSE(in_p_image(DivisorClass::make(mg1, {{BasisSymbol::delta(1), 1},
                                                    {BasisSymbol::delta(2), -1}}))
                    .has_value());
}

TEST_CASE("pullback composition nu o p") {
    const ModuliSpace mg3 = ModuliSpace::mg_bar(3);
    const ModuliSpace m12 = ModuliSpace::m12_bar();
    CHECK(pullback_nu(pullback_p(DivisorClass::single(mg3, BasisSymbol::lambda()))) ==
          DivisorClass::make(m12, {{BasisSymbol::psi_x(), 1}, {BasisSymbol::delta_0xq(), -1}}));
    CHECK(pullback_nu(pullback_p(DivisorClass::single(mg3, BasisSymbol::delta(0)))) ==
          DivisorClass::make(m12, {{BasisSymbol::psi_x(), 12}, {BasisSymbol::delta_0xq(), -12}}));
}

TEST_CASE("pullbacks are linear, normalization idempotent, p invertible") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int g = 3 + static_cast<int>(rng() % 6);
        const DivisorClass c1 = random_class(ModuliSpace::mg_bar(g), rng);
        const DivisorClass c2 = random_class(ModuliSpace::mg_bar(g), rng);
        std::uniform_int_distribution<long> num(-99, 99);
        const Rational t(num(rng), 1 + static_cast<long>(rng() % 10));
        CHECK(pullback_pi(t * c1 + c2) == t * pullback_pi(c1) + pullback_pi(c2));
        CHECK(pullback_p(t * c1 + c2) == t * pullback_p(c1) + pullback_p(c2));

        const DivisorClass m1 = random_class(ModuliSpace::mg1_bar(g), rng);
        const DivisorClass m2 = random_class(ModuliSpace::mg1_bar(g), rng);
        CHECK(pullback_nu(t * m1 + m2) == t * pullback_nu(m1) + pullback_nu(m2));

        const auto pre = in_p_image(pullback_p(c1));
        REQUIRE(pre.has_value());
        CHECK(*pre == c1);

        const DivisorClass g2 = random_class(ModuliSpace::mg1_bar(2), rng);
        const DivisorClass relation = DivisorClass::make(ModuliSpace::mg1_bar(2),
                                                         {{BasisSymbol::lambda(), 10},
                                                          {BasisSymbol::delta(1), -2},
                                                          {BasisSymbol::delta_irr(), -1}});
        CHECK(mumford_normalize_g2(mumford_normalize_g2(g2)) == mumford_normalize_g2(g2));
        CHECK(mumford_normalize_g2(g2 + t * relation) == mumford_normalize_g2(g2));
    }
}
