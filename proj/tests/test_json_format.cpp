#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spindiv/divisors.hpp"
#include "spindiv/format.hpp"
#include "spindiv/json_io.hpp"

using namespace spindiv;

TEST_CASE("wire format is byte-exact") {
    const DivisorClass c = DivisorClass::make(ModuliSpace::mg1_bar(3),
                                              {{BasisSymbol::lambda(), 7},
                                               {BasisSymbol::psi(), 14},
                                               {BasisSymbol::delta_irr(), -1},
                                               {BasisSymbol::delta(1), -9},
                                               {BasisSymbol::delta(2), -5}});
    CHECK(emit_json(c) ==
          R"({"space":{"kind":"Mg1Bar","g":3},"coeffs":{"lambda":"7","psi":"14","delta_irr":"-1","delta_1":"-9","delta_2":"-5"}})");
    CHECK(parse_json(emit_json(c)) == c);

    const DivisorClass u = u_class(1, 3).cls;
    CHECK(emit_json(u) ==
          R"({"space":{"kind":"SpinBar","g":6},"coeffs":{"lambda":"451","alpha_0":"-237/4","beta_0":"-106"}})");

    // stack spaces carry r and d; parity appears only when tagged
    const DivisorClass f =
        DivisorClass::single(ModuliSpace::spin_grd_stack(6, 1, 4), BasisSymbol::frak_a());
    CHECK(emit_json(f) == R"({"space":{"kind":"SpinGrdStack","g":6,"r":1,"d":4},"coeffs":{"frak_a":"1"}})");
    const DivisorClass tagged =
        DivisorClass::single(ModuliSpace::spin_bar(3, Parity::Plus), BasisSymbol::lambda());
    CHECK(emit_json(tagged) == R"({"space":{"kind":"SpinBar","g":3,"parity":"plus"},"coeffs":{"lambda":"1"}})");
}

TEST_CASE("coefficient keys follow the canonical order") {
    DivisorClass c = DivisorClass::zero(ModuliSpace::spin_bar(6));
    c.add_term(BasisSymbol::beta(2), 1);
    c.add_term(BasisSymbol::alpha(0), 2);
    c.add_term(BasisSymbol::beta(0), 3);
    c.add_term(BasisSymbol::alpha(1), 4);
    c.add_term(BasisSymbol::lambda(), 5);
    CHECK(emit_json(c) ==
          R"({"space":{"kind":"SpinBar","g":6},"coeffs":{"lambda":"5","alpha_0":"2","beta_0":"3","alpha_1":"4","beta_2":"1"}})");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json(R"({"coeffs":{}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_json(R"({"space":{"kind":"Nope","g":3},"coeffs":{}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json(R"({"space":{"kind":"Mg1Bar","g":3},"coeffs":{"tau":"1"}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json(R"({"space":{"kind":"Mg1Bar","g":3},"coeffs":{"psi":"1.5"}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_json(R"({"space":{"kind":"Mg1Bar","g":3},"coeffs":{"psi":2}})"),
                    std::invalid_argument);
    // inadmissible symbol for the space
    CHECK_THROWS_AS(parse_json(R"({"space":{"kind":"MgBar","g":3},"coeffs":{"psi":"1"}})"),
                    std::invalid_argument);
}

TEST_CASE("round trip on random sparse classes") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 40);
    const std::vector<ModuliSpace> pool = {
        ModuliSpace::spin_bar(6),         ModuliSpace::spin_bar(9, Parity::Plus),
        ModuliSpace::spin_bar(4, Parity::Minus), ModuliSpace::mg_bar(7),
        ModuliSpace::mg1_bar(2),          ModuliSpace::mg1_bar(6),
        ModuliSpace::m12_bar(),           ModuliSpace::grd_stack(6, 2, 6),
        ModuliSpace::spin_grd_stack(10, 1, 6)};
    for (int trial = 0; trial < 500; ++trial) {
        const ModuliSpace& space = pool[rng() % pool.size()];
        DivisorClass c = DivisorClass::zero(space);
        for (const auto& s : space.basis()) {
            if (rng() % 2) c.add_term(s, Rational(num(rng), den(rng)));
        }
        const DivisorClass back = parse_json(emit_json(c));
        CHECK(back == c);
        CHECK(back.space().parity() == c.space().parity());
    }
}

TEST_CASE("text rendering") {
    CHECK(to_text(u_class(1, 3).cls) == "451*lambda - (237/4)*alpha_0 - 106*beta_0");
    CHECK(to_text(DivisorClass::zero(ModuliSpace::m12_bar())) == "0");
    CHECK(to_text(weierstrass_class(3)) == "-lambda + 6*psi - 3*delta_1 - delta_2");
    CHECK(to_text(theta_null_class(3).cls) == "(1/4)*lambda - (1/16)*alpha_0");
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(theta_pointed_class(3)) ==
          "7\\lambda+14\\psi-\\delta_{\\mathrm{irr}}-9\\delta_1-5\\delta_2");
    CHECK(to_latex(u_class(1, 3).cls) ==
          "451\\lambda-\\frac{237}{4}\\alpha_0-106\\beta_0");
    CHECK(to_latex(t2_class()) == "3\\psi_x");
    CHECK(to_latex(weierstrass_class(3)) == "-\\lambda+6\\psi-3\\delta_1-\\delta_2");
    CHECK(to_latex(DivisorClass::zero(ModuliSpace::m12_bar())) == "0");
}
