#pragma once

// Pushforward along the degree-N covering from the linear-series stack to
// the spin moduli space. The three tautological classes have explicit
// pushforward formulas; lambda, alpha_0, beta_0 push to N times themselves
// by the projection formula. Outputs are supported on {lambda, alpha_0,
// beta_0}, the visible part of the partially compactified Picard group.

#include <map>
#include <stdexcept>

#include "spindiv/combinat.hpp"
#include "spindiv/taut.hpp"

namespace spindiv {

struct PushforwardRule {
    int g = 0;
    int r = 0;
    int d = 0;
    Integer degree;                              // N, the number of series on a general curve
    std::map<BasisSymbol, DivisorClass> action;  // values on SpinBar(g)

    DivisorClass apply(const FormalClass& c) const {
        const ModuliSpace expected = ModuliSpace::spin_grd_stack(g, r, d);
        if (!(c.space() == expected) && !(c.space() == ModuliSpace::grd_stack(g, r, d))) {
            throw std::invalid_argument("pushforward of a class on " + c.space().description() +
                                        " by the rule for " + expected.description());
        }
        if (r != 1 && c.coeff(BasisSymbol::c1h()) != 0) {
            throw std::invalid_argument("c1(H) defined only in the pencil setting r=1");
        }
        DivisorClass out = DivisorClass::zero(ModuliSpace::spin_bar(g));
        for (const auto& [s, coeff] : c.coeffs()) {
            const auto it = action.find(s);
            if (it == action.end()) {
                throw std::invalid_argument("pushforward has no action on symbol " + s.name());
            }
            out += coeff * it->second;
        }
        return out;
    }
};

namespace detail {

inline DivisorClass kappa1_on_spin(const ModuliSpace& spin) {
    return DivisorClass::make(spin, {{BasisSymbol::lambda(), 12},
                                     {BasisSymbol::alpha(0), -1},
                                     {BasisSymbol::beta(0), -2}});
}

inline DivisorClass lambda_alpha_beta(const ModuliSpace& spin, const Rational& l,
                                      const Rational& boundary) {
    // boundary multiplies alpha_0 + 2 beta_0
    return DivisorClass::make(spin, {{BasisSymbol::lambda(), l},
                                     {BasisSymbol::alpha(0), boundary},
                                     {BasisSymbol::beta(0), 2 * boundary}});
}

// sigma_*(c1(H)) in the pencil setting of degree-k covers of genus 2k-2:
//   N ( -3(k+1)/(2k-3) lambda + k/(2(2k-3)) (alpha_0 + 2 beta_0) ).
inline DivisorClass push_c1h_pencil(const ModuliSpace& spin, int k, const Integer& n) {
    return Rational(n) * lambda_alpha_beta(spin, Rational(-3 * (k + 1), 2 * k - 3),
                                           Rational(k, 2 * (2 * k - 3)));
}

}  // namespace detail

// The general pushforward rule for a rho = 0 stack of g^r_d's:
//   sigma_*(a) = dN/((g-1)(g-2)) ( (gd - 2g^2 + 8d - 8g + 4) lambda
//                + (1/6)(2g^2 - gd + 3g - 4d - 2)(alpha_0 + 2 beta_0) )
//   sigma_*(b) = dN/(2g-2) (12 lambda - alpha_0 - 2 beta_0)
//   sigma_*(c) = N (12 lambda - alpha_0 - 2 beta_0)
// When r = 1 the constraint rho = 0 forces g = 2d-2 and the pencil-bundle
// class c1(H) is also available.
inline PushforwardRule sigma_star_rule(int g, int r, int d) {
    const Integer n = linear_series_count(g, r, d);
    const ModuliSpace spin = ModuliSpace::spin_bar(g);
    PushforwardRule rule{g, r, d, n, {}};

    rule.action.emplace(BasisSymbol::lambda(),
                        DivisorClass::single(spin, BasisSymbol::lambda(), Rational(n)));
    rule.action.emplace(BasisSymbol::alpha(0),
                        DivisorClass::single(spin, BasisSymbol::alpha(0), Rational(n)));
    rule.action.emplace(BasisSymbol::beta(0),
                        DivisorClass::single(spin, BasisSymbol::beta(0), Rational(n)));

    const Integer dn_int = Integer(d) * n;
    const Rational dn(dn_int);
    const long gl = g, dl = d;
    const Rational a_lambda =
        dn * Rational(gl * dl - 2 * gl * gl + 8 * dl - 8 * gl + 4, (gl - 1) * (gl - 2));
    const Rational a_boundary =
        dn * Rational(2 * gl * gl - gl * dl + 3 * gl - 4 * dl - 2, 6 * (gl - 1) * (gl - 2));
    rule.action.emplace(BasisSymbol::frak_a(), detail::lambda_alpha_beta(spin, a_lambda, a_boundary));
    const Rational b_scale = dn / Rational(2 * g - 2);
    rule.action.emplace(BasisSymbol::frak_b(), b_scale * detail::kappa1_on_spin(spin));
    rule.action.emplace(BasisSymbol::frak_c(), Rational(n) * detail::kappa1_on_spin(spin));
    if (r == 1) {
        rule.action.emplace(BasisSymbol::c1h(), detail::push_c1h_pencil(spin, d, n));
    }
    return rule;
}

// The pencil-case rule written directly in terms of k (g = 2k-2, d = k,
// N the Catalan number):
//   sigma_*(a)     = N ( -3k(k+1)/(2k-3) lambda + k^2/(2(2k-3)) (alpha_0 + 2 beta_0) )
//   sigma_*(b)     = N (  6k/(2k-3) lambda      - k/(2(2k-3))  (alpha_0 + 2 beta_0) )
//   sigma_*(c1(H)) = N ( -3(k+1)/(2k-3) lambda  + k/(2(2k-3))  (alpha_0 + 2 beta_0) )
inline PushforwardRule sigma_star_pencil_rule(int k) {
    if (k < 3) throw std::invalid_argument("pencil pushforward requires k >= 3");
    const Integer n = catalan_pencils(k);
    const int g = 2 * k - 2;
    const ModuliSpace spin = ModuliSpace::spin_bar(g);
    PushforwardRule rule{g, 1, k, n, {}};

    rule.action.emplace(BasisSymbol::lambda(),
                        DivisorClass::single(spin, BasisSymbol::lambda(), Rational(n)));
    rule.action.emplace(BasisSymbol::alpha(0),
                        DivisorClass::single(spin, BasisSymbol::alpha(0), Rational(n)));
    rule.action.emplace(BasisSymbol::beta(0),
                        DivisorClass::single(spin, BasisSymbol::beta(0), Rational(n)));

    rule.action.emplace(
        BasisSymbol::frak_a(),
        Rational(n) * detail::lambda_alpha_beta(spin, Rational(-3 * k * (k + 1), 2 * k - 3),
                                                Rational(static_cast<long>(k) * k, 2 * (2 * k - 3))));
    rule.action.emplace(BasisSymbol::frak_b(),
                        Rational(n) * detail::lambda_alpha_beta(spin, Rational(6 * k, 2 * k - 3),
                                                                Rational(-k, 2 * (2 * k - 3))));
    rule.action.emplace(BasisSymbol::frak_c(), Rational(n) * detail::kappa1_on_spin(spin));
    rule.action.emplace(BasisSymbol::c1h(), detail::push_c1h_pencil(spin, k, n));
    return rule;
}

inline DivisorClass sigma_star(int g, int r, int d, const FormalClass& c) {
    return sigma_star_rule(g, r, d).apply(c);
}

inline DivisorClass sigma_star_pencil(int k, const FormalClass& c) {
    return sigma_star_pencil_rule(k).apply(c);
}

}  // namespace spindiv
