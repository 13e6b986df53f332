#pragma once

// Top-level divisor classes: the spin Brill-Noether divisors U^r_{g,d}, the
// theta-null divisor through its two independent computations, the divisor
// of points of odd theta-characteristics on the universal curve, the
// Weierstrass divisor, and the printed polynomial families used for
// cross-checking.

#include <optional>
#include <stdexcept>
#include <vector>

#include "spindiv/pushforward.hpp"
#include "spindiv/pullback.hpp"
#include "spindiv/testcurves.hpp"

namespace spindiv {

struct UClassResult {
    int r = 0;
    int s = 0;
    int g = 0;  // s(r+1)
    int d = 0;  // r(s+1), even by precondition
    int i = 0;  // d/2
    Integer degree;  // number of g^r_d's on a general curve
    DivisorClass cls = DivisorClass::zero(ModuliSpace::spin_bar(2));
};

// The divisor of spin curves [C, eta] carrying a series L in W^r_d(C) with
// eta (x) L^-1 in the difference variety C_{g-i-1} - C_i: push the
// degeneracy class of the exterior-power evaluation down to the spin space.
inline UClassResult u_class(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("u_class requires r,s >= 1");
    const int d = r * (s + 1);
    if (d % 2 != 0) throw std::invalid_argument("d=r(s+1) must be even");
    const int g = s * (r + 1);
    UClassResult out;
    out.r = r;
    out.s = s;
    out.g = g;
    out.d = d;
    out.i = d / 2;
    out.degree = linear_series_count(g, r, d);
    out.cls = sigma_star(g, r, d, u_degeneracy_class(g, d));
    return out;
}

enum class ThetaNullRoute { Engine, Hurwitz };

struct ThetaNullResult {
    ThetaNullRoute route = ThetaNullRoute::Engine;
    int g = 0;
    int k = 0;            // pencil degree, Hurwitz route only
    Integer degree;  // covering degree N entering the route
    // the class before dividing out degree and multiplicity
    DivisorClass pushed = DivisorClass::zero(ModuliSpace::spin_bar(2));
    DivisorClass cls = DivisorClass::zero(ModuliSpace::spin_bar(2));
};

// The divisor of even spin curves with a non-vanishing theta-null,
// (1/4) lambda - (1/16) alpha_0 modulo higher boundary. Route Engine: the
// canonical-series case of u_class, divided by its multiplicity 2. Route
// Hurwitz (even genus g = 2k-2): the multiplication-map degeneracy class
// pushed from the pencil stack, divided by 2N.
inline ThetaNullResult theta_null_class(int g, ThetaNullRoute route = ThetaNullRoute::Engine) {
    ThetaNullResult out;
    out.route = route;
    out.g = g;
    if (route == ThetaNullRoute::Engine) {
        if (g < 3) throw std::invalid_argument("engine route requires g >= 3");
        UClassResult u = u_class(g - 1, 1);
        out.degree = u.degree;
        out.pushed = u.cls;
        out.cls = u.cls * Rational(1, 2);
    } else {
        if (g % 2 != 0) throw std::invalid_argument("hurwitz route requires even genus g=2k-2");
        if (g < 4) throw std::invalid_argument("hurwitz route requires g >= 4");
        const int k = (g + 2) / 2;
        out.k = k;
        out.degree = catalan_pencils(k);
        out.pushed = sigma_star_pencil(k, theta_null_degeneracy_class(k));
        const Integer two_n = 2 * out.degree;
        out.cls = out.pushed * Rational(Integer(1), two_n);
    }
    // the divisor lives on the even component
    DivisorClass tagged = DivisorClass::zero(
        ModuliSpace::spin_bar(out.cls.space().g(), Parity::Plus));
    for (const auto& [sym, c] : out.cls.coeffs()) tagged.add_term(sym, c);
    out.cls = tagged;
    return out;
}

enum class FamilyName { Thm11, GeneralSOdd, R2 };

struct FamilyTriple {
    Rational lambda;
    Rational alpha0;
    Rational beta0;
    std::optional<Rational> constant;  // printed leading factor, where displayed
};

namespace detail {

inline Rational poly_eval(const std::vector<long>& coeffs, long x) {
    // coeffs in decreasing degree
    Rational acc = 0;
    for (long c : coeffs) acc = acc * x + c;
    return acc;
}

}  // namespace detail

// The printed coefficient polynomials of the three displayed class families.
//   Thm11 (r=1, g=4a+2):             params (a)
//   GeneralSOdd (s=2a+1, any r):     params (r, a)
//   R2 (r=2, g=3s):                  params (s)
inline FamilyTriple eval_family_thm11(long a) {
    if (a < 1) throw std::invalid_argument("thm11 family requires a >= 1");
    FamilyTriple out;
    out.lambda = detail::poly_eval({192, 736, 692, 184}, a);
    out.alpha0 = detail::poly_eval({32, 104, 82, 19}, a);
    out.beta0 = detail::poly_eval({64, 176, 148, 36}, a);
    out.constant = Rational(binom(4 * a, a) * binom(4 * a + 2, 2 * a) * (a + 2)) /
                   Rational(8 * (2 * a + 1) * (4 * a + 1));
    return out;
}

inline FamilyTriple eval_family_general_s_odd(long r, long a) {
    if (r < 1 || a < 1) throw std::invalid_argument("general_s_odd family requires r,a >= 1");
    const Rational R(r), A(a);
    const Rational r2 = R * R, r3 = r2 * R, r4 = r3 * R;
    const Rational a2 = A * A, a3 = a2 * A, a4 = a3 * A;
    FamilyTriple out;
    out.lambda = 12 * r3 - 12 * r2 - 48 * a2 + 96 * a3 + 48 * r4 * A + 2208 * r3 * a3 +
                 1968 * r3 * a2 + 3936 * r2 * a3 + 2208 * R * a3 + 552 * r3 * A + 3984 * r2 * a2 +
                 1080 * r2 * A + 2160 * R * a2 + 528 * R * A + 192 * r4 * a4 + 384 * r4 * a3 +
                 768 * r3 * a4 + 960 * r2 * a4 + 240 * r4 * a2 + 384 * R * a4;
    out.alpha0 = 220 * R * a2 + 536 * r2 * a3 + 32 * r4 * a4 + 36 * R * A + 24 * a3 +
                 328 * r3 * a3 + 296 * R * a3 + 8 * r4 * A + 64 * r4 * a3 + 3 * r3 + 468 * r2 * a2 +
                 128 * r3 * a4 + 74 * r3 * A + 40 * r4 * a2 + 160 * r2 * a4 + 64 * R * a4 +
                 268 * r3 * a2 + 110 * r2 * A - 3 * r2 - 12 * a2;
    out.beta0 = 96 * R * A + 64 * r4 * a4 + 16 * r4 * A + 416 * R * a2 + 928 * r2 * a3 +
                448 * R * a3 + 208 * r2 * A + 608 * r3 * a3 + 256 * r3 * a4 + 112 * r3 * A +
                80 * r4 * a2 + 320 * r2 * a4 + 128 * R * a4 + 464 * r3 * a2 + 128 * r4 * a3 +
                816 * r2 * a2;
    return out;
}

inline FamilyTriple eval_family_r2(long s) {
    if (s < 1) throw std::invalid_argument("r2 family requires s >= 1");
    const long g = 3 * s;
    FamilyTriple out;
    out.lambda = 4 * detail::poly_eval({216, 513, -348, -387, 18}, s);
    out.alpha0 = detail::poly_eval({144, 225, -268, -99, 10}, s);
    out.beta0 = detail::poly_eval({288, 288, 320, 0, 32}, s);
    out.constant = Rational(binom(g, s + 2) * multinomial(g, {s, s, s})) /
                   Rational(Integer(24) * g * (g - 1) * (g - 1) * (g - 2) * (s + 1) * (s + 1));
    return out;
}

// Dispatching form. Thm11 takes (a), R2 takes (s), GeneralSOdd takes (r, a).
inline FamilyTriple eval_family(FamilyName name, long p0, long p1 = 0) {
    switch (name) {
        case FamilyName::Thm11: return eval_family_thm11(p0);
        case FamilyName::GeneralSOdd: return eval_family_general_s_odd(p0, p1);
        case FamilyName::R2: return eval_family_r2(p0);
    }
    throw std::logic_error("unreachable family name");
}

// The class of the locus of pointed curves whose marked point lies in the
// support of an odd theta-characteristic, derived (not hardcoded) through
// the test-curve system.
inline DivisorClass theta_pointed_class(int g) { return theta_pointed_pipeline(g); }

// Weierstrass-point divisor on the universal curve:
//   -lambda + binom(g+1, 2) psi - sum_i binom(g-i+1, 2) delta_i.
inline DivisorClass weierstrass_class(int g) {
    if (g < 2) throw std::invalid_argument("weierstrass_class requires g >= 2");
    DivisorClass out = DivisorClass::zero(ModuliSpace::mg1_bar(g));
    out.add_term(BasisSymbol::lambda(), -1);
    out.add_term(BasisSymbol::psi(), Rational(binom(g + 1, 2)));
    for (int i = 1; i <= g - 1; ++i) {
        out.add_term(BasisSymbol::delta(i), -Rational(binom(g - i + 1, 2)));
    }
    return out;
}

struct G3Decomposition {
    DivisorClass residual = DivisorClass::zero(ModuliSpace::mg1_bar(3));
    std::optional<DivisorClass> preimage;
    bool passes = false;
};

// In genus 3, subtracting twice the Weierstrass divisor and twice psi from
// the odd theta-characteristic divisor must land in the image of p^*.
inline G3Decomposition g3_decomposition_check() {
    G3Decomposition out;
    DivisorClass residual = theta_pointed_class(3) - Rational(2) * weierstrass_class(3);
    residual.add_term(BasisSymbol::psi(), -2);
    out.residual = residual;
    out.preimage = in_p_image(residual);
    out.passes = out.preimage.has_value();
    return out;
}

}  // namespace spindiv
