#pragma once

// First Chern classes of the tautological bundles over the linear-series
// stacks, expressed in the formal basis {lambda, alpha_0, beta_0, frak_a,
// frak_b, frak_c, c1H}, together with the alternating-sum degeneracy classes
// built from them.

#include <optional>
#include <stdexcept>

#include "spindiv/combinat.hpp"
#include "spindiv/divisor_class.hpp"

namespace spindiv {

// A divisor class supported on one of the two linear-series stacks.
using FormalClass = DivisorClass;

// The unique r >= 1 with rho(g, r, d) = 0, when it exists. (As a polynomial
// in r the condition reads r^2 + r(g-d+1) - d = 0, which has exactly one
// positive root.)
inline std::optional<int> brill_noether_r(int g, int d) {
    for (int r = 1; r <= g; ++r) {
        if (rho(g, r, d) == 0) return r;
    }
    return std::nullopt;
}

inline ModuliSpace stack_for(int g, int d) {
    const auto r = brill_noether_r(g, d);
    if (!r) {
        throw std::invalid_argument("no r with rho(" + std::to_string(g) + ",r," +
                                    std::to_string(d) + ")=0");
    }
    return ModuliSpace::spin_grd_stack(g, *r, d);
}

// c1 of the pushforward of L (x) omega^l (x) P along the universal spin
// curve: lambda + (l^2/2 - 1/8) c + (1/2) a + l b - (1/4) beta_0.
inline FormalClass c1_a0(int g, int d, int l) {
    if (l < 0) throw std::invalid_argument("c1_a0 requires l >= 0");
    return DivisorClass::make(stack_for(g, d),
                              {{BasisSymbol::lambda(), 1},
                               {BasisSymbol::frak_c(), Rational(l) * l / 2 - Rational(1, 8)},
                               {BasisSymbol::frak_a(), Rational(1, 2)},
                               {BasisSymbol::frak_b(), l},
                               {BasisSymbol::beta(0), Rational(-1, 4)}});
}

inline Integer rank_a0(int g, int d, int l) { return Integer(l) * (2 * g - 2) + d; }

// Rank of the bundle with fibre H^0(X, wedge^a M (x) omega^{i-a} (x) L (x) P),
// where i = d/2: equal to 2(i-a) g binom(g-1, a).
inline Integer rank_a(int g, int d, int a) {
    if (d % 2 != 0) throw std::invalid_argument("rank_a requires even d");
    return 2 * Integer(d / 2 - a) * g * binom(g - 1, a);
}

// Pencil setting g = 2k-2, r = 1, d = k. c1 of the pushforward of
// L^j (x) P: lambda - (1/8) c + (j^2/2) a - (j/2) b - (1/4) beta_0.
inline FormalClass c1_b(int k, int j) {
    if (j < 1) throw std::invalid_argument("c1_b requires j >= 1");
    return DivisorClass::make(ModuliSpace::spin_grd_stack(2 * k - 2, 1, k),
                              {{BasisSymbol::lambda(), 1},
                               {BasisSymbol::frak_c(), Rational(-1, 8)},
                               {BasisSymbol::frak_a(), Rational(static_cast<long>(j) * j, 2)},
                               {BasisSymbol::frak_b(), Rational(-j, 2)},
                               {BasisSymbol::beta(0), Rational(-1, 4)}});
}

inline Integer rank_b(int k, int j) { return Integer(k) * j; }

// Substitutes c = 12 lambda - alpha_0 - 2 beta_0 (the degree-one Mumford
// relation pulled back to the stack), removing frak_c from the support.
inline FormalClass kappa1_substitute(const FormalClass& c) {
    const Rational t = c.coeff(BasisSymbol::frak_c());
    if (t == 0) return c;
    FormalClass out = c;
    out.add_term(BasisSymbol::frak_c(), -t);
    out.add_term(BasisSymbol::lambda(), 12 * t);
    out.add_term(BasisSymbol::alpha(0), -t);
    out.add_term(BasisSymbol::beta(0), -2 * t);
    return out;
}

// The degeneracy class of the evaluation between the i-th exterior power of
// the Hodge bundle tensored with the l = 0 bundle and its partner of equal
// rank, expanded through the exterior-power recursion:
//   sum_{l=0}^{i} (-1)^{l+1} [ (2l(g-1)+d) binom(g-1, i-l-1) lambda
//                              + binom(g, i-l) c1_a0(g, d, l) ],
// with binom(., -1) = 0 killing the bare lambda term at l = i.
inline FormalClass u_degeneracy_class(int g, int d) {
    if (d % 2 != 0) throw std::invalid_argument("i=d/2 must be integral");
    const int i = d / 2;
    if (i < 1) throw std::invalid_argument("u_degeneracy_class requires d >= 2");
    FormalClass out = DivisorClass::zero(stack_for(g, d));
    for (int l = 0; l <= i; ++l) {
        const Rational sign = (l % 2 == 0) ? Rational(-1) : Rational(1);
        const Rational hodge = Rational(2 * l * (g - 1) + d) * Rational(binom(g - 1, i - l - 1));
        out.add_term(BasisSymbol::lambda(), sign * hodge);
        out += sign * Rational(binom(g, i - l)) * c1_a0(g, d, l);
    }
    return out;
}

// Degeneracy class of the multiplication map H (x) B_1 -> B_2 in the pencil
// setting, with rank(H) = 2 and rank(B_1) = k:
//   c1(B_2) - k c1(H) - 2 c1(B_1),
// followed by the kappa_1 substitution. Equals
//   (1/2) lambda - (1/8) alpha_0 + a - k c1(H).
inline FormalClass theta_null_degeneracy_class(int k) {
    if (k < 3) throw std::invalid_argument("theta_null_degeneracy_class requires k >= 3");
    FormalClass out = c1_b(k, 2) - Rational(2) * c1_b(k, 1);
    out.add_term(BasisSymbol::c1h(), -k);
    return kappa1_substitute(out);
}

}  // namespace spindiv
