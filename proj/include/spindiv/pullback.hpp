#pragma once

// Pullback homomorphisms between the Picard groups, plus the relation
// normalizations they interact with. All maps are linear and are applied
// coefficient by coefficient through their action on basis symbols.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "spindiv/divisor_class.hpp"

namespace spindiv {

struct PullbackMap {
    std::string name;
    ModuliSpace source;
    ModuliSpace target;
    std::map<BasisSymbol, DivisorClass> action;  // total on the source basis

    DivisorClass apply(const DivisorClass& c) const {
        if (!(c.space() == source)) {
            throw std::invalid_argument(name + " expects a class on " + source.description() +
                                        ", got " + c.space().description());
        }
        DivisorClass out = DivisorClass::zero(target);
        for (const auto& [s, coeff] : c.coeffs()) {
            const auto it = action.find(s);
            if (it == action.end()) {
                throw std::invalid_argument(name + " has no action on symbol " + s.name());
            }
            out += coeff * it->second;
        }
        return out;
    }
};

// pi : spin moduli -> moduli of curves, the covering forgetting the spin
// structure. lambda -> lambda, delta_0 -> alpha_0 + 2 beta_0 (the exceptional
// branch is simply ramified), delta_i -> alpha_i + beta_i.
inline PullbackMap pi_pullback(int g) {
    const ModuliSpace src = ModuliSpace::mg_bar(g);
    const ModuliSpace tgt = ModuliSpace::spin_bar(g);
    PullbackMap map{"pi^*", src, tgt, {}};
    map.action.emplace(BasisSymbol::lambda(),
                       DivisorClass::single(tgt, BasisSymbol::lambda()));
    map.action.emplace(BasisSymbol::delta(0),
                       DivisorClass::make(tgt, {{BasisSymbol::alpha(0), 1}, {BasisSymbol::beta(0), 2}}));
    for (int i = 1; i <= g / 2; ++i) {
        map.action.emplace(BasisSymbol::delta(i),
                           DivisorClass::make(tgt, {{BasisSymbol::alpha(i), 1}, {BasisSymbol::beta(i), 1}}));
    }
    return map;
}

// p : universal curve -> moduli of curves, forgetting the marked point.
// lambda -> lambda, delta_0 -> delta_irr, delta_i -> delta_i + delta_{g-i};
// the self-paired middle index of even genus maps to itself once.
inline PullbackMap p_pullback(int g) {
    const ModuliSpace src = ModuliSpace::mg_bar(g);
    const ModuliSpace tgt = ModuliSpace::mg1_bar(g);
    PullbackMap map{"p^*", src, tgt, {}};
    map.action.emplace(BasisSymbol::lambda(),
                       DivisorClass::single(tgt, BasisSymbol::lambda()));
    map.action.emplace(BasisSymbol::delta(0),
                       DivisorClass::single(tgt, BasisSymbol::delta_irr()));
    for (int i = 1; i <= g / 2; ++i) {
        DivisorClass img = DivisorClass::single(tgt, BasisSymbol::delta(i));
        if (i != g - i) img.add_term(BasisSymbol::delta(g - i), 1);
        map.action.emplace(BasisSymbol::delta(i), img);
    }
    return map;
}

// Rewrites a class on the two-pointed genus-1 space into the rank-2 basis
// {psi_x, delta_0xq}, eliminating lambda, psi_q and delta_irr through
//   psi_q = psi_x,  lambda = psi_x - delta_0xq,  delta_irr = 12(psi_x - delta_0xq).
inline DivisorClass m12_reduce(const DivisorClass& c) {
    if (c.space().kind() != SpaceKind::M12Bar) {
        throw std::invalid_argument("m12_reduce expects a class on M12Bar, got " +
                                    c.space().description());
    }
    DivisorClass out = DivisorClass::zero(c.space());
    for (const auto& [s, coeff] : c.coeffs()) {
        switch (s.kind()) {
            case SymbolKind::PsiX:
                out.add_term(BasisSymbol::psi_x(), coeff);
                break;
            case SymbolKind::PsiQ:
                out.add_term(BasisSymbol::psi_x(), coeff);
                break;
            case SymbolKind::Delta0XQ:
                out.add_term(BasisSymbol::delta_0xq(), coeff);
                break;
            case SymbolKind::Lambda:
                out.add_term(BasisSymbol::psi_x(), coeff);
                out.add_term(BasisSymbol::delta_0xq(), -coeff);
                break;
            case SymbolKind::DeltaIrr:
                out.add_term(BasisSymbol::psi_x(), 12 * coeff);
                out.add_term(BasisSymbol::delta_0xq(), -12 * coeff);
                break;
            default:
                throw std::logic_error("inadmissible symbol on M12Bar");
        }
    }
    return out;
}

// Action of nu^* on a single basis symbol of the 1-pointed space, already
// reduced to {psi_x, delta_0xq}. The gluing family varies only the elliptic
// tail over a fixed generic curve, so delta_i for 2 <= i <= g-2 pulls back to
// zero. Defined for g >= 2; in genus 2 the classes delta_1 and delta_{g-1}
// coincide and the action is the sum of the two rules.
inline DivisorClass nu_symbol_action(int g, const BasisSymbol& s) {
    if (g < 2) throw std::invalid_argument("nu^* requires g >= 2");
    const ModuliSpace tgt = ModuliSpace::m12_bar();
    DivisorClass out = DivisorClass::zero(tgt);
    switch (s.kind()) {
        case SymbolKind::Lambda:
            out.add_term(BasisSymbol::psi_x(), 1);
            out.add_term(BasisSymbol::delta_0xq(), -1);
            break;
        case SymbolKind::Psi:
            out.add_term(BasisSymbol::psi_x(), 1);
            break;
        case SymbolKind::DeltaIrr:
            out.add_term(BasisSymbol::psi_x(), 12);
            out.add_term(BasisSymbol::delta_0xq(), -12);
            break;
        case SymbolKind::Delta:
            if (s.index() == 1) out.add_term(BasisSymbol::psi_x(), -1);
            if (s.index() == g - 1) out.add_term(BasisSymbol::delta_0xq(), 1);
            break;
        default:
            throw std::invalid_argument("nu^* has no action on symbol " + s.name());
    }
    return out;
}

// nu : two-pointed genus-1 space -> universal curve, gluing the tail to a
// fixed general pointed curve of genus g-1. Output is reduced to the basis
// {psi_x, delta_0xq}.
inline PullbackMap nu_pullback(int g) {
    if (g < 3) throw std::invalid_argument("nu^* pullback map requires g >= 3");
    const ModuliSpace src = ModuliSpace::mg1_bar(g);
    PullbackMap map{"nu^*", src, ModuliSpace::m12_bar(), {}};
    for (const auto& s : src.basis()) map.action.emplace(s, nu_symbol_action(g, s));
    return map;
}

inline DivisorClass pullback_pi(const DivisorClass& c) {
    if (c.space().kind() != SpaceKind::MgBar) {
        throw std::invalid_argument("pi^* expects a class on MgBar, got " + c.space().description());
    }
    return pi_pullback(c.space().g()).apply(c);
}

inline DivisorClass pullback_p(const DivisorClass& c) {
    if (c.space().kind() != SpaceKind::MgBar) {
        throw std::invalid_argument("p^* expects a class on MgBar, got " + c.space().description());
    }
    return p_pullback(c.space().g()).apply(c);
}

inline DivisorClass pullback_nu(const DivisorClass& c) {
    if (c.space().kind() != SpaceKind::Mg1Bar) {
        throw std::invalid_argument("nu^* expects a class on Mg1Bar, got " + c.space().description());
    }
    return nu_pullback(c.space().g()).apply(c);
}

// Eliminates delta_irr on the genus-2 universal curve through the boundary
// expression of lambda: delta_irr = 10 lambda - 2 delta_1.
inline DivisorClass mumford_normalize_g2(const DivisorClass& c) {
    if (c.space().kind() != SpaceKind::Mg1Bar || c.space().g() != 2) {
        throw std::invalid_argument("relation only holds in genus 2");
    }
    const Rational t = c.coeff(BasisSymbol::delta_irr());
    if (t == 0) return c;
    DivisorClass out = c;
    out.add_term(BasisSymbol::delta_irr(), -t);
    out.add_term(BasisSymbol::lambda(), 10 * t);
    out.add_term(BasisSymbol::delta(1), -2 * t);
    return out;
}

// The unique preimage under p^* when one exists: requires a vanishing psi
// coefficient and equal coefficients on each pair {delta_i, delta_{g-i}}.
inline std::optional<DivisorClass> in_p_image(const DivisorClass& c) {
    if (c.space().kind() != SpaceKind::Mg1Bar) {
        throw std::invalid_argument("in_p_image expects a class on Mg1Bar, got " +
                                    c.space().description());
    }
    const int g = c.space().g();
    if (c.coeff(BasisSymbol::psi()) != 0) return std::nullopt;
    for (int i = 1; i < g - i; ++i) {
        if (c.coeff(BasisSymbol::delta(i)) != c.coeff(BasisSymbol::delta(g - i))) return std::nullopt;
    }
    DivisorClass out = DivisorClass::zero(ModuliSpace::mg_bar(g));
    out.add_term(BasisSymbol::lambda(), c.coeff(BasisSymbol::lambda()));
    out.add_term(BasisSymbol::delta(0), c.coeff(BasisSymbol::delta_irr()));
    for (int i = 1; i <= g / 2; ++i) out.add_term(BasisSymbol::delta(i), c.coeff(BasisSymbol::delta(i)));
    return out;
}

}  // namespace spindiv
