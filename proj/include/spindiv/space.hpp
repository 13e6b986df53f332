#pragma once

// Moduli-space descriptors. Each kind fixes the admissible basis-symbol set
// that classes on it may be supported on.

#include <stdexcept>
#include <string>
#include <vector>

#include "spindiv/symbol.hpp"

namespace spindiv {

enum class SpaceKind : std::uint8_t {
    SpinBar,       // compactified moduli of spin curves of genus g
    MgBar,         // moduli of stable curves of genus g
    Mg1Bar,        // moduli of 1-pointed stable curves of genus g
    M12Bar,        // moduli of 2-pointed genus-1 curves
    GrdStack,      // stack of linear series g^r_d over genus-g curves, rho = 0
    SpinGrdStack,  // the same stack over spin curves
};

// Component tag on the spin space. Documentation metadata only: the class
// formulas are identical over both components, so parity never participates
// in space equality.
enum class Parity : std::uint8_t { Either, Plus, Minus };

inline long brill_noether_rho(long g, long r, long d) {
    return g - (r + 1) * (g - d + r);
}

class ModuliSpace {
public:
    static ModuliSpace spin_bar(int g, Parity parity = Parity::Either) {
        check_genus(g);
        return {SpaceKind::SpinBar, g, 0, 0, parity};
    }
    static ModuliSpace mg_bar(int g) {
        check_genus(g);
        return {SpaceKind::MgBar, g, 0, 0, Parity::Either};
    }
    static ModuliSpace mg1_bar(int g) {
        check_genus(g);
        return {SpaceKind::Mg1Bar, g, 0, 0, Parity::Either};
    }
    static ModuliSpace m12_bar() { return {SpaceKind::M12Bar, 1, 0, 0, Parity::Either}; }
    static ModuliSpace grd_stack(int g, int r, int d) {
        check_stack_params(g, r, d);
        return {SpaceKind::GrdStack, g, r, d, Parity::Either};
    }
    static ModuliSpace spin_grd_stack(int g, int r, int d) {
        check_stack_params(g, r, d);
        return {SpaceKind::SpinGrdStack, g, r, d, Parity::Either};
    }

    SpaceKind kind() const { return kind_; }
    int g() const { return g_; }
    int r() const { return r_; }
    int d() const { return d_; }
    Parity parity() const { return parity_; }

    bool is_stack() const { return kind_ == SpaceKind::GrdStack || kind_ == SpaceKind::SpinGrdStack; }

    ModuliSpace with_parity(Parity p) const {
        ModuliSpace s = *this;
        s.parity_ = p;
        return s;
    }

    bool admissible(const BasisSymbol& s) const {
        switch (kind_) {
            case SpaceKind::SpinBar:
                switch (s.kind()) {
                    case SymbolKind::Lambda: return true;
                    case SymbolKind::Alpha:
                    case SymbolKind::Beta: return s.index() <= g_ / 2;
                    default: return false;
                }
            case SpaceKind::MgBar:
                switch (s.kind()) {
                    case SymbolKind::Lambda: return true;
                    case SymbolKind::Delta: return s.index() <= g_ / 2;
                    default: return false;
                }
            case SpaceKind::Mg1Bar:
                switch (s.kind()) {
                    case SymbolKind::Lambda:
                    case SymbolKind::Psi:
                    case SymbolKind::DeltaIrr: return true;
                    case SymbolKind::Delta: return s.index() >= 1 && s.index() <= g_ - 1;
                    default: return false;
                }
            case SpaceKind::M12Bar:
                switch (s.kind()) {
                    case SymbolKind::Lambda:
                    case SymbolKind::PsiX:
                    case SymbolKind::PsiQ:
                    case SymbolKind::DeltaIrr:
                    case SymbolKind::Delta0XQ: return true;
                    default: return false;
                }
            case SpaceKind::GrdStack:
            case SpaceKind::SpinGrdStack:
                switch (s.kind()) {
                    case SymbolKind::Lambda:
                    case SymbolKind::FrakA:
                    case SymbolKind::FrakB:
                    case SymbolKind::FrakC: return true;
                    case SymbolKind::Alpha:
                    case SymbolKind::Beta: return s.index() == 0;
                    // the rank-2 bundle H exists only in the pencil setting
                    case SymbolKind::C1H: return r_ == 1;
                    default: return false;
                }
        }
        throw std::logic_error("unreachable space kind");
    }

    std::vector<BasisSymbol> basis() const {
        std::vector<BasisSymbol> out;
        switch (kind_) {
            case SpaceKind::SpinBar:
                out.push_back(BasisSymbol::lambda());
                out.push_back(BasisSymbol::alpha(0));
                out.push_back(BasisSymbol::beta(0));
                for (int i = 1; i <= g_ / 2; ++i) out.push_back(BasisSymbol::alpha(i));
                for (int i = 1; i <= g_ / 2; ++i) out.push_back(BasisSymbol::beta(i));
                break;
            case SpaceKind::MgBar:
                out.push_back(BasisSymbol::lambda());
                for (int i = 0; i <= g_ / 2; ++i) out.push_back(BasisSymbol::delta(i));
                break;
            case SpaceKind::Mg1Bar:
                out.push_back(BasisSymbol::lambda());
                out.push_back(BasisSymbol::psi());
                out.push_back(BasisSymbol::delta_irr());
                for (int i = 1; i <= g_ - 1; ++i) out.push_back(BasisSymbol::delta(i));
                break;
            case SpaceKind::M12Bar:
                out = {BasisSymbol::lambda(), BasisSymbol::delta_irr(), BasisSymbol::psi_x(),
                       BasisSymbol::psi_q(), BasisSymbol::delta_0xq()};
                break;
            case SpaceKind::GrdStack:
            case SpaceKind::SpinGrdStack:
                out = {BasisSymbol::lambda(), BasisSymbol::alpha(0), BasisSymbol::beta(0),
                       BasisSymbol::frak_a(), BasisSymbol::frak_b(), BasisSymbol::frak_c()};
                if (r_ == 1) out.push_back(BasisSymbol::c1h());
                break;
        }
        return out;
    }

    std::string kind_name() const {
        switch (kind_) {
            case SpaceKind::SpinBar: return "SpinBar";
            case SpaceKind::MgBar: return "MgBar";
            case SpaceKind::Mg1Bar: return "Mg1Bar";
            case SpaceKind::M12Bar: return "M12Bar";
            case SpaceKind::GrdStack: return "GrdStack";
            case SpaceKind::SpinGrdStack: return "SpinGrdStack";
        }
        throw std::logic_error("unreachable space kind");
    }

    std::string description() const {
        if (kind_ == SpaceKind::M12Bar) return "M12Bar";
        std::string s = kind_name() + "(g=" + std::to_string(g_);
        if (is_stack()) s += ",r=" + std::to_string(r_) + ",d=" + std::to_string(d_);
        s += ")";
        return s;
    }

    friend bool operator==(const ModuliSpace& a, const ModuliSpace& b) {
        return a.kind_ == b.kind_ && a.g_ == b.g_ && a.r_ == b.r_ && a.d_ == b.d_;
    }

private:
    ModuliSpace(SpaceKind kind, int g, int r, int d, Parity parity)
        : kind_(kind), g_(g), r_(r), d_(d), parity_(parity) {}

    static void check_genus(int g) {
        if (g < 2) throw std::invalid_argument("genus must be at least 2");
    }
    static void check_stack_params(int g, int r, int d) {
        check_genus(g);
        if (r < 1 || d < 1) throw std::invalid_argument("stack parameters require r,d >= 1");
        if (brill_noether_rho(g, r, d) != 0) {
            throw std::invalid_argument("linear-series stack requires rho(g,r,d)=0, got rho(" +
                                        std::to_string(g) + "," + std::to_string(r) + "," +
                                        std::to_string(d) + ")=" +
                                        std::to_string(brill_noether_rho(g, r, d)));
        }
    }

    SpaceKind kind_;
    int g_;
    int r_, d_;  // meaningful for the stack kinds only
    Parity parity_;
};

}  // namespace spindiv
