#pragma once

// Basis symbols: named generators of the Picard groups and formal-class
// spaces the calculator works over. A symbol is a kind plus, for the indexed
// families (alpha_i, beta_i, delta_i), a non-negative index.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace spindiv {

enum class SymbolKind : std::uint8_t {
    Lambda,    // Hodge class
    Psi,       // cotangent class at the marked point
    Alpha,     // spin boundary over delta_i, no exceptional component
    Beta,      // spin boundary over delta_i, exceptional component inserted
    DeltaIrr,  // irreducible boundary on the universal curve
    Delta,     // boundary classes delta_i
    PsiX,      // cotangent class at x on the two-pointed genus-1 space
    PsiQ,      // cotangent class at q on the two-pointed genus-1 space
    Delta0XQ,  // boundary where x and q collide
    FrakA,     // pushforward of c1(L)^2 along the universal curve
    FrakB,     // pushforward of c1(L).c1(omega)
    FrakC,     // pushforward of c1(omega)^2, i.e. kappa_1 pulled back
    C1H,       // first Chern class of the rank-2 pencil bundle
};

class BasisSymbol {
public:
    static BasisSymbol lambda() { return {SymbolKind::Lambda, 0}; }
    static BasisSymbol psi() { return {SymbolKind::Psi, 0}; }
    static BasisSymbol alpha(int i) { return {SymbolKind::Alpha, check_index(i)}; }
    static BasisSymbol beta(int i) { return {SymbolKind::Beta, check_index(i)}; }
    static BasisSymbol delta_irr() { return {SymbolKind::DeltaIrr, 0}; }
    static BasisSymbol delta(int i) { return {SymbolKind::Delta, check_index(i)}; }
    static BasisSymbol psi_x() { return {SymbolKind::PsiX, 0}; }
    static BasisSymbol psi_q() { return {SymbolKind::PsiQ, 0}; }
    static BasisSymbol delta_0xq() { return {SymbolKind::Delta0XQ, 0}; }
    static BasisSymbol frak_a() { return {SymbolKind::FrakA, 0}; }
    static BasisSymbol frak_b() { return {SymbolKind::FrakB, 0}; }
    static BasisSymbol frak_c() { return {SymbolKind::FrakC, 0}; }
    static BasisSymbol c1h() { return {SymbolKind::C1H, 0}; }

    SymbolKind kind() const { return kind_; }
    int index() const { return index_; }

    // Canonical position, shared by the sparse-map order, the JSON key order
    // and every renderer: lambda, psi, alpha_0, beta_0, alpha_i ascending,
    // beta_i ascending, delta_irr, delta_i ascending, psi_x, psi_q,
    // delta_0xq, then the formal stack classes.
    std::pair<int, int> order_key() const {
        switch (kind_) {
            case SymbolKind::Lambda: return {0, 0};
            case SymbolKind::Psi: return {1, 0};
            case SymbolKind::Alpha: return index_ == 0 ? std::pair{2, 0} : std::pair{4, index_};
            case SymbolKind::Beta: return index_ == 0 ? std::pair{3, 0} : std::pair{5, index_};
            case SymbolKind::DeltaIrr: return {6, 0};
            case SymbolKind::Delta: return {7, index_};
            case SymbolKind::PsiX: return {8, 0};
            case SymbolKind::PsiQ: return {9, 0};
            case SymbolKind::Delta0XQ: return {10, 0};
            case SymbolKind::FrakA: return {11, 0};
            case SymbolKind::FrakB: return {12, 0};
            case SymbolKind::FrakC: return {13, 0};
            case SymbolKind::C1H: return {14, 0};
        }
        throw std::logic_error("unreachable symbol kind");
    }

    std::string name() const {
        switch (kind_) {
            case SymbolKind::Lambda: return "lambda";
            case SymbolKind::Psi: return "psi";
            case SymbolKind::Alpha: return "alpha_" + std::to_string(index_);
            case SymbolKind::Beta: return "beta_" + std::to_string(index_);
            case SymbolKind::DeltaIrr: return "delta_irr";
            case SymbolKind::Delta: return "delta_" + std::to_string(index_);
            case SymbolKind::PsiX: return "psi_x";
            case SymbolKind::PsiQ: return "psi_q";
            case SymbolKind::Delta0XQ: return "delta_0xq";
            case SymbolKind::FrakA: return "frak_a";
            case SymbolKind::FrakB: return "frak_b";
            case SymbolKind::FrakC: return "frak_c";
            case SymbolKind::C1H: return "c1H";
        }
        throw std::logic_error("unreachable symbol kind");
    }

    std::string latex() const {
        switch (kind_) {
            case SymbolKind::Lambda: return "\\lambda";
            case SymbolKind::Psi: return "\\psi";
            case SymbolKind::Alpha: return "\\alpha_" + latex_subscript(index_);
            case SymbolKind::Beta: return "\\beta_" + latex_subscript(index_);
            case SymbolKind::DeltaIrr: return "\\delta_{\\mathrm{irr}}";
            case SymbolKind::Delta: return "\\delta_" + latex_subscript(index_);
            case SymbolKind::PsiX: return "\\psi_x";
            case SymbolKind::PsiQ: return "\\psi_q";
            case SymbolKind::Delta0XQ: return "\\delta_{0:xq}";
            case SymbolKind::FrakA: return "\\mathfrak{a}";
            case SymbolKind::FrakB: return "\\mathfrak{b}";
            case SymbolKind::FrakC: return "\\mathfrak{c}";
            case SymbolKind::C1H: return "c_1(\\mathcal{H})";
        }
        throw std::logic_error("unreachable symbol kind");
    }

    static std::optional<BasisSymbol> from_name(const std::string& s) {
        if (s == "lambda") return lambda();
        if (s == "psi") return psi();
        if (s == "delta_irr") return delta_irr();
        if (s == "psi_x") return psi_x();
        if (s == "psi_q") return psi_q();
        if (s == "delta_0xq") return delta_0xq();
        if (s == "frak_a") return frak_a();
        if (s == "frak_b") return frak_b();
        if (s == "frak_c") return frak_c();
        if (s == "c1H") return c1h();
        for (const auto& [prefix, kind] : {std::pair{std::string("alpha_"), SymbolKind::Alpha},
                                           std::pair{std::string("beta_"), SymbolKind::Beta},
                                           std::pair{std::string("delta_"), SymbolKind::Delta}}) {
            if (s.size() > prefix.size() && s.compare(0, prefix.size(), prefix) == 0) {
                const std::string digits = s.substr(prefix.size());
                if (digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
                if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
                if (digits.size() > 6) return std::nullopt;
                return BasisSymbol{kind, std::stoi(digits)};
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
        return a.kind_ == b.kind_ && a.index_ == b.index_;
    }
    friend std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
        return a.order_key() <=> b.order_key();
    }

private:
    BasisSymbol(SymbolKind kind, int index) : kind_(kind), index_(index) {}

    static int check_index(int i) {
        if (i < 0) throw std::invalid_argument("symbol index must be non-negative");
        return i;
    }

    static std::string latex_subscript(int i) {
        return i < 10 ? std::to_string(i) : "{" + std::to_string(i) + "}";
    }

    SymbolKind kind_;
    int index_;
};

}  // namespace spindiv
