#pragma once

// Sparse divisor classes: a moduli-space descriptor plus an association
// BasisSymbol -> Rational. Zero coefficients are never stored, so equality
// is plain coefficient-wise comparison of the maps. All values are immutable
// in spirit: operations return fresh classes and never share state.

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>

#include "spindiv/rational.hpp"
#include "spindiv/space.hpp"
#include "spindiv/symbol.hpp"

namespace spindiv {

class DivisorClass {
public:
    using CoeffMap = std::map<BasisSymbol, Rational>;

    explicit DivisorClass(ModuliSpace space) : space_(std::move(space)) {}

    static DivisorClass zero(ModuliSpace space) { return DivisorClass(std::move(space)); }

    static DivisorClass single(ModuliSpace space, const BasisSymbol& s, Rational c = Rational(1)) {
        DivisorClass out(std::move(space));
        out.add_term(s, c);
        return out;
    }

    static DivisorClass make(ModuliSpace space,
                             std::initializer_list<std::pair<BasisSymbol, Rational>> terms) {
        DivisorClass out(std::move(space));
        for (const auto& [s, c] : terms) out.add_term(s, c);
        return out;
    }

    const ModuliSpace& space() const { return space_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const BasisSymbol& s) const {
        const auto it = coeffs_.find(s);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    DivisorClass& add_term(const BasisSymbol& s, const Rational& c) {
        if (!space_.admissible(s)) {
            throw std::invalid_argument("symbol " + s.name() + " not admissible on " +
                                        space_.description());
        }
        if (c == 0) return *this;
        auto [it, inserted] = coeffs_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
        return *this;
    }

    DivisorClass& operator+=(const DivisorClass& other) {
        require_same_space(other);
        for (const auto& [s, c] : other.coeffs_) add_term(s, c);
        return *this;
    }

    DivisorClass& operator-=(const DivisorClass& other) {
        require_same_space(other);
        for (const auto& [s, c] : other.coeffs_) add_term(s, -c);
        return *this;
    }

    DivisorClass& operator*=(const Rational& t) {
        if (t == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [s, c] : coeffs_) c *= t;
        return *this;
    }

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(DivisorClass a, const Rational& t) { return a *= t; }
    friend DivisorClass operator*(const Rational& t, DivisorClass a) { return a *= t; }
    friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }

    // Coefficient-wise; parity is metadata and does not participate.
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same_space(const DivisorClass& other) const {
        if (!(space_ == other.space_)) {
            throw std::invalid_argument("incompatible spaces: " + space_.description() + " vs " +
                                        other.space_.description());
        }
    }

    ModuliSpace space_;
    CoeffMap coeffs_;
};

}  // namespace spindiv
