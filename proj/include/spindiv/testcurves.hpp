#pragma once

// Test curves as linear functionals on Picard groups, the exact linear
// solver, and the derivation of the divisor of points of odd
// theta-characteristics from test-curve intersections.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spindiv/combinat.hpp"
#include "spindiv/divisor_class.hpp"
#include "spindiv/pullback.hpp"

namespace spindiv {

// A one-parameter family in a moduli space, recorded through its
// intersection numbers with the basis classes (absent symbols pair to zero).
// Classes on the two-pointed genus-1 space are reduced to {psi_x, delta_0xq}
// before pairing, so the stored numbers live on that basis.
struct TestCurve {
    std::string name;
    ModuliSpace space;
    std::map<BasisSymbol, Rational> intersections;

    Rational pair_symbol(const BasisSymbol& s) const {
        const auto it = intersections.find(s);
        return it == intersections.end() ? Rational(0) : it->second;
    }

    Rational evaluate(const DivisorClass& c) const {
        if (!(c.space() == space)) {
            throw std::invalid_argument("test curve " + name + " lives on " + space.description() +
                                        ", class on " + c.space().description());
        }
        const DivisorClass reduced =
            space.kind() == SpaceKind::M12Bar ? m12_reduce(c) : c;
        Rational out = 0;
        for (const auto& [s, coeff] : reduced.coeffs()) out += coeff * pair_symbol(s);
        return out;
    }
};

// F_{g-i}: glue a moving point of a genus-i curve to a fixed pointed curve
// of genus g-i. Meets only delta_{g-i}, with self-intersection 2-2i.
inline TestCurve curve_F(int g, int i) {
    if (i < 2 || i > g - 1) throw std::invalid_argument("curve_F requires 2 <= i <= g-1");
    TestCurve curve{"F_" + std::to_string(g - i), ModuliSpace::mg1_bar(g), {}};
    curve.intersections.emplace(BasisSymbol::delta(g - i), 2 - 2 * i);
    return curve;
}

// The fibre of the universal curve over a fixed general curve: pairs to
// deg(omega) = 2g-2 against psi and to zero against everything else.
inline TestCurve curve_fiber(int g) {
    TestCurve curve{"fiber", ModuliSpace::mg1_bar(g), {}};
    curve.intersections.emplace(BasisSymbol::psi(), 2 * g - 2);
    return curve;
}

// E_1: {[E, x, q] : x moving} for a fixed general pointed elliptic curve.
inline TestCurve curve_E1() {
    TestCurve curve{"E_1", ModuliSpace::m12_bar(), {}};
    curve.intersections.emplace(BasisSymbol::psi_x(), 1);
    curve.intersections.emplace(BasisSymbol::delta_0xq(), 1);
    return curve;
}

// R: a pencil of plane cubics glued to a fixed rational 3-pointed curve
// carrying x and q. Only lambda = 1 and delta_irr = 12 are classical; on the
// reduced basis the unique compatible assignment is psi_x = 0,
// delta_0xq = -1.
inline TestCurve curve_R() {
    TestCurve curve{"R", ModuliSpace::m12_bar(), {}};
    curve.intersections.emplace(BasisSymbol::delta_0xq(), -1);
    return curve;
}

// An expansion a_0 s_0 + a_1 s_1 + ... with named unknown coefficients and
// declared signs, e.g. a lambda + b psi - b_irr delta_irr - sum b_i delta_i.
struct UnknownTerm {
    std::string name;
    int sign;  // +1 or -1
    BasisSymbol symbol;
};

struct UnknownClass {
    ModuliSpace space;
    std::vector<UnknownTerm> terms;

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(terms.size());
        for (const auto& t : terms) out.push_back(t.name);
        return out;
    }

    DivisorClass realize(const std::vector<Rational>& values) const {
        if (values.size() != terms.size()) {
            throw std::invalid_argument("unknown/value count mismatch");
        }
        DivisorClass out = DivisorClass::zero(space);
        for (std::size_t j = 0; j < terms.size(); ++j) {
            out.add_term(terms[j].symbol, terms[j].sign * values[j]);
        }
        return out;
    }
};

class UnderdeterminedSystem : public std::runtime_error {
public:
    UnderdeterminedSystem(std::size_t nullity)
        : std::runtime_error("underdetermined system: null-space dimension " +
                             std::to_string(nullity)),
          nullity_(nullity) {}
    std::size_t nullity() const { return nullity_; }

private:
    std::size_t nullity_;
};

class InconsistentSystem : public std::runtime_error {
public:
    explicit InconsistentSystem(const std::string& label)
        : std::runtime_error("inconsistent system: constraint '" + label + "' violated"),
          label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// Exact linear system over the rationals. Requires a unique solution;
// consistent overdetermined systems are fine, rank deficiency and
// contradictions are reported through the exceptions above.
class LinearSystem {
public:
    explicit LinearSystem(std::vector<std::string> unknowns) : unknowns_(std::move(unknowns)) {
        if (unknowns_.empty()) throw std::invalid_argument("system with no unknowns");
    }

    std::size_t unknown_count() const { return unknowns_.size(); }
    const std::vector<std::string>& unknowns() const { return unknowns_; }

    void add_equation(std::string label, std::vector<Rational> coeffs, Rational rhs) {
        if (coeffs.size() != unknowns_.size()) {
            throw std::invalid_argument("equation arity mismatch");
        }
        rows_.push_back({std::move(label), std::move(coeffs), std::move(rhs)});
    }

    void add_assignment(const std::string& unknown, Rational value, std::string label = "") {
        std::vector<Rational> coeffs(unknowns_.size(), Rational(0));
        coeffs[index_of(unknown)] = 1;
        if (label.empty()) label = unknown + " = " + spindiv::to_string(value);
        add_equation(std::move(label), std::move(coeffs), std::move(value));
    }

    std::size_t index_of(const std::string& unknown) const {
        for (std::size_t j = 0; j < unknowns_.size(); ++j) {
            if (unknowns_[j] == unknown) return j;
        }
        throw std::invalid_argument("unknown coefficient '" + unknown + "'");
    }

    // Gauss-Jordan elimination with exact pivots.
    std::vector<Rational> solve() const {
        const std::size_t n = unknowns_.size();
        std::vector<Row> rows = rows_;
        std::vector<std::size_t> pivot_col;

        std::size_t top = 0;
        for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
            std::size_t pivot = top;
            while (pivot < rows.size() && rows[pivot].coeffs[col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[top], rows[pivot]);

            const Rational inv = Rational(1) / rows[top].coeffs[col];
            for (auto& c : rows[top].coeffs) c *= inv;
            rows[top].rhs *= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == top || rows[i].coeffs[col] == 0) continue;
                const Rational factor = rows[i].coeffs[col];
                for (std::size_t j = 0; j < n; ++j) {
                    rows[i].coeffs[j] -= factor * rows[top].coeffs[j];
                }
                rows[i].rhs -= factor * rows[top].rhs;
            }
            pivot_col.push_back(col);
            ++top;
        }

        for (std::size_t i = top; i < rows.size(); ++i) {
            if (rows[i].rhs != 0) throw InconsistentSystem(rows[i].label);
        }
        if (pivot_col.size() < n) throw UnderdeterminedSystem(n - pivot_col.size());

        std::vector<Rational> solution(n, Rational(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i) solution[pivot_col[i]] = rows[i].rhs;

        // exactness check: every original constraint is reproduced
        for (const auto& row : rows_) {
            Rational acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += row.coeffs[j] * solution[j];
            if (acc != row.rhs) throw InconsistentSystem(row.label);
        }
        return solution;
    }

private:
    struct Row {
        std::string label;
        std::vector<Rational> coeffs;
        Rational rhs;
    };

    std::vector<std::string> unknowns_;
    std::vector<Row> rows_;
};

// Equation row from pairing a test curve against an unknown class on the
// same space: sum_j sign_j (curve . symbol_j) x_j = rhs.
inline void add_curve_equation(LinearSystem& sys, const UnknownClass& unknown,
                               const TestCurve& curve, Rational rhs) {
    std::vector<Rational> coeffs;
    coeffs.reserve(unknown.terms.size());
    for (const auto& t : unknown.terms) coeffs.push_back(t.sign * curve.pair_symbol(t.symbol));
    sys.add_equation(curve.name + " pairing", std::move(coeffs), std::move(rhs));
}

// The divisor of 2-torsion differences {[E, x, q] : 2x = 2q}, solved as
// alpha psi_x - beta delta_0xq from its intersections with E_1 (three
// nonzero 2-torsion points) and the disjoint pencil R.
inline DivisorClass t2_class() {
    const UnknownClass unknown{ModuliSpace::m12_bar(),
                               {{"alpha", +1, BasisSymbol::psi_x()},
                                {"beta", -1, BasisSymbol::delta_0xq()}}};
    LinearSystem sys(unknown.names());
    add_curve_equation(sys, unknown, curve_E1(), 3);
    add_curve_equation(sys, unknown, curve_R(), 0);
    return unknown.realize(sys.solve());
}

// Derives the class a lambda + b psi - b_irr delta_irr - sum b_i delta_i of
// the locus of points lying in the support of an odd theta-characteristic.
// Inputs, all entering one uniform linear system:
//   - gluing families through boundary divisors fix b_{g-i} = N_i^- N_{g-i}^+ / 2
//     for 2 <= i <= g-1;
//   - the fibre class of the universal spin curve gives a = N_g^-/4,
//     b = N_g^-/2;
//   - pulling the unknown class back through nu and pairing with E_1 and R
//     must reproduce N_{g-1}^- times the 2-torsion divisor.
// In genus 2 the boundary range above is empty and delta_1 = delta_{g-1};
// the count relation b_1 = (3/2) N_1^- closes the system.
inline DivisorClass theta_pointed_pipeline(int g) {
    if (g < 2) throw std::invalid_argument("theta_pointed_pipeline requires g >= 2");
    const ModuliSpace space = ModuliSpace::mg1_bar(g);

    UnknownClass unknown{space, {}};
    unknown.terms.push_back({"a", +1, BasisSymbol::lambda()});
    unknown.terms.push_back({"b", +1, BasisSymbol::psi()});
    unknown.terms.push_back({"b_irr", -1, BasisSymbol::delta_irr()});
    for (int i = 1; i <= g - 1; ++i) {
        unknown.terms.push_back({"b_" + std::to_string(i), -1, BasisSymbol::delta(i)});
    }

    LinearSystem sys(unknown.names());
    const Integer n_minus_g = theta_counts(g).odd;
    sys.add_assignment("a", Rational(n_minus_g) / 4, "a = N_g^-/4");
    sys.add_assignment("b", Rational(n_minus_g) / 2, "b = N_g^-/2");
    for (int i = 2; i <= g - 1; ++i) {
        const Integer prod = theta_counts(i).odd * theta_counts(g - i).even;
        sys.add_assignment("b_" + std::to_string(g - i), Rational(prod) / 2,
                           "b_" + std::to_string(g - i) + " = N_i^- N_{g-i}^+/2");
    }
    if (g == 2) {
        sys.add_assignment("b_1", Rational(3, 2) * Rational(theta_counts(1).odd),
                           "b_1 = (3/2) N_1^-");
    }

    // nu^* equations against E_1 and R
    const DivisorClass t2 = t2_class();
    const Rational n_minus_tail = Rational(theta_counts(g - 1).odd);
    for (const TestCurve& curve : {curve_E1(), curve_R()}) {
        std::vector<Rational> coeffs;
        coeffs.reserve(unknown.terms.size());
        for (const auto& t : unknown.terms) {
            coeffs.push_back(t.sign * curve.evaluate(nu_symbol_action(g, t.symbol)));
        }
        sys.add_equation(curve.name + " . nu^*", std::move(coeffs),
                         n_minus_tail * curve.evaluate(t2));
    }

    return unknown.realize(sys.solve());
}

}  // namespace spindiv
