#pragma once

// Plain-text and LaTeX renderers for divisor classes. Both are deterministic
// and follow the canonical symbol order. LaTeX output uses the classical
// symbol names so classes can be compared against the literature by eye.

#include <string>

#include "spindiv/divisor_class.hpp"

namespace spindiv {

// "451*lambda - (237/4)*alpha_0 - 106*beta_0"; the zero class prints "0".
inline std::string to_text(const DivisorClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, q] : c.coeffs()) {
        const bool negative = q < 0;
        const Rational mag = negative ? Rational(-q) : q;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) {
            const std::string t = to_string(mag);
            out += denominator(mag) == 1 ? t : "(" + t + ")";
            out += "*";
        }
        out += s.name();
    }
    return out;
}

// "7\lambda+14\psi-\delta_{\mathrm{irr}}-9\delta_1-5\delta_2"; fractions
// render as \frac{p}{q}; the zero class prints "0".
inline std::string to_latex(const DivisorClass& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, q] : c.coeffs()) {
        const bool negative = q < 0;
        const Rational mag = negative ? Rational(-q) : q;
        if (negative) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        first = false;
        if (mag != 1) {
            if (denominator(mag) == 1) {
                out += numerator(mag).str();
            } else {
                out += "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
            }
        }
        out += s.latex();
    }
    return out;
}

}  // namespace spindiv
