#pragma once

// Bit-exact JSON wire format for divisor classes:
//   {"space":{"kind":"Mg1Bar","g":3},
//    "coeffs":{"lambda":"7","psi":"14","delta_irr":"-1","delta_1":"-9","delta_2":"-5"}}
// Rationals are serialized as "p" or "p/q" strings in lowest terms; coeff
// keys appear in the canonical symbol order; zero coefficients are omitted.
// The stack kinds additionally carry "r" and "d"; a spin-space parity tag is
// emitted only when it is not "either".

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "spindiv/divisor_class.hpp"

namespace spindiv {

using ordered_json = nlohmann::ordered_json;

inline ordered_json space_to_json(const ModuliSpace& space) {
    ordered_json j;
    j["kind"] = space.kind_name();
    if (space.kind() != SpaceKind::M12Bar) j["g"] = space.g();
    if (space.is_stack()) {
        j["r"] = space.r();
        j["d"] = space.d();
    }
    if (space.parity() == Parity::Plus) j["parity"] = "plus";
    if (space.parity() == Parity::Minus) j["parity"] = "minus";
    return j;
}

inline ModuliSpace space_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw std::invalid_argument("space: missing kind");
    }
    const std::string kind = j["kind"].get<std::string>();
    Parity parity = Parity::Either;
    if (j.contains("parity")) {
        const std::string p = j["parity"].get<std::string>();
        if (p == "plus") parity = Parity::Plus;
        else if (p == "minus") parity = Parity::Minus;
        else throw std::invalid_argument("space: unknown parity '" + p + "'");
    }
    const auto genus = [&j]() {
        if (!j.contains("g") || !j["g"].is_number_integer()) {
            throw std::invalid_argument("space: missing genus");
        }
        return j["g"].get<int>();
    };
    if (kind == "M12Bar") return ModuliSpace::m12_bar();
    if (kind == "SpinBar") return ModuliSpace::spin_bar(genus(), parity);
    if (kind == "MgBar") return ModuliSpace::mg_bar(genus());
    if (kind == "Mg1Bar") return ModuliSpace::mg1_bar(genus());
    if (kind == "GrdStack" || kind == "SpinGrdStack") {
        if (!j.contains("r") || !j.contains("d")) {
            throw std::invalid_argument("space: stack kinds require r and d");
        }
        const int r = j["r"].get<int>();
        const int d = j["d"].get<int>();
        return kind == "GrdStack" ? ModuliSpace::grd_stack(genus(), r, d)
                                  : ModuliSpace::spin_grd_stack(genus(), r, d);
    }
    throw std::invalid_argument("space: unknown kind '" + kind + "'");
}

inline ordered_json class_to_json(const DivisorClass& c) {
    ordered_json j;
    j["space"] = space_to_json(c.space());
    ordered_json coeffs = ordered_json::object();
    for (const auto& [s, q] : c.coeffs()) coeffs[s.name()] = to_string(q);
    j["coeffs"] = coeffs;
    return j;
}

inline DivisorClass class_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("coeffs")) {
        throw std::invalid_argument("class: expected object with space and coeffs");
    }
    DivisorClass out = DivisorClass::zero(space_from_json(j["space"]));
    const auto& coeffs = j["coeffs"];
    if (!coeffs.is_object()) throw std::invalid_argument("class: coeffs must be an object");
    for (const auto& [key, value] : coeffs.items()) {
        const auto sym = BasisSymbol::from_name(key);
        if (!sym) throw std::invalid_argument("class: unknown symbol '" + key + "'");
        if (!value.is_string()) throw std::invalid_argument("class: coefficient must be a string");
        out.add_term(*sym, parse_rational(value.get<std::string>()));
    }
    return out;
}

inline std::string emit_json(const DivisorClass& c) { return class_to_json(c).dump(); }

inline DivisorClass parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return class_from_json(j);
}

}  // namespace spindiv
