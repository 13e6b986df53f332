#pragma once

// Exact arbitrary-precision arithmetic used throughout the library.
// Every coefficient in the system is a Rational; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spindiv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Stored in lowest terms with positive denominator (the backend reduces on
// construction; the sign lives in the numerator).
inline Rational rat(Integer num, Integer den = 1) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

// Wire format: "p" when integral, otherwise "p/q", lowest terms, no spaces.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(s)) {
            throw std::invalid_argument("malformed rational: '" + s + "'");
        }
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    return rat(Integer(num), Integer(den));
}

// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
    Integer p = Integer(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace spindiv
