#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "mnforge/errors.hpp"

namespace mnforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string to_string(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

inline Int parse_integer(std::string_view text) {
    if (text.empty()) throw BadArguments("empty integer literal");
    std::size_t pos = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw BadArguments("malformed integer literal '" + std::string(text) + "'");
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw BadArguments("malformed integer literal '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return neg ? Int(-value) : value;
}

inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Int num = parse_integer(text.substr(0, slash));
    Int den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw BadArguments("zero denominator in '" + std::string(text) + "'");
    return Rational(num) / Rational(den);
}

inline Rational rational_pow(const Rational& base, const Int& exponent) {
    if (exponent == 0) return Rational(1);
    Rational b = base;
    Int e = exponent;
    if (e < 0) {
        if (b == 0) throw ZeroInversion("zero raised to a negative power");
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if ((e & 1) != 0) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Int factorial(unsigned n) {
    Int acc = 1;
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

}  // namespace mnforge
