#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Canonical text form: "p" for integers, "p/q" with q > 0 otherwise.
inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Accepts "p" and "p/q" with optional leading '-' on p; q must be positive.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    size_t slash = text.find('/');
    auto parse_int = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) fail();
        size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) fail();
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') fail();
        return BigInt(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rational(num, den);
}

// Checked machine-integer helpers for simplex counts and Euler sums.
inline long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact count arithmetic");
    return out;
}

inline long long checked_sub(long long a, long long b) {
    long long out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact count arithmetic");
    return out;
}

}  // namespace curv
