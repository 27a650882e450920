#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace homcfi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "num" or "num/den" with positive denominator.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

/// Parses "num" or "num/den". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("rational with zero denominator: " + s);
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

/// 2^k as an exact rational, k may be negative.
inline Rational pow2(long k) {
    Integer p = Integer(1) << static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rational(p) : Rational(1, p);
}

}  // namespace homcfi
