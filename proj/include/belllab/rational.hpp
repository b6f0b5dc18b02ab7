#ifndef BELLLAB_RATIONAL_HPP
#define BELLLAB_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "belllab/errors.hpp"

namespace belllab {

// Exact arbitrary-precision rational. boost keeps values canonical at all
// times: gcd(num, den) = 1 and den > 0. Nothing in the classical half of the
// library ever touches floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical text form "p/q" (denominator always present: "0/1", "-3/4").
inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace detail

/// Parse "p/q" (canonical or not; the result is canonicalized). A bare
/// integer "p" is accepted as p/1.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!detail::is_integer_token(num_part) || !detail::is_integer_token(den_part)) {
        throw OutOfRange("not a rational: '" + std::string(text) + "'");
    }
    const BigInt num{std::string(num_part)};
    const BigInt den{std::string(den_part)};
    if (den == 0) {
        throw OutOfRange("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

inline bool is_probability(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace belllab

#endif  // BELLLAB_RATIONAL_HPP
