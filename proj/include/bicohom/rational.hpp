#ifndef BICOHOM_RATIONAL_HPP
#define BICOHOM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bicohom/errors.hpp"

namespace bicohom {

// Exact coefficient field. boost::multiprecision::cpp_rational keeps values
// in canonical form (gcd-reduced, denominator > 0), so every arithmetic
// result is already normalized.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as `num/den`, e.g. "1/1", "-3/2". Never decimal.
inline std::string format_rational(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "num/den" or a bare integer "num". Throws BadNumber on junk.
inline Rational parse_rational(const std::string& tok) {
    try {
        const auto slash = tok.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(tok));
        }
        Integer num(tok.substr(0, slash));
        Integer den(tok.substr(slash + 1));
        if (den == 0) throw BadNumber("zero denominator in '" + tok + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw BadNumber("malformed rational '" + tok + "'");
    }
}

}  // namespace bicohom

#endif  // BICOHOM_RATIONAL_HPP
