#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kmh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, plain "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Exact conversion; throws std::domain_error on a nontrivial denominator.
inline Integer to_integer(const Rational& r) {
    if (!is_integer(r))
        throw std::domain_error("rational " + to_string(r) + " is not an integer");
    return numerator(r);
}

// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument on
// anything else, including q == 0.
Rational rational_from_string(const std::string& text);

} // namespace kmh
