#pragma once

// Exact arithmetic used throughout: arbitrary-width integers and rationals.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frustum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Always "p/q", with the sign on p and q > 0 (integers print as "p/1").
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

inline Rational make_rational(const BigInt& p, const BigInt& q) { return Rational(p, q); }

}  // namespace frustum
