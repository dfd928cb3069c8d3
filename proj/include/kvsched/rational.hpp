#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace kvsched {

// Exact arithmetic for the geometric slice ladder and the area bounds. Slice
// boundaries like beta*alpha^p must compare exactly against integer response
// lengths; doubles are not good enough at phase boundaries.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den);

long long floor_ll(const Rational& r);
long long ceil_ll(const Rational& r);

// Accepts "p/q", a plain integer, or a decimal. Decimals are converted to the
// closest rational with denominator <= max_decimal_den (ties prefer the
// smaller denominator).
std::optional<Rational> parse_rational(const std::string& text, int max_decimal_den = 64);

// Round-half-up decimal rendering with trailing zeros trimmed. Deterministic,
// used for all CSV output of rational quantities.
std::string to_decimal_string(const Rational& r, int digits = 12);

}  // namespace kvsched
