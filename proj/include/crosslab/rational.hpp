#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "crosslab/errors.hpp"

namespace crosslab {

// Arbitrary-precision rational; keeps every geometric predicate exact.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or a plain integer.
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational: " + text);
  }
}

/// Writes a rational as "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace crosslab
