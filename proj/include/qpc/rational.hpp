#ifndef QPC_RATIONAL_HPP
#define QPC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qpc/errors.hpp"

namespace qpc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Renders a rational as "p" or "p/q".
inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" (exact, no floats).
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + s);
    return Rat(num, den);
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

}  // namespace qpc

#endif
