#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace subdivtp {

// All arithmetic in this library is exact. Integers are arbitrary
// precision; rationals are kept in lowest terms with positive denominator
// (cpp_rational canonicalizes on every operation).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string to_string(const Int& v) { return v.str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

Int int_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);

}  // namespace subdivtp
