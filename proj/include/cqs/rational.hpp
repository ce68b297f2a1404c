#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cqs {

// All arithmetic in this library is exact. Integers are unbounded;
// rationals are always reduced with positive denominator (both
// properties are maintained by boost::multiprecision).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a library invariant that is guaranteed by construction
// turns out to be violated. Seeing this exception means a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int ceil_rat(const Rat& r) {
  Int n = num(r), d = den(r);
  if (n >= 0) return (n + d - 1) / d;
  return n / d;  // cpp_int division truncates toward zero
}

inline Int floor_rat(const Rat& r) {
  Int n = num(r), d = den(r);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

// Lossless textual form: "p" for integers, "p/q" otherwise. Never floats.
inline std::string to_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace cqs
