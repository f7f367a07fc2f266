#pragma once

// Exact rational scalar used for every matrix entry and algebra
// coefficient in this library. No floating point anywhere: values like
// 1/8 in the inverse mark table must survive idempotency checks exactly.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hyperoct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q omitted when it is 1; never a float.
inline std::string rational_str(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational rational_parse(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

}  // namespace hyperoct
