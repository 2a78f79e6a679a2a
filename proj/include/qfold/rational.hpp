#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

// boost 1.74 recurses forever on `rational == int` under C++20 rewritten
// comparisons. Exact non-template overloads win overload resolution and stop it.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.numerator() == b && a.denominator() == 1; }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.numerator() == b && a.denominator() == 1;
}
}  // namespace boost

namespace qfold {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

inline Rational positive_part(const Rational& q) { return q > 0 ? q : Rational(0); }
inline Rational negative_part(const Rational& q) { return q < 0 ? q : Rational(0); }

}  // namespace qfold
