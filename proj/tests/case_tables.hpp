#pragma once

// Second implementations of the identity coefficient a' of the mutated b_12, written
// branch by branch from the reference case analyses. They only cover inputs where
// every tested quantity is nonzero and return nullopt otherwise. Used by tests only.

#include <algorithm>
#include <cstdint>
#include <optional>

namespace qtest {

using I = std::int64_t;

inline I plus(I x) { return std::max<I>(x, 0); }

// b_12 = a + b w + c w^-1 over Z/3.
inline std::optional<I> cyc3_case_table(I a, I b, I c) {
  if (a == 0) return std::nullopt;
  if (a > 0) {
    if (b + a == 0 || c == 0) return std::nullopt;
    if (b + a > 0) return c > 0 ? -b : -b - c;
    return c > 0 ? a : a - c;
  }
  if (c + a == 0 || b == 0) return std::nullopt;
  if (c + a > 0) return b > 0 ? a - b : a;
  return b > 0 ? -b - c : -c;
}

// b_12 = a + b z + c z^2 + d z^3 over Z/4, transcribed as given.
inline std::optional<I> cyc4_case_table(I a, I b, I c, I d) {
  if (a == 0) return std::nullopt;
  if (a > 0) {
    if (d == 0) return std::nullopt;
    if (d > 0) {
      if (c == 0 || b + a + d == 0) return std::nullopt;
      if (c > 0) return b + a + d > 0 ? -b : a;
      return b + a + d > 0 ? a - plus(b + a + c) : a;
    }
    if (c + d == 0 || b + a == 0) return std::nullopt;
    if (c + d > 0) return b + a > 0 ? -b : a;
    return b + a > 0 ? a - d - plus(c + a + b) : a - d;
  }
  if (a + d == 0) return std::nullopt;
  if (a + d > 0) {
    if (b + a + d == 0 || c == 0) return std::nullopt;
    if (b + a + d > 0) return c > 0 ? a - b : a - plus(c + b);
    return a;
  }
  if (b == 0 || c + d + a == 0) return std::nullopt;
  if (b > 0) return c + d + a > 0 ? a - b : -d - plus(c + b);
  return c + d + a > 0 ? a : -d;
}

}  // namespace qtest
