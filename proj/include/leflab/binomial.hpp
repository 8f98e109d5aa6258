#pragma once

#include <cstdint>

namespace leflab {

// Binomial coefficient with the clamp conventions the Betti formulas need:
// C(a,b) = 0 for b < 0 or b > a, and C(a,0) = 1 including a = 0.
// Saturates at a large sentinel instead of overflowing; callers only compare
// the result against 32-bit quantities.
inline std::int64_t binomial(std::int64_t a, std::int64_t b) {
  constexpr std::int64_t cap = std::int64_t(1) << 62;
  if (b < 0 || b > a) return 0;
  if (b == 0 || b == a) return 1;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    if (r > cap / (a - b + i)) return cap;
    r = r * (a - b + i) / i;
  }
  return r;
}

// Number of degree-d monomials in n variables.
inline std::int64_t monomial_count(int nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  return binomial(nvars - 1 + d, d);
}

} // namespace leflab
