#pragma once

#include <cstdint>

namespace leflab {

// Default coefficient field: the Mersenne prime 2^31 - 1.
constexpr std::uint32_t default_prime = 2147483647u;
// Partner prime for the two-prime rank audit.
constexpr std::uint32_t audit_prime = 2147483629u;

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, r = 1;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return pow_mod(a, p - 2, p); // p prime
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

// Reduce a signed 64-bit integer into [0, p).
inline std::uint32_t reduce_mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

} // namespace leflab
