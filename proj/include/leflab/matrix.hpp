#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace leflab {

// Dense integer matrix for the resolution oracle; entries stay tiny on
// input, Bareiss intermediates may not.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<long long>> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<long long>(c, 0)) {}
};

// Row-echelon rank over GF(p); consumes its argument.
int rank_modp(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p);

// Fraction-free (Bareiss) rank over the rationals with overflow checks;
// nullopt when an intermediate would leave the safe int64 range.
std::optional<int> rank_bareiss(IntMatrix m, long long limit = (1ll << 62));

// Exact rank over the rationals: Bareiss when it fits, otherwise modular
// ranks at two distinct large primes which must agree.
int rank_exact(const IntMatrix& m);

} // namespace leflab
