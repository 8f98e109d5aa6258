#include "leflab/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "leflab/error.hpp"
#include "leflab/kernels.hpp"
#include "leflab/modp.hpp"

namespace leflab {

int rank_modp(std::vector<std::vector<std::uint32_t>> m, std::uint32_t p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::uint32_t inv = inv_mod(m[rank][col], p);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const std::uint32_t f = neg_mod(mul_mod(m[r][col], inv, p), p);
      kernels::modp_axpy(m[r].data() + col, m[rank].data() + col, f,
                         cols - col, p);
    }
    ++rank;
  }
  return rank;
}

std::optional<int> rank_bareiss(IntMatrix m, long long limit) {
  int rank = 0;
  long long prev = 1;
  const int steps = std::min(m.rows, m.cols);
  for (int k = 0; k < steps; ++k) {
    int pr = -1, pc = -1;
    for (int r = k; r < m.rows && pr < 0; ++r)
      for (int c = k; c < m.cols; ++c)
        if (m.a[r][c] != 0) { pr = r; pc = c; break; }
    if (pr < 0) break;
    std::swap(m.a[k], m.a[pr]);
    if (pc != k)
      for (int r = 0; r < m.rows; ++r) std::swap(m.a[r][k], m.a[r][pc]);
    const long long piv = m.a[k][k];
    for (int r = k + 1; r < m.rows; ++r) {
      for (int c = k + 1; c < m.cols; ++c) {
        const __int128 num = static_cast<__int128>(m.a[r][c]) * piv -
                             static_cast<__int128>(m.a[r][k]) * m.a[k][c];
        const __int128 q = num / prev; // exact by Bareiss
        if (q > limit || q < -limit) return std::nullopt;
        m.a[r][c] = static_cast<long long>(q);
      }
      m.a[r][k] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

int rank_exact(const IntMatrix& m) {
  if (auto r = rank_bareiss(m)) return *r;
  auto residues = [&](std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> mm(
        m.rows, std::vector<std::uint32_t>(m.cols));
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) mm[r][c] = reduce_mod(m.a[r][c], p);
    return mm;
  };
  const int r1 = rank_modp(residues(default_prime), default_prime);
  const int r2 = rank_modp(residues(audit_prime), audit_prime);
  if (r1 != r2)
    throw InternalError("modular rank audit disagrees between primes");
  return r1;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint32_t base : {2u, 3u, 5u, 7u}) { // deterministic below 3.2e9
    std::uint32_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

} // namespace leflab
