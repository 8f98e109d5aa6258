#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "leflab/chains.hpp"
#include "leflab/groebner.hpp"

namespace leflab {

// Monte-Carlo generic initial ideal: a candidate is reported only when the
// initial ideals of every sampled random coordinate change agree.
struct GinReport {
  std::optional<MonomialIdeal> candidate;
  int samples = 0;
  int agreements = 0;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
};

// Fixed splittable sub-seed scheme (splitmix64), so per-sample randomness is
// reproducible regardless of evaluation order.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

std::vector<std::vector<std::uint32_t>> random_invertible_matrix(
    int n, std::uint32_t p, std::mt19937_64& rng);

// Image of f under x_j -> sum_i g[i][j] x_i.
Polynomial apply_linear_change(const Polynomial& f,
                               const std::vector<std::vector<std::uint32_t>>& g);

Polynomial random_homogeneous(int nvars, int degree, std::uint32_t prime,
                              std::mt19937_64& rng);

GinReport random_gin(const std::vector<Polynomial>& gens, int samples,
                     std::uint64_t seed);

// Rank-based Lefschetz certification through Hilbert functions of quotients
// by powers of linear forms.  A single passing draw certifies; all-fail is a
// Monte-Carlo "false".  With fixed_last_vars the stage-i form is x_{n-i+1}.
bool generic_lefschetz(const std::vector<Polynomial>& gens, int k,
                       LefschetzMode mode, int trials, std::uint64_t seed,
                       bool fixed_last_vars = false);

enum class SymmetricKind { elementary, power_sum };

// e_index or p_index evaluated at (x1^power, ..., xn^power).
Polynomial symmetric_fixture(SymmetricKind kind, int index, int power, int nvars,
                             std::uint32_t prime);

} // namespace leflab
