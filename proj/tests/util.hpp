#pragma once

#include <random>
#include <vector>

#include "leflab/construct.hpp"
#include "leflab/ideal.hpp"
#include "leflab/text.hpp"

namespace testutil {

using namespace leflab;

inline Monomial mono(const std::string& s, int nvars) {
  return parse_monomial(s, nvars);
}

inline MonomialIdeal ideal(const std::string& s, int nvars, int cap = 0) {
  MonomialIdeal I = parse_monomial_ideal(s, nvars);
  return cap > 0 ? artinian_cap(I, cap) : I;
}

inline OSequence hseq(const std::string& s) { return parse_hilbert(s); }

// The two displayed ideals of the chain-decomposition figures.
inline MonomialIdeal fig_slp_ideal() {
  return ideal("x1^2, x1*x2, x2^2, x2*x3^2", 3, 4);
}
inline MonomialIdeal fig_non_slp_ideal() {
  return ideal("x1^2, x1*x2, x2^3, x1*x3^2, x2^2*x3^2, x2*x3^3, x3^5", 3);
}

// Borel-fixed pair with h = (1,3,4,3,1); I has the SL condition, J only WL.
inline MonomialIdeal borel_wlp_I() {
  return ideal("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^3, x2*x3^3, x3^5", 3);
}
inline MonomialIdeal borel_wlp_J() { return fig_non_slp_ideal(); }

// Stable pair with h = (1,3,3,2); I is Borel-fixed, J is not.
inline MonomialIdeal stable_slp_I() {
  return ideal("x1^2, x1*x2, x2^2, x1*x3^2", 3, 4);
}
inline MonomialIdeal stable_slp_J() { return fig_slp_ideal(); }

// Four-variable Borel-fixed pair with h = (1,4,8,7) and equal subring
// intersections.
inline MonomialIdeal four_var_I() {
  return ideal("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^2, x2*x3^2, x3^3, x2^2*x4",
               4, 4);
}
inline MonomialIdeal four_var_J() {
  return ideal("x1^2, x1*x2, x2^3, x2^2*x3, x1*x3^2, x2*x3^2, x3^3, x1*x3*x4",
               4, 4);
}

// Random Artinian monomial ideal: a few random generators under a power cap.
inline MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, int nvars,
                                           int max_socle) {
  std::uniform_int_distribution<int> cap_dist(2, max_socle + 1);
  const int cap = cap_dist(rng);
  std::uniform_int_distribution<int> count_dist(0, 5);
  std::uniform_int_distribution<int> deg_dist(1, cap);
  std::vector<Monomial> gens;
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    int d = deg_dist(rng);
    std::vector<int> e(nvars, 0);
    std::uniform_int_distribution<int> var_dist(0, nvars - 1);
    for (int u = 0; u < d; ++u) e[var_dist(rng)]++;
    gens.emplace_back(e);
  }
  return artinian_cap(MonomialIdeal(nvars, gens), cap);
}

// Smallest strongly stable ideal containing the given monomials, capped.
inline MonomialIdeal borel_closure_capped(const std::vector<Monomial>& seeds,
                                          int nvars, int cap) {
  std::vector<Monomial> gens = seeds;
  for (std::size_t t = 0; t < gens.size(); ++t)
    for (int j = 0; j < nvars; ++j) {
      if (gens[t][j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved =
            gens[t].quotient_by(Monomial::variable(nvars, j)).times_var(i);
        if (std::find(gens.begin(), gens.end(), moved) == gens.end())
          gens.push_back(moved);
      }
    }
  return artinian_cap(MonomialIdeal(nvars, gens), cap);
}

inline MonomialIdeal random_strongly_stable_ideal(std::mt19937_64& rng,
                                                  int nvars, int max_socle) {
  std::uniform_int_distribution<int> cap_dist(2, max_socle + 1);
  const int cap = cap_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<int> deg_dist(1, cap);
  std::uniform_int_distribution<int> var_dist(0, nvars - 1);
  std::vector<Monomial> seeds;
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    int d = deg_dist(rng);
    std::vector<int> e(nvars, 0);
    for (int u = 0; u < d; ++u) e[var_dist(rng)]++;
    seeds.emplace_back(e);
  }
  return borel_closure_capped(seeds, nvars, cap);
}

} // namespace testutil
