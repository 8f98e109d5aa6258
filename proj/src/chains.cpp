#include "leflab/chains.hpp"

#include <algorithm>

namespace leflab {

ChainDecomposition chain_decomposition(const MonomialIdeal& I) {
  auto levels = standard_monomials_by_degree(I);
  ChainDecomposition dec{{}, I};
  const int last = I.nvars() - 1;
  for (const auto& level : levels)
    for (const auto& s : level) {
      if (s.last_exponent() != 0) continue;
      int len = 1;
      while (!is_member(I, s.times_var(last, len))) ++len;
      dec.chains.push_back(XnChain{s, s.degree(), len});
    }
  std::sort(dec.chains.begin(), dec.chains.end(),
            [](const XnChain& a, const XnChain& b) {
              if (a.start_degree != b.start_degree)
                return a.start_degree < b.start_degree;
              return grevlex_greater(a.base, b.base);
            });
  return dec;
}

LefschetzVerdict lefschetz_conditions(const MonomialIdeal& I) {
  auto dec = chain_decomposition(I);
  LefschetzVerdict v;

  v.sl = true;
  for (const auto& a : dec.chains) {
    for (const auto& b : dec.chains) {
      if (a.start_degree < b.start_degree && a.end_degree() < b.end_degree()) {
        v.sl = false;
        break;
      }
    }
    if (!v.sl) break;
  }

  if (I.is_unit()) {
    // Zero ring: no chains, both maps vacuously full-rank.
    v.wl = true;
    return v;
  }
  OSequence h = hilbert_function(I);
  auto bp = unimodal_breakpoints(h);
  if (!bp) {
    v.wl = false; // WLP forces a unimodal Hilbert function
    return v;
  }
  const int u1 = bp->u[0];
  const int u2 = bp->u.size() > 1 ? bp->u[1] : h.socle_degree() + 1;
  v.wl = true;
  for (const auto& c : dec.chains)
    if (c.start_degree > u1 || c.end_degree() < u2 - 1) {
      v.wl = false;
      break;
    }
  return v;
}

bool k_lefschetz_last_vars(const MonomialIdeal& I, int k, LefschetzMode mode) {
  if (k < 1 || k > I.nvars())
    throw DimensionError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(I.nvars()) + "]");
  if (!is_artinian(I))
    throw NonArtinianError("Lefschetz certificate requires an Artinian ideal");
  MonomialIdeal cur = I;
  for (int step = 0;; ++step) {
    LefschetzVerdict v = lefschetz_conditions(cur);
    if (!(mode == LefschetzMode::strong ? v.sl : v.wl)) return false;
    if (step + 1 == k) return true;
    cur = intersect_subring(cur, 1);
  }
}

bool chain_end_generators(const MonomialIdeal& I) {
  if (!is_artinian(I))
    throw NonArtinianError("chain ends require an Artinian ideal");
  if (!is_m_full_last(I))
    throw HypothesisError("ideal is not m-full with respect to the last variable");
  auto dec = chain_decomposition(I);
  const auto& gens = I.generators();
  const int last = I.nvars() - 1;
  for (const auto& c : dec.chains) {
    Monomial end = c.base.times_var(last, c.length);
    if (std::find(gens.begin(), gens.end(), end) == gens.end()) return false;
  }
  return true;
}

std::string to_string(const XnChain& chain, int nvars) {
  std::string s;
  for (int k = 0; k < chain.length; ++k) {
    if (k) s += ", ";
    s += to_string(chain.base.times_var(nvars - 1, k));
  }
  return s;
}

} // namespace leflab
