#pragma once

#include <string>
#include <vector>

#include "leflab/ideal.hpp"

namespace leflab {

// Maximal run base, base*x_n, ..., base*x_n^(length-1) of standard
// monomials; base is not divisible by x_n and base*x_n^length lies in the
// ideal.
struct XnChain {
  Monomial base;
  int start_degree;
  int length;
  int end_degree() const { return start_degree + length - 1; }
  Monomial end(int nvars_last) const {
    return base.times_var(nvars_last, length);
  }
};

// Partition of the standard monomials into x_n-chains, sorted by
// (start degree asc, base grevlex desc).
struct ChainDecomposition {
  std::vector<XnChain> chains;
  MonomialIdeal ideal;
};

struct LefschetzVerdict {
  bool sl = false;
  bool wl = false;
};

enum class LefschetzMode { strong, weak };

ChainDecomposition chain_decomposition(const MonomialIdeal& I);

// SL condition: chains starting lower end at least as high.  WL condition:
// every chain starts at degree <= u_1 and ends at degree >= u_2 - 1 (with
// u_2 read as c+1 when the Hilbert function never drops inside its
// support).  Non-unimodal Hilbert functions yield wl = false.
LefschetzVerdict lefschetz_conditions(const MonomialIdeal& I);

// Chain certificate for the k-SLP/k-WLP with respect to the last variables:
// the SL/WL condition for I, then for I intersected with one fewer variable,
// k times in total.  Exact for Borel-fixed ideals, sufficient in general.
bool k_lefschetz_last_vars(const MonomialIdeal& I, int k, LefschetzMode mode);

// True iff the monomial one past every chain end is a minimal generator.
// Requires is_m_full_last(I).
bool chain_end_generators(const MonomialIdeal& I);

std::string to_string(const XnChain& chain, int nvars);

} // namespace leflab
