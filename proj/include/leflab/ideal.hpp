#pragma once

#include <string>
#include <vector>

#include "leflab/monomial.hpp"
#include "leflab/osequence.hpp"

namespace leflab {

struct StabilityReport {
  bool stable = false;
  bool strongly_stable = false;
  bool borel_fixed = false;
  bool revlex = false;
  bool almost_revlex = false;
};

// A monomial ideal held by its minimal generating set in canonical form:
// generators sorted by (degree ascending, grevlex descending), no generator
// dividing another.  The empty set is the zero ideal.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars), gens_() {}
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  int max_generator_degree() const;

  bool operator==(const MonomialIdeal& other) const {
    return nvars_ == other.nvars_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
  int nvars_;
  std::vector<Monomial> gens_;
};

// Divisibility-minimal subset generating the same ideal, canonical order.
MonomialIdeal minimalize(const std::vector<Monomial>& gens, int nvars);

bool is_member(const MonomialIdeal& I, const Monomial& m);

// True iff I contains a pure power of every variable.
bool is_artinian(const MonomialIdeal& I);

// Standard monomials grouped by degree, up to and including the socle
// degree.  Requires an Artinian ideal.
std::vector<std::vector<Monomial>> standard_monomials_by_degree(const MonomialIdeal& I);
std::vector<Monomial> standard_monomials(const MonomialIdeal& I);

// Hilbert function of R/I for Artinian I with I contained in (x1,...,xn).
OSequence hilbert_function(const MonomialIdeal& I);

StabilityReport classify_stability(const MonomialIdeal& I);

// The ideal I intersected with K[x1,...,x_{nvars-drop}], returned in
// nvars-drop variables.
MonomialIdeal intersect_subring(const MonomialIdeal& I, int drop);

// mI : x_n as a monomial ideal.
MonomialIdeal socle_colon_last(const MonomialIdeal& I);

// True iff (mI : x_n) = I.
bool is_m_full_last(const MonomialIdeal& I);

// I + (x1,...,xn)^d.
MonomialIdeal artinian_cap(const MonomialIdeal& I, int d);

// Total order for deterministic ideal lists: generator count, then
// generatorwise (degree, grevlex) comparison.
bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b);

std::string to_string(const MonomialIdeal& I);

} // namespace leflab
