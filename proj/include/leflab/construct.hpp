#pragma once

#include <vector>

#include "leflab/ideal.hpp"

namespace leflab {

// The unique almost revlex ideal whose quotient has Hilbert function h.
// Requires h to admit the n-SLP (admits_k_lefschetz(h, n, n)).
MonomialIdeal almost_revlex_from_hilbert(const OSequence& h, int nvars);

// The unique lex-segment ideal for h.  Feasibility is checked degree by
// degree, independently of the Macaulay-bound O-sequence test.
MonomialIdeal lex_ideal_from_hilbert(const OSequence& h, int nvars);

// Canonical inverse image of Ibar under I -> I n K[x1..x_{n-1}]: assigns the
// chain profile of h to the standard monomials of Ibar, longer chains to
// grevlex-smaller bases within a degree.  Requires hilbert(Ibar) = delta(h).
MonomialIdeal phi_inverse(const MonomialIdeal& Ibar, const OSequence& h);

// Lex-segment ideal of the k-th difference lifted k times; Borel-fixed with
// the k-SLP with respect to the last variables and Hilbert function h.
MonomialIdeal borel_tower_from_hilbert(const OSequence& h, int nvars, int k);

enum class BorelFilter { none, wl, sl, k_slp };

// All strongly stable Artinian ideals with Hilbert function h, optionally
// filtered by Lefschetz verdicts with respect to the last variables.
// Deterministic output order.
std::vector<MonomialIdeal> enumerate_borel_fixed(const OSequence& h, int nvars,
                                                 BorelFilter filter, int k = 0);

} // namespace leflab
