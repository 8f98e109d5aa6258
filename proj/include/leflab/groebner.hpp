#pragma once

#include <vector>

#include "leflab/ideal.hpp"
#include "leflab/poly.hpp"

namespace leflab {

// Reduced grevlex Groebner basis: monic elements, no term of any element in
// the initial ideal of the others, sorted by leading monomial ascending.
struct GroebnerBasis {
  int nvars;
  std::uint32_t prime;
  std::vector<Polynomial> basis;
};

// Buchberger with the normal selection strategy, the coprimality criterion
// and the chain criterion; returns the unique reduced basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);

// Remainder of full division by the basis; zero iff f is a member.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

// Hilbert function of R/(gens) via the standard monomials of the initial
// ideal; requires an Artinian ideal.
OSequence quotient_hilbert(const std::vector<Polynomial>& gens);

} // namespace leflab
