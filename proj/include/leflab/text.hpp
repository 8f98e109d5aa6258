#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leflab/ideal.hpp"
#include "leflab/poly.hpp"

namespace leflab {

Monomial parse_monomial(const std::string& text, int nvars);

// Generators separated by commas or newlines; auto-minimalized.
MonomialIdeal parse_monomial_ideal(const std::string& text, int nvars);

// Comma/newline separated list of polynomials with integer coefficients,
// reduced mod prime on parse.
std::vector<Polynomial> parse_polynomials(const std::string& text, int nvars,
                                          std::uint32_t prime);

// Routing parse: pure monomial lists (single terms, coefficient one) become
// a MonomialIdeal, anything else goes to the polynomial pipeline.
struct ParsedIdeal {
  std::optional<MonomialIdeal> monomial;
  std::vector<Polynomial> polynomials;
};

ParsedIdeal parse_ideal(const std::string& text, int nvars, std::uint32_t prime);

// Comma-separated nonnegative integers, e.g. "1,3,4,3,1".
OSequence parse_hilbert(const std::string& text);

} // namespace leflab
