#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "leflab/modp.hpp"
#include "leflab/monomial.hpp"

namespace leflab {

// Sparse polynomial over GF(prime), terms kept grevlex-descending so the
// leading term is the first entry.  No zero coefficients are stored.
class Polynomial {
public:
  Polynomial(int nvars, std::uint32_t prime);

  int nvars() const { return nvars_; }
  std::uint32_t prime() const { return prime_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, std::uint32_t, GrevlexGreater>& terms() const {
    return terms_;
  }

  const Monomial& leading_monomial() const;
  std::uint32_t leading_coefficient() const;
  int degree() const; // of the leading term; -1 for zero
  bool is_homogeneous() const;

  void add_term(const Monomial& m, std::uint32_t coeff);

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && prime_ == o.prime_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
  int nvars_;
  std::uint32_t prime_;
  std::map<Monomial, std::uint32_t, GrevlexGreater> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
// a * coeff * mono
Polynomial mul_term(const Polynomial& a, const Monomial& mono, std::uint32_t coeff);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& a, int e);
Polynomial monic(const Polynomial& a);

// Leading coefficients printed with symmetric representatives, e.g.
// "x1^3 + 2*x2*x3^2 - x3^3".
std::string to_string(const Polynomial& a);

} // namespace leflab
