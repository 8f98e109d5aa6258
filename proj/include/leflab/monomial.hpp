#pragma once

#include <compare>
#include <string>
#include <vector>

#include "leflab/error.hpp"

namespace leflab {

// Hard limits; exceeding them is a configuration error, never silent
// truncation.
constexpr int max_vars = 16;
constexpr int max_degree = 64;

// A monomial is an exponent vector over a fixed variable count.  The
// all-zeros vector is the unit monomial 1.  Exponents are 0-based
// internally; variables are 1-based only in the text format (x1, x2, ...).
class Monomial {
public:
  explicit Monomial(int nvars) : e_(check_nvars(nvars), 0), deg_(0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(int nvars, int i0, int power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int operator[](int i0) const { return e_[i0]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_unit() const { return deg_ == 0; }
  int last_exponent() const { return e_.back(); }

  // 1-based index of the largest variable dividing the monomial; 0 for 1.
  int max_var() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial times_var(int i0, int power = 1) const;
  // this / other; requires other.divides(*this).
  Monomial quotient_by(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  Monomial with_last_zero() const;
  // Restriction to the first nvars-drop variables; the dropped exponents
  // must be zero.
  Monomial drop_vars(int drop) const;
  // Same exponents, `extra` fresh trailing variables with exponent zero.
  Monomial extend_vars(int extra) const;

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  bool operator!=(const Monomial& other) const { return e_ != other.e_; }

private:
  static int check_nvars(int n);
  std::vector<int> e_;
  int deg_;
};

enum class TermOrder { grevlex, lex };

// Total order on monomials of a common variable count.  Both kinds grade by
// total degree first.  At equal degree, grevlex makes the monomial whose
// last differing exponent (scanning from variable n down to 1) is smaller
// the larger one; lex compares the first differing exponent from x1 up.
std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b);

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  return compare(TermOrder::grevlex, a, b) == std::strong_ordering::less;
}
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  return compare(TermOrder::grevlex, a, b) == std::strong_ordering::greater;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

// All degree-d monomials in nvars variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Text form: x<i>^<e> factors joined by '*', exponent 1 omitted, unit is "1".
std::string to_string(const Monomial& m);

} // namespace leflab
