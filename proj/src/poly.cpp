#include "leflab/poly.hpp"

#include "leflab/error.hpp"

namespace leflab {

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("polynomial variable counts differ");
  if (a.prime() != b.prime())
    throw ConfigError("polynomial primes differ");
}

} // namespace

Polynomial::Polynomial(int nvars, std::uint32_t prime)
    : nvars_(nvars), prime_(prime) {
  if (nvars < 1 || nvars > max_vars)
    throw ConfigError("variable count out of range");
  if (prime <= 2 || !is_prime_u32(prime))
    throw ConfigError("coefficient modulus " + std::to_string(prime) +
                      " is not an odd prime");
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw InternalError("leading term of the zero polynomial");
  return terms_.begin()->first;
}

std::uint32_t Polynomial::leading_coefficient() const {
  if (is_zero()) throw InternalError("leading term of the zero polynomial");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  return is_zero() ? -1 : leading_monomial().degree();
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  const int d = leading_monomial().degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, std::uint32_t coeff) {
  if (m.nvars() != nvars_)
    throw DimensionError("term variable count mismatch");
  coeff %= prime_;
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second = add_mod(it->second, coeff, prime_);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, neg_mod(c, b.prime()));
  return r;
}

Polynomial mul_term(const Polynomial& a, const Monomial& mono, std::uint32_t coeff) {
  Polynomial r(a.nvars(), a.prime());
  coeff %= a.prime();
  if (coeff == 0) return r;
  for (const auto& [m, c] : a.terms())
    r.add_term(m.times(mono), mul_mod(c, coeff, a.prime()));
  return r;
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r(a.nvars(), a.prime());
  for (const auto& [m, c] : b.terms()) {
    Polynomial part = mul_term(a, m, c);
    for (const auto& [pm, pc] : part.terms()) r.add_term(pm, pc);
  }
  return r;
}

Polynomial pow(const Polynomial& a, int e) {
  if (e < 0) throw ConfigError("negative polynomial power");
  Polynomial r(a.nvars(), a.prime());
  r.add_term(Monomial(a.nvars()), 1);
  Polynomial base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Polynomial monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  const std::uint32_t inv = inv_mod(a.leading_coefficient(), a.prime());
  return mul_term(a, Monomial(a.nvars()), inv);
}

std::string to_string(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string s;
  const std::uint32_t p = a.prime();
  for (const auto& [m, c] : a.terms()) {
    // symmetric representative
    const bool negative = c > p / 2;
    const std::uint32_t mag = negative ? p - c : c;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag != 1 || m.is_unit()) {
      s += std::to_string(mag);
      if (!m.is_unit()) s += '*';
    }
    if (!m.is_unit()) s += to_string(m);
  }
  return s;
}

} // namespace leflab
