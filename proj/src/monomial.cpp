#include "leflab/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace leflab {

int Monomial::check_nvars(int n) {
  if (n < 1 || n > max_vars)
    throw ConfigError("variable count " + std::to_string(n) +
                      " outside [1, " + std::to_string(max_vars) + "]");
  return n;
}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)), deg_(0) {
  check_nvars(nvars());
  for (int x : e_) {
    if (x < 0) throw ConfigError("negative exponent");
    deg_ += x;
  }
  if (deg_ > max_degree)
    throw ConfigError("degree " + std::to_string(deg_) + " exceeds " +
                      std::to_string(max_degree));
}

Monomial Monomial::variable(int nvars, int i0, int power) {
  Monomial m(nvars);
  return m.times_var(i0, power);
}

int Monomial::max_var() const {
  for (int i = nvars() - 1; i >= 0; --i)
    if (e_[i] > 0) return i + 1;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars())
    throw DimensionError("monomial variable counts differ");
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars())
    throw DimensionError("monomial variable counts differ");
  std::vector<int> r(e_);
  for (int i = 0; i < nvars(); ++i) r[i] += other.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::times_var(int i0, int power) const {
  std::vector<int> r(e_);
  r.at(i0) += power;
  return Monomial(std::move(r));
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  if (!other.divides(*this))
    throw InternalError("monomial quotient by a non-divisor");
  std::vector<int> r(e_);
  for (int i = 0; i < nvars(); ++i) r[i] -= other.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (nvars() != other.nvars())
    throw DimensionError("monomial variable counts differ");
  std::vector<int> r(nvars());
  for (int i = 0; i < nvars(); ++i) r[i] = std::min(e_[i], other.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars() != other.nvars())
    throw DimensionError("monomial variable counts differ");
  std::vector<int> r(nvars());
  for (int i = 0; i < nvars(); ++i) r[i] = std::max(e_[i], other.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::with_last_zero() const {
  std::vector<int> r(e_);
  r.back() = 0;
  return Monomial(std::move(r));
}

Monomial Monomial::drop_vars(int drop) const {
  if (drop < 0 || drop >= nvars())
    throw DimensionError("cannot drop " + std::to_string(drop) + " of " +
                         std::to_string(nvars()) + " variables");
  for (int i = nvars() - drop; i < nvars(); ++i)
    if (e_[i] != 0)
      throw InternalError("dropping a variable with nonzero exponent");
  std::vector<int> r(e_.begin(), e_.end() - drop);
  return Monomial(std::move(r));
}

Monomial Monomial::extend_vars(int extra) const {
  std::vector<int> r(e_);
  r.insert(r.end(), extra, 0);
  return Monomial(std::move(r));
}

std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("comparing monomials with different variable counts");
  if (a.degree() != b.degree())
    return a.degree() <=> b.degree();
  if (order == TermOrder::grevlex) {
    for (int i = a.nvars() - 1; i >= 0; --i)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  if (d < 0) return out;
  rec(0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    if (m[i] > 1) {
      s += '^';
      s += std::to_string(m[i]);
    }
  }
  return s;
}

} // namespace leflab
