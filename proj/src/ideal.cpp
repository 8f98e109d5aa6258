#include "leflab/ideal.hpp"

#include <algorithm>
#include <set>

#include "leflab/binomial.hpp"

namespace leflab {

namespace {

// Canonical generator order: degree ascending, grevlex descending.
bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return grevlex_greater(a, b);
}

} // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
  if (nvars < 1 || nvars > max_vars)
    throw ConfigError("variable count " + std::to_string(nvars) +
                      " outside [1, " + std::to_string(max_vars) + "]");
  for (const auto& g : gens)
    if (g.nvars() != nvars)
      throw DimensionError("generator variable count mismatch");
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Degree-sorted scan: any divisor of a generator appears earlier.
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : gens_) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

int MonomialIdeal::max_generator_degree() const {
  return gens_.empty() ? 0 : gens_.back().degree();
}

MonomialIdeal minimalize(const std::vector<Monomial>& gens, int nvars) {
  return MonomialIdeal(nvars, gens);
}

bool is_member(const MonomialIdeal& I, const Monomial& m) {
  if (m.nvars() != I.nvars())
    throw DimensionError("membership test across different variable counts");
  for (const auto& g : I.generators())
    if (g.divides(m)) return true;
  return false;
}

bool is_artinian(const MonomialIdeal& I) {
  if (I.is_unit()) return true;
  std::vector<bool> covered(I.nvars(), false);
  for (const auto& g : I.generators()) {
    int support = -1;
    for (int i = 0; i < I.nvars(); ++i) {
      if (g[i] > 0) {
        if (support >= 0) { support = -2; break; }
        support = i;
      }
    }
    if (support >= 0) covered[support] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<std::vector<Monomial>> standard_monomials_by_degree(const MonomialIdeal& I) {
  if (!is_artinian(I))
    throw NonArtinianError("standard monomials of a non-Artinian ideal form an infinite set");
  std::vector<std::vector<Monomial>> out;
  if (I.is_unit()) return out;
  constexpr long long cap = 4'000'000;
  long long total = 0;
  std::vector<Monomial> cur{Monomial(I.nvars())};
  while (!cur.empty()) {
    total += static_cast<long long>(cur.size());
    if (total > cap) throw ResourceError("standard monomial count exceeds cap");
    out.push_back(cur);
    std::vector<Monomial> next;
    for (const auto& s : cur)
      for (int i = 0; i < I.nvars(); ++i) {
        Monomial t = s.times_var(i);
        if (!is_member(I, t)) next.push_back(t);
      }
    std::sort(next.begin(), next.end(), GrevlexGreater{});
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I) {
  std::vector<Monomial> flat;
  for (auto& level : standard_monomials_by_degree(I))
    flat.insert(flat.end(), level.begin(), level.end());
  return flat;
}

OSequence hilbert_function(const MonomialIdeal& I) {
  if (I.is_unit())
    throw HypothesisError("quotient by the unit ideal is the zero ring");
  auto levels = standard_monomials_by_degree(I);
  std::vector<int> h;
  h.reserve(levels.size());
  for (const auto& level : levels) h.push_back(static_cast<int>(level.size()));
  return OSequence(std::move(h));
}

namespace {

bool check_stable(const MonomialIdeal& I, bool strong) {
  // The generator-only test is equivalent to the all-members condition.
  for (const auto& g : I.generators()) {
    for (int j = I.nvars() - 1; j >= 0; --j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved = g.quotient_by(Monomial::variable(I.nvars(), j)).times_var(i);
        if (!is_member(I, moved)) return false;
      }
      if (!strong) break; // stable: only the maximum index j
    }
  }
  return true;
}

bool check_almost_revlex(const MonomialIdeal& I) {
  for (const auto& g : I.generators()) {
    if (g.degree() == 0) continue;
    for (const auto& v : monomials_of_degree(I.nvars(), g.degree())) {
      if (!grevlex_greater(v, g)) break; // descending list: rest are <= g
      if (!is_member(I, v)) return false;
    }
  }
  return true;
}

bool check_revlex(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return true;
  const int D = I.max_generator_degree();
  long long prev_standard = -1;
  for (int d = 1;; ++d) {
    if (monomial_count(I.nvars(), d) > 2'000'000)
      throw ResourceError("revlex check: degree stratum too large");
    long long standard = 0;
    bool in_prefix = true;
    for (const auto& m : monomials_of_degree(I.nvars(), d)) {
      const bool mem = is_member(I, m);
      if (mem && !in_prefix) return false; // member below a standard monomial
      if (!mem) {
        in_prefix = false;
        ++standard;
      }
    }
    if (standard == 0) return true;
    // Past the last generator degree the standard strata sizes weakly
    // decrease; once two consecutive strata are equal-size segments the
    // pattern persists (the tail is x_n times the previous stratum).
    if (d > D && standard == prev_standard) return true;
    prev_standard = d >= D ? standard : -1;
  }
}

} // namespace

StabilityReport classify_stability(const MonomialIdeal& I) {
  StabilityReport r;
  r.stable = check_stable(I, false);
  r.strongly_stable = check_stable(I, true);
  // Characteristic-zero convention: Borel-fixed means strongly stable.
  r.borel_fixed = r.strongly_stable;
  r.almost_revlex = check_almost_revlex(I);
  r.revlex = r.almost_revlex && check_revlex(I);
  return r;
}

MonomialIdeal intersect_subring(const MonomialIdeal& I, int drop) {
  if (drop < 1 || drop >= I.nvars())
    throw DimensionError("cannot drop " + std::to_string(drop) + " of " +
                         std::to_string(I.nvars()) + " variables");
  if (!is_artinian(I))
    throw NonArtinianError("subring intersection requires an Artinian ideal");
  std::vector<Monomial> kept;
  for (const auto& g : I.generators()) {
    bool pure = true;
    for (int i = I.nvars() - drop; i < I.nvars(); ++i)
      if (g[i] != 0) { pure = false; break; }
    if (pure) kept.push_back(g.drop_vars(drop));
  }
  return MonomialIdeal(I.nvars() - drop, std::move(kept));
}

MonomialIdeal socle_colon_last(const MonomialIdeal& I) {
  std::vector<Monomial> colon;
  const int last = I.nvars() - 1;
  for (const auto& g : I.generators())
    for (int i = 0; i < I.nvars(); ++i) {
      Monomial u = g.times_var(i);
      if (u[last] > 0) u = u.quotient_by(Monomial::variable(I.nvars(), last));
      colon.push_back(u);
    }
  return MonomialIdeal(I.nvars(), std::move(colon));
}

bool is_m_full_last(const MonomialIdeal& I) {
  if (I.is_zero()) return true;
  return socle_colon_last(I) == I;
}

MonomialIdeal artinian_cap(const MonomialIdeal& I, int d) {
  if (d < 1) throw ConfigError("Artinian cap degree must be positive");
  std::vector<Monomial> gens = I.generators();
  auto cap = monomials_of_degree(I.nvars(), d);
  gens.insert(gens.end(), cap.begin(), cap.end());
  return MonomialIdeal(I.nvars(), std::move(gens));
}

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  const auto& x = a.generators();
  const auto& y = b.generators();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] != y[i]) return canonical_less(x[i], y[i]);
  }
  return x.size() < y.size();
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string s;
  for (const auto& g : I.generators()) {
    if (!s.empty()) s += ", ";
    s += to_string(g);
  }
  return s;
}

} // namespace leflab
