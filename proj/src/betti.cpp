#include "leflab/betti.hpp"

#include <algorithm>
#include <sstream>

#include "leflab/binomial.hpp"
#include "leflab/construct.hpp"
#include "leflab/matrix.hpp"

namespace leflab {

void BettiTable::add(int i, int j, long long v) {
  if (v == 0) return;
  auto key = std::make_pair(i, j);
  long long next = (e_[key] += v);
  if (next == 0) e_.erase(key);
}

long long BettiTable::generator_count() const {
  long long total = 0;
  for (const auto& [key, v] : e_)
    if (key.first == 1) total += v;
  return total;
}

int BettiTable::max_homological_index() const {
  int m = 0;
  for (const auto& [key, v] : e_) m = std::max(m, key.first);
  return m;
}

bool entrywise_leq(const BettiTable& a, const BettiTable& b) {
  for (const auto& [key, v] : a.entries())
    if (v > b.get(key.first, key.second)) return false;
  return true;
}

std::string to_grid(const BettiTable& t) {
  int imax = 0, jmax = 0;
  for (const auto& [key, v] : t.entries()) {
    imax = std::max(imax, key.first);
    jmax = std::max(jmax, key.second);
  }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= imax; ++i) os << ' ' << i << "     ";
  os << '\n';
  for (int j = 0; j <= jmax; ++j) {
    os << j << ": ";
    for (int i = 0; i <= imax; ++i) {
      long long v = t.get(i, j);
      if (v == 0)
        os << "     .";
      else {
        std::string s = std::to_string(v);
        os << std::string(6 - std::min<std::size_t>(5, s.size()), ' ') << s;
      }
    }
    os << '\n';
  }
  return os.str();
}

CSequence c_from_hilbert(const OSequence& h) {
  CSequence cs;
  for (int j = 0; j <= h.socle_degree() + 1; ++j) {
    long long prev = j == 0 ? 0 : h.at(j - 1);
    long long v = std::max(prev - h.at(j), 0ll);
    if (v > 0) cs.c[j] = v;
  }
  return cs;
}

BettiTable betti_ek(const MonomialIdeal& I) {
  if (I.is_unit())
    throw HypothesisError("Betti numbers of the zero ring are not defined here");
  if (!classify_stability(I).stable)
    throw HypothesisError("Eliahou-Kervaire requires a stable ideal; use the Koszul oracle");
  BettiTable t(I.nvars());
  t.add(0, 0, 1);
  for (const auto& g : I.generators()) {
    const int m = g.max_var();
    const int j = g.degree() - 1;
    for (int i = 1; i <= m; ++i) t.add(i, j, binomial(m - 1, i - 1));
  }
  return t;
}

BettiTable betti_mfull(const MonomialIdeal& I) {
  if (!is_artinian(I))
    throw NonArtinianError("m-full recursion requires an Artinian ideal");
  if (I.is_unit())
    throw HypothesisError("Betti numbers of the zero ring are not defined here");
  BettiTable t(I.nvars());
  t.add(0, 0, 1);
  MonomialIdeal cur = I;
  for (int level = I.nvars(); level >= 1; --level) {
    if (!is_m_full_last(cur))
      throw HypothesisError("ideal is not m-full at the " + std::to_string(level) +
                            "-variable level");
    for (const auto& g : cur.generators()) {
      if (g.last_exponent() == 0) continue;
      const int j = g.degree() - 1;
      for (int i = 1; i <= level; ++i) t.add(i, j, binomial(level - 1, i - 1));
    }
    if (level > 1) cur = intersect_subring(cur, 1);
  }
  return t;
}

namespace {

// Numerator of the Hilbert series encoded by a Betti table must match the
// Hilbert polynomial of the expected quotient: sum_i (-1)^i beta_{i,i+j}
// T^{i+j} = P(T) * (1-T)^nvars.
bool table_matches_hilbert(const BettiTable& t, const OSequence& h) {
  std::vector<long long> lhs;
  for (const auto& [key, v] : t.entries()) {
    const int deg = key.first + key.second;
    if (static_cast<int>(lhs.size()) <= deg) lhs.resize(deg + 1, 0);
    lhs[deg] += (key.first % 2 == 0 ? v : -v);
  }
  std::vector<long long> rhs(h.size());
  for (int d = 0; d < h.size(); ++d) rhs[d] = h.at(d);
  for (int rep = 0; rep < t.nvars(); ++rep) {
    std::vector<long long> next(rhs.size() + 1, 0);
    for (std::size_t d = 0; d < rhs.size(); ++d) {
      next[d] += rhs[d];
      next[d + 1] -= rhs[d];
    }
    rhs = std::move(next);
  }
  while (!lhs.empty() && lhs.back() == 0) lhs.pop_back();
  while (!rhs.empty() && rhs.back() == 0) rhs.pop_back();
  return lhs == rhs;
}

} // namespace

BettiTable betti_kwlp_closed_form(const OSequence& h, int nvars, int k,
                                  const std::optional<BettiTable>& base) {
  if (k < 1 || k > nvars)
    throw DimensionError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(nvars) + "]");
  if (!admits_k_lefschetz(h, nvars, k))
    throw CharacterizationError("h = " + to_string(h) + " does not admit the " +
                                std::to_string(k) + "-WLP in " +
                                std::to_string(nvars) + " variables");
  BettiTable t(nvars);
  if (k < nvars) {
    if (!base)
      throw ConfigError("a base Betti table is required for k < n");
    if (base->nvars() != nvars - k)
      throw CharacterizationError("base Hilbert mismatch: table has " +
                                  std::to_string(base->nvars()) +
                                  " variables, expected " + std::to_string(nvars - k));
    if (!table_matches_hilbert(*base, delta(h, k)))
      throw CharacterizationError("base Hilbert mismatch: table does not resolve "
                                  "an algebra with Hilbert function " +
                                  to_string(delta(h, k)));
    for (const auto& [key, v] : base->entries()) t.add(key.first, key.second, v);
  } else {
    t.add(0, 0, 1);
  }
  for (int step = 0; step < k; ++step) {
    const CSequence cs = c_from_hilbert(delta(h, step));
    for (const auto& [j, c] : cs.c)
      for (int i = 1; i <= nvars; ++i)
        t.add(i, j - 1, binomial(nvars - 1 - step, i - 1) * c);
  }
  return t;
}

BettiTable betti_upper_bound(const OSequence& h, int nvars, int k) {
  if (k < 1 || k > nvars)
    throw DimensionError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(nvars) + "]");
  if (k == nvars) return betti_kwlp_closed_form(h, nvars, k, std::nullopt);
  // Lex-segment ideals maximize Betti numbers for the base Hilbert function.
  return betti_kwlp_closed_form(
      h, nvars, k, betti_ek(lex_ideal_from_hilbert(delta(h, k), nvars - k)));
}

BettiTable betti_koszul(const MonomialIdeal& I) {
  auto levels = standard_monomials_by_degree(I);
  const int n = I.nvars();
  const int c = static_cast<int>(levels.size()) - 1; // socle degree; -1 if unit

  // Column index of each standard monomial within its degree.
  std::vector<std::map<std::vector<int>, int>> index(levels.size());
  for (std::size_t d = 0; d < levels.size(); ++d)
    for (std::size_t t = 0; t < levels[d].size(); ++t)
      index[d][levels[d][t].exponents()] = static_cast<int>(t);

  // Subsets of {0..n-1} grouped by size, in a fixed order.
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    subsets[__builtin_popcount(mask)].push_back(mask);
  std::vector<std::map<unsigned, int>> subset_index(n + 1);
  for (int i = 0; i <= n; ++i)
    for (std::size_t t = 0; t < subsets[i].size(); ++t)
      subset_index[i][subsets[i][t]] = static_cast<int>(t);

  auto dim_strand = [&](int i, int j) -> long long {
    if (i < 0 || i > n || j < 0 || j > c) return 0;
    return static_cast<long long>(subsets[i].size()) * levels[j].size();
  };

  // Boundary of the strand (i, j): e_S (x) u  ->  sum of signed e_{S-l} (x) x_l u.
  auto boundary_rank = [&](int i, int j) -> int {
    if (i <= 0 || i > n || j < 0 || j > c) return 0;
    const long long rows = dim_strand(i - 1, j + 1);
    const long long cols = dim_strand(i, j);
    if (rows == 0 || cols == 0) return 0;
    IntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (std::size_t si = 0; si < subsets[i].size(); ++si) {
      const unsigned mask = subsets[i][si];
      for (std::size_t ui = 0; ui < levels[j].size(); ++ui) {
        const int col = static_cast<int>(si * levels[j].size() + ui);
        int pos = 0;
        for (int l = 0; l < n; ++l) {
          if (!(mask & (1u << l))) continue;
          Monomial xlu = levels[j][ui].times_var(l);
          auto it = j + 1 <= c ? index[j + 1].find(xlu.exponents())
                               : index[0].end();
          if (j + 1 <= c && it != index[j + 1].end()) {
            const int rsub = subset_index[i - 1].at(mask & ~(1u << l));
            const int row =
                static_cast<int>(rsub * levels[j + 1].size() + it->second);
            m.a[row][col] = (pos % 2 == 0) ? 1 : -1;
          }
          ++pos;
        }
      }
    }
    return rank_exact(m);
  };

  BettiTable t(n);
  std::map<std::pair<int, int>, int> rank_cache;
  auto rank_at = [&](int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = rank_cache.find(key);
    if (it != rank_cache.end()) return it->second;
    int r = boundary_rank(i, j);
    rank_cache[key] = r;
    return r;
  };

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= c; ++j) {
      const long long dim = dim_strand(i, j);
      if (dim == 0) continue;
      const long long beta = dim - rank_at(i, j) - rank_at(i + 1, j - 1);
      t.add(i, j, beta);
    }
  return t;
}

} // namespace leflab
