#include "leflab/osequence.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "leflab/binomial.hpp"
#include "leflab/error.hpp"
#include "leflab/monomial.hpp"

namespace leflab {

OSequence::OSequence(std::vector<int> values) : h_(std::move(values)) {
  while (!h_.empty() && h_.back() == 0) h_.pop_back();
  if (h_.empty()) throw ConfigError("empty Hilbert sequence");
  for (int v : h_)
    if (v < 0) throw ConfigError("negative Hilbert value");
  if (socle_degree() > max_degree)
    throw ConfigError("socle degree exceeds " + std::to_string(max_degree));
}

long long OSequence::sum() const {
  long long s = 0;
  for (int v : h_) s += v;
  return s;
}

int OSequence::max_value() const {
  return *std::max_element(h_.begin(), h_.end());
}

long long macaulay_bound(long long value, int d) {
  // d-th Macaulay representation value = C(a_d,d) + ... + C(a_j,j), then
  // bump every row: bound = C(a_d+1,d+1) + ... + C(a_j+1,j+1).
  long long rem = value;
  long long bound = 0;
  for (int j = d; j >= 1 && rem > 0; --j) {
    long long a;
    if (j == 1) {
      a = rem;
    } else {
      a = j;
      while (binomial(a + 1, j) <= rem) ++a;
    }
    rem -= binomial(a, j);
    bound += binomial(a + 1, j + 1);
  }
  return bound;
}

bool is_o_sequence(const OSequence& h) {
  if (h.at(0) != 1) return false;
  for (int v : h.values())
    if (v <= 0) return false;
  for (int d = 1; d < h.socle_degree(); ++d)
    if (h.at(d + 1) > macaulay_bound(h.at(d), d)) return false;
  return true;
}

OSequence delta(const OSequence& h, int k) {
  if (k < 0) throw ConfigError("negative difference order");
  OSequence cur = h;
  for (int t = 0; t < k; ++t) {
    std::vector<int> d(cur.size());
    d[0] = cur.at(0);
    for (int i = 1; i < cur.size(); ++i)
      d[i] = std::max(cur.at(i) - cur.at(i - 1), 0);
    cur = OSequence(std::move(d));
  }
  return cur;
}

std::optional<Breakpoints> unimodal_breakpoints(const OSequence& h) {
  const int c = h.socle_degree();
  int i = 0;
  while (i < c && h.at(i + 1) > h.at(i)) ++i;
  Breakpoints bp;
  bp.u.push_back(i);
  for (int d = i + 1; d <= c; ++d) {
    if (h.at(d) > h.at(d - 1)) return std::nullopt;
    if (h.at(d) < h.at(d - 1)) bp.u.push_back(d);
  }
  return bp;
}

Breakpoints breakpoints(const OSequence& h) {
  auto bp = unimodal_breakpoints(h);
  if (!bp) throw ShapeError("sequence " + to_string(h) + " is not unimodal");
  return *bp;
}

bool is_quasi_symmetric(const OSequence& h) {
  auto bp = unimodal_breakpoints(h);
  if (!bp) return false;
  const int u1 = bp->u[0];
  std::set<int> prefix(h.values().begin(), h.values().begin() + u1 + 1);
  for (int j = u1 + 1; j <= h.socle_degree(); ++j)
    if (!prefix.count(h.at(j))) return false;
  return true;
}

std::optional<int> k_lefschetz_failure_level(const OSequence& h, int n, int k) {
  if (n < 1 || n > max_vars)
    throw DimensionError("variable count out of range");
  if (k < 1 || k > n)
    throw DimensionError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(n) + "]");
  if (h.size() < 2)
    return h.at(0) == 1 ? std::nullopt : std::optional<int>(0);
  if (h.at(1) > n)
    throw DimensionError("h_1 = " + std::to_string(h.at(1)) + " exceeds " +
                         std::to_string(n) + " variables");
  OSequence cur = h;
  for (int t = 0; t < k; ++t) {
    if (t > 0) cur = delta(cur, 1);
    if (!is_o_sequence(cur) || !is_unimodal(cur)) return t;
  }
  if (!is_o_sequence(delta(cur, 1))) return k;
  return std::nullopt;
}

bool admits_k_lefschetz(const OSequence& h, int n, int k) {
  return !k_lefschetz_failure_level(h, n, k).has_value();
}

ChainProfile chain_profile(const OSequence& h) {
  if (!is_unimodal(h))
    throw ShapeError("no chain profile: " + to_string(h) + " is not unimodal");
  ChainProfile p;
  const int m = h.max_value();
  for (int i = 1; i <= m; ++i) {
    int start = 0;
    while (h.at(start) < i) ++start;
    int end = h.socle_degree();
    while (h.at(end) < i) --end;
    p.intervals.emplace_back(start, end);
  }
  std::sort(p.intervals.begin(), p.intervals.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first < b.first : a.second > b.second;
            });
  return p;
}

std::vector<OSequence> enumerate_nslp_hilbert(int n, int max_socle, int max_value) {
  if (n < 1 || max_socle < 0 || max_value < 1)
    throw ConfigError("enumeration bounds must be positive");
  if (n > max_vars || max_socle > 16 || max_value > 512)
    throw ResourceError("n-SLP Hilbert enumeration bounds too large");

  std::set<std::vector<int>> level;
  for (int len = 1; len <= max_socle + 1; ++len)
    level.insert(std::vector<int>(len, 1));

  constexpr std::size_t hard_cap = 2'000'000;
  for (int lvl = 2; lvl <= n; ++lvl) {
    std::set<std::vector<int>> next;
    for (const auto& a : level) {
      std::vector<int> b;
      long long s = 0;
      bool ok = true;
      for (int v : a) {
        s += v;
        if (s > max_value) { ok = false; break; }
        b.push_back(static_cast<int>(s));
      }
      if (!ok) continue;
      // b plus any weakly decreasing positive tail bounded by b_m.
      std::function<void(std::vector<int>&, int)> tails =
          [&](std::vector<int>& cur, int bound) {
            next.insert(cur);
            if (next.size() > hard_cap)
              throw ResourceError("n-SLP Hilbert enumeration exceeded cap");
            if (static_cast<int>(cur.size()) > max_socle) return;
            for (int t = bound; t >= 1; --t) {
              cur.push_back(t);
              tails(cur, t);
              cur.pop_back();
            }
          };
      tails(b, b.back());
    }
    level = std::move(next);
  }

  std::vector<OSequence> out;
  out.reserve(level.size());
  for (const auto& v : level) out.emplace_back(v);
  return out;
}

std::string to_string(const OSequence& h) {
  std::string s;
  for (int i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(h.at(i));
  }
  return s;
}

} // namespace leflab
