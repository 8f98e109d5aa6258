#include "leflab/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "leflab/binomial.hpp"
#include "leflab/chains.hpp"

namespace leflab {

namespace {

bool divisible_by_any(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

[[noreturn]] void throw_inadmissible(const OSequence& h, int n, int k, int level) {
  std::string what = level == 0 ? "h" : "the difference Delta^" + std::to_string(level) + " h";
  throw CharacterizationError(
      "h = " + to_string(h) + " does not admit the " + std::to_string(k) +
      "-SLP in " + std::to_string(n) + " variables: " + what + " = " +
      to_string(delta(h, level)) +
      (level == k ? " is not an O-sequence" : " is not a unimodal O-sequence"));
}

} // namespace

MonomialIdeal almost_revlex_from_hilbert(const OSequence& h, int nvars) {
  if (auto level = k_lefschetz_failure_level(h, nvars, nvars))
    throw_inadmissible(h, nvars, nvars, *level);

  std::vector<Monomial> gens;
  const int c = h.socle_degree();
  for (int d = 1; d <= c + 1; ++d) {
    std::vector<Monomial> standard;
    for (const auto& m : monomials_of_degree(nvars, d)) // grevlex descending
      if (!divisible_by_any(gens, m)) standard.push_back(m);
    const long long keep = h.at(d);
    const long long cut = static_cast<long long>(standard.size()) - keep;
    if (cut < 0)
      throw InternalError("almost revlex construction ran out of monomials");
    gens.insert(gens.end(), standard.begin(), standard.begin() + cut);
  }
  MonomialIdeal I(nvars, std::move(gens));
  if (hilbert_function(I) != h)
    throw InternalError("almost revlex construction missed the Hilbert function");
  return I;
}

MonomialIdeal lex_ideal_from_hilbert(const OSequence& h, int nvars) {
  if (h.at(0) != 1)
    throw CharacterizationError("h = " + to_string(h) + " is not an O-sequence: h_0 != 1");
  for (int d = 0; d < h.size(); ++d)
    if (h.at(d) <= 0)
      throw CharacterizationError("h = " + to_string(h) + " is not an O-sequence: zero entry");
  if (h.size() >= 2 && h.at(1) > nvars)
    throw DimensionError("h_1 = " + std::to_string(h.at(1)) + " exceeds " +
                         std::to_string(nvars) + " variables");

  std::vector<Monomial> gens;
  const int c = h.socle_degree();
  for (int d = 1; d <= c + 1; ++d) {
    auto all = monomials_of_degree(nvars, d);
    std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) {
      return compare(TermOrder::lex, a, b) == std::strong_ordering::greater;
    });
    const long long segment = static_cast<long long>(all.size()) - h.at(d);
    if (segment < 0)
      throw CharacterizationError("h = " + to_string(h) +
                                  " is not an O-sequence: h_" + std::to_string(d) +
                                  " exceeds the space of degree-" + std::to_string(d) +
                                  " monomials");
    for (long long idx = 0; idx < static_cast<long long>(all.size()); ++idx) {
      const bool forced = divisible_by_any(gens, all[idx]);
      if (idx < segment) {
        if (!forced) gens.push_back(all[idx]);
      } else if (forced) {
        // The ideal already exceeds the lex segment: h grows faster than
        // Macaulay's bound allows.
        throw CharacterizationError("h = " + to_string(h) +
                                    " is not an O-sequence: infeasible at degree " +
                                    std::to_string(d));
      }
    }
  }
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal phi_inverse(const MonomialIdeal& Ibar, const OSequence& h) {
  const int nb = Ibar.nvars();
  const int n = nb + 1;
  if (n > max_vars) throw ConfigError("variable count exceeds limit");
  if (!is_artinian(Ibar))
    throw NonArtinianError("phi inverse requires an Artinian base ideal");
  if (auto level = k_lefschetz_failure_level(h, n, 1))
    throw_inadmissible(h, n, 1, *level);
  const OSequence dh = delta(h, 1);
  if (hilbert_function(Ibar) != dh)
    throw CharacterizationError("Hilbert mismatch: delta(h) = " + to_string(dh) +
                                " but the base ideal has Hilbert function " +
                                to_string(hilbert_function(Ibar)));

  // Standard monomials of Ibar in grevlex ascending order.
  std::vector<Monomial> vs;
  for (auto& level : standard_monomials_by_degree(Ibar))
    for (auto it = level.rbegin(); it != level.rend(); ++it) vs.push_back(*it);

  const ChainProfile profile = chain_profile(h);
  if (profile.intervals.size() != vs.size())
    throw CharacterizationError("start-degree mismatch between chain profile and base");

  std::vector<Monomial> gens;
  for (const auto& g : Ibar.generators()) gens.push_back(g.extend_vars(1));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto [start, end] = profile.intervals[i];
    if (vs[i].degree() != start)
      throw CharacterizationError("start-degree mismatch between chain profile and base");
    // Intervals with equal start come end-descending while the bases come
    // grevlex-ascending, so smaller bases receive the longer chains.
    gens.push_back(vs[i].extend_vars(1).times_var(n - 1, end - start + 1));
  }
  MonomialIdeal I(n, std::move(gens));
  if (hilbert_function(I) != h)
    throw InternalError("phi inverse missed the Hilbert function");
  return I;
}

MonomialIdeal borel_tower_from_hilbert(const OSequence& h, int nvars, int k) {
  if (k < 1 || k > nvars)
    throw DimensionError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(nvars) + "]");
  if (auto level = k_lefschetz_failure_level(h, nvars, k))
    throw_inadmissible(h, nvars, k, *level);

  // A one-variable base is enough when k = n; Borel-fixed ideals of K[x]
  // are unique anyway.
  const int steps = std::min(k, nvars - 1);
  std::vector<OSequence> tower{h};
  for (int t = 1; t <= steps; ++t) tower.push_back(delta(tower.back(), 1));
  MonomialIdeal I = lex_ideal_from_hilbert(tower[steps], nvars - steps);
  for (int t = steps - 1; t >= 0; --t) I = phi_inverse(I, tower[t]);
  return I;
}

std::vector<MonomialIdeal> enumerate_borel_fixed(const OSequence& h, int nvars,
                                                 BorelFilter filter, int k) {
  if (nvars > 5 || h.socle_degree() > 8 || h.max_value() > 30)
    throw ResourceError("Borel enumeration bounds exceeded (n <= 5, socle <= 8, values <= 30)");
  if (filter == BorelFilter::k_slp && (k < 1 || k > nvars))
    throw DimensionError("k-SLP filter requires k in [1, n]");
  std::vector<MonomialIdeal> out;
  if (h.at(0) != 1) return out;

  const int c = h.socle_degree();
  long long budget = 20'000'000;

  // standard[d] is the chosen standard stratum of degree d.
  std::vector<std::vector<Monomial>> standard(c + 1);
  standard[0] = {Monomial(nvars)};

  std::function<void(int)> descend = [&](int d) {
    if (--budget < 0) throw ResourceError("Borel enumeration node budget exceeded");
    if (d > c) {
      // Close up at degree c+1; generators are the non-standard monomials
      // with all divisors standard.
      std::vector<Monomial> gens;
      for (int e = 1; e <= c + 1; ++e)
        for (const auto& m : monomials_of_degree(nvars, e)) {
          bool in_level = e <= c && std::find(standard[e].begin(), standard[e].end(),
                                              m) != standard[e].end();
          if (!in_level && !divisible_by_any(gens, m)) gens.push_back(m);
        }
      MonomialIdeal I(nvars, std::move(gens));
      bool keep = true;
      switch (filter) {
        case BorelFilter::none: break;
        case BorelFilter::wl: keep = lefschetz_conditions(I).wl; break;
        case BorelFilter::sl: keep = lefschetz_conditions(I).sl; break;
        case BorelFilter::k_slp:
          keep = k_lefschetz_last_vars(I, k, LefschetzMode::strong);
          break;
      }
      if (keep) out.push_back(std::move(I));
      return;
    }

    // Candidates: monomials whose divisors all sit in the previous stratum.
    std::vector<Monomial> cand;
    for (const auto& m : monomials_of_degree(nvars, d)) {
      bool ok = true;
      for (int i = 0; i < nvars && ok; ++i) {
        if (m[i] == 0) continue;
        Monomial q = m.quotient_by(Monomial::variable(nvars, i));
        ok = std::find(standard[d - 1].begin(), standard[d - 1].end(), q) !=
             standard[d - 1].end();
      }
      if (ok) cand.push_back(m);
    }
    const int need = h.at(d);
    if (static_cast<int>(cand.size()) < need) return;
    // Grevlex ascending: the Borel moves of a candidate precede it.
    std::sort(cand.begin(), cand.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_less(a, b); });
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(cand.size()); ++i)
      index[cand[i].exponents()] = i;

    // cover_of[i]: indices of single right-moves x_j*m/x_i, all earlier.
    std::vector<std::vector<int>> cover_of(cand.size());
    for (int i = 0; i < static_cast<int>(cand.size()); ++i)
      for (int a = 0; a < nvars; ++a) {
        if (cand[i][a] == 0) continue;
        for (int b = a + 1; b < nvars; ++b) {
          Monomial moved =
              cand[i].quotient_by(Monomial::variable(nvars, a)).times_var(b);
          auto it = index.find(moved.exponents());
          if (it == index.end())
            throw InternalError("Borel closure left the candidate set");
          cover_of[i].push_back(it->second);
        }
      }

    std::vector<char> chosen(cand.size(), 0);
    std::function<void(int, int)> pick = [&](int idx, int count) {
      if (--budget < 0) throw ResourceError("Borel enumeration node budget exceeded");
      if (count == need) {
        standard[d].clear();
        for (int i = 0; i < static_cast<int>(cand.size()); ++i)
          if (chosen[i]) standard[d].push_back(cand[i]);
        descend(d + 1);
        return;
      }
      if (idx >= static_cast<int>(cand.size())) return;
      if (count + static_cast<int>(cand.size()) - idx < need) return;
      bool closed = true;
      for (int cov : cover_of[idx])
        if (!chosen[cov]) { closed = false; break; }
      if (closed) {
        chosen[idx] = 1;
        pick(idx + 1, count + 1);
        chosen[idx] = 0;
      }
      pick(idx + 1, count);
    };
    pick(0, 0);
  };
  descend(1);

  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

} // namespace leflab
