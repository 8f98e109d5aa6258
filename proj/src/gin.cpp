#include "leflab/gin.hpp"

#include <algorithm>
#include <functional>

#include "leflab/matrix.hpp"

namespace leflab {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::vector<std::uint32_t>> random_invertible_matrix(
    int n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  while (true) {
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n));
    for (auto& row : m)
      for (auto& v : row) v = dist(rng);
    if (rank_modp(m, p) == n) return m;
  }
}

Polynomial apply_linear_change(const Polynomial& f,
                               const std::vector<std::vector<std::uint32_t>>& g) {
  const int n = f.nvars();
  std::vector<Polynomial> image;
  image.reserve(n);
  for (int j = 0; j < n; ++j) {
    Polynomial lin(n, f.prime());
    for (int i = 0; i < n; ++i)
      lin.add_term(Monomial::variable(n, i), g[i][j]);
    image.push_back(std::move(lin));
  }
  // power cache per variable
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](int j, int e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) {
      Polynomial one(n, f.prime());
      one.add_term(Monomial(n), 1);
      cache.push_back(std::move(one));
    }
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul(cache.back(), image[j]));
    return cache[e];
  };

  Polynomial out(n, f.prime());
  for (const auto& [m, c] : f.terms()) {
    Polynomial term(n, f.prime());
    term.add_term(Monomial(n), c);
    for (int j = 0; j < n; ++j)
      if (m[j] > 0) term = mul(term, power_of(j, m[j]));
    out = add(out, term);
  }
  return out;
}

Polynomial random_homogeneous(int nvars, int degree, std::uint32_t prime,
                              std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, prime - 1);
  while (true) {
    Polynomial f(nvars, prime);
    for (const auto& m : monomials_of_degree(nvars, degree))
      f.add_term(m, dist(rng));
    if (!f.is_zero()) return f;
  }
}

namespace {

void check_input(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw ConfigError("empty generator list");
  for (const auto& f : gens) {
    if (f.is_zero()) throw ConfigError("zero generator");
    if (!f.is_homogeneous())
      throw HypothesisError("graded input required: generator " + to_string(f) +
                            " is not homogeneous");
  }
}

} // namespace

GinReport random_gin(const std::vector<Polynomial>& gens, int samples,
                     std::uint64_t seed) {
  check_input(gens);
  if (samples < 2) throw ConfigError("at least two gin samples required");
  const int n = gens[0].nvars();
  const std::uint32_t p = gens[0].prime();

  const OSequence h = quotient_hilbert(gens); // also enforces Artinian input

  GinReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.prime = p;
  std::vector<MonomialIdeal> results;
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng(split_seed(seed, s));
    auto g = random_invertible_matrix(n, p, rng);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const auto& f : gens) moved.push_back(apply_linear_change(f, g));
    MonomialIdeal in = initial_ideal(buchberger(moved));
    if (hilbert_function(in) != h)
      throw InternalError("Hilbert function drifted under a linear change");
    results.push_back(std::move(in));
  }
  rep.agreements = static_cast<int>(
      std::count(results.begin(), results.end(), results[0]));
  if (rep.agreements == samples) rep.candidate = results[0];
  return rep;
}

namespace {

OSequence clamp_difference(const OSequence& h, int s) {
  std::vector<int> v(h.size());
  for (int t = 0; t < h.size(); ++t)
    v[t] = std::max(h.at(t) - (t >= s ? h.at(t - s) : 0), 0);
  return OSequence(std::move(v));
}

} // namespace

bool generic_lefschetz(const std::vector<Polynomial>& gens, int k,
                       LefschetzMode mode, int trials, std::uint64_t seed,
                       bool fixed_last_vars) {
  check_input(gens);
  const int n = gens[0].nvars();
  const std::uint32_t p = gens[0].prime();
  if (k < 1 || k > n)
    throw DimensionError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(n) + "]");
  if (trials < 1) throw ConfigError("at least one trial required");
  quotient_hilbert(gens); // Artinian check

  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(split_seed(seed, trial));
    std::vector<Polynomial> forms;
    for (int i = 0; i < k; ++i) {
      if (fixed_last_vars) {
        Polynomial form(n, p);
        form.add_term(Monomial::variable(n, n - 1 - i), 1);
        forms.push_back(std::move(form));
      } else {
        Polynomial form(n, p);
        while (form.is_zero())
          for (int v = 0; v < n; ++v)
            form.add_term(Monomial::variable(n, v), dist(rng));
        forms.push_back(std::move(form));
      }
    }

    bool pass = true;
    std::vector<Polynomial> base = gens;
    for (int i = 0; i < k && pass; ++i) {
      const OSequence h = quotient_hilbert(base);
      const int smax = mode == LefschetzMode::strong ? h.socle_degree() : 1;
      for (int s = 1; s <= smax && pass; ++s) {
        std::vector<Polynomial> probe = base;
        probe.push_back(pow(forms[i], s));
        pass = quotient_hilbert(probe) == clamp_difference(h, s);
      }
      base.push_back(forms[i]);
    }
    if (pass) return true; // a full-rank draw certifies
  }
  return false;
}

Polynomial symmetric_fixture(SymmetricKind kind, int index, int power, int nvars,
                             std::uint32_t prime) {
  if (power < 1) throw ConfigError("power must be positive");
  if (index < 1 || (kind == SymmetricKind::elementary && index > nvars))
    throw DimensionError("symmetric function index out of range");
  Polynomial f(nvars, prime);
  if (kind == SymmetricKind::power_sum) {
    for (int v = 0; v < nvars; ++v)
      f.add_term(Monomial::variable(nvars, v, index * power), 1);
    return f;
  }
  // elementary: sum over index-subsets of products of x_v^power
  std::vector<int> pick(index);
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == index) {
      Monomial m(nvars);
      for (int v : pick) m = m.times_var(v, power);
      f.add_term(m, 1);
      return;
    }
    for (int v = start; v <= nvars - (index - chosen); ++v) {
      pick[chosen] = v;
      rec(v + 1, chosen + 1);
    }
  };
  rec(0, 0);
  return f;
}

} // namespace leflab
