#include "leflab/groebner.hpp"

#include <algorithm>
#include <set>

namespace leflab {

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  // f, g monic
  const Monomial m = f.leading_monomial().lcm(g.leading_monomial());
  return sub(mul_term(f, m.quotient_by(f.leading_monomial()), 1),
             mul_term(g, m.quotient_by(g.leading_monomial()), 1));
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial rem(f.nvars(), f.prime());
  Polynomial work = f;
  while (!work.is_zero()) {
    const Monomial& lm = work.leading_monomial();
    const std::uint32_t lc = work.leading_coefficient();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      // basis elements are monic
      work = sub(work, mul_term(*reducer, lm.quotient_by(reducer->leading_monomial()), lc));
    } else {
      Polynomial head(f.nvars(), f.prime());
      head.add_term(lm, lc);
      rem = add(rem, head);
      work = sub(work, head);
    }
  }
  return rem;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw ConfigError("empty generator list");
  const int nvars = gens[0].nvars();
  const std::uint32_t prime = gens[0].prime();
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("generator variable counts differ");
    if (g.prime() != prime) throw ConfigError("generator primes differ");
  }

  std::vector<Polynomial> G;
  struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      auto c = compare(TermOrder::grevlex, lcm, o.lcm);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> pending;

  auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      Monomial l = G[i].leading_monomial().lcm(G[t].leading_monomial());
      queue.insert(PairKey{l.degree(), l, i, t});
      pending.insert({i, t});
    }
  };

  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    Polynomial r = reduce_full(f, G);
    if (r.is_zero()) continue;
    G.push_back(monic(r));
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Monomial& li = G[pk.i].leading_monomial();
    const Monomial& lj = G[pk.j].leading_monomial();
    // coprimality criterion
    if (pk.lcm.degree() == li.degree() + lj.degree()) continue;
    // chain criterion: some other element divides the lcm and both side
    // pairs have already been handled
    bool skip = false;
    for (int t = 0; t < static_cast<int>(G.size()) && !skip; ++t) {
      if (t == pk.i || t == pk.j) continue;
      if (!G[t].leading_monomial().divides(pk.lcm)) continue;
      auto a = std::minmax(pk.i, t);
      auto b = std::minmax(pk.j, t);
      if (!pending.count({a.first, a.second}) && !pending.count({b.first, b.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial r = reduce_full(spoly(G[pk.i], G[pk.j]), G);
    if (r.is_zero()) continue;
    G.push_back(monic(r));
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  // Tail-reduce each element against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t t = 0; t < minimal.size(); ++t)
      if (t != i) others.push_back(minimal[t]);
    minimal[i] = monic(reduce_full(minimal[i], others));
  }
  return GroebnerBasis{nvars, prime, std::move(minimal)};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.nvars() != gb.nvars || f.prime() != gb.prime)
    throw DimensionError("polynomial does not match the basis ring");
  return reduce_full(f, gb.basis);
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.basis.size());
  for (const auto& g : gb.basis) lts.push_back(g.leading_monomial());
  return MonomialIdeal(gb.nvars, std::move(lts));
}

OSequence quotient_hilbert(const std::vector<Polynomial>& gens) {
  return hilbert_function(initial_ideal(buchberger(gens)));
}

} // namespace leflab
