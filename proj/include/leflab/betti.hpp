#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "leflab/ideal.hpp"

namespace leflab {

// Graded Betti numbers of a quotient ring: entries map (i, j) to
// beta_{i,i+j}.  Zero entries are not stored.
class BettiTable {
public:
  explicit BettiTable(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  long long get(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? 0 : it->second;
  }
  void add(int i, int j, long long v);
  const std::map<std::pair<int, int>, long long>& entries() const { return e_; }

  long long generator_count() const; // sum of beta_{1,1+j}
  int max_homological_index() const;

  bool operator==(const BettiTable& o) const {
    return nvars_ == o.nvars_ && e_ == o.e_;
  }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

private:
  int nvars_;
  std::map<std::pair<int, int>, long long> e_;
};

// a <= b entrywise.
bool entrywise_leq(const BettiTable& a, const BettiTable& b);

// Macaulay-style grid, rows j and columns i.
std::string to_grid(const BettiTable& t);

// c_j = max(h_{j-1} - h_j, 0), with h_{-1} = 0; nonzero entries only.
struct CSequence {
  std::map<int, long long> c;
  long long at(int j) const {
    auto it = c.find(j);
    return it == c.end() ? 0 : it->second;
  }
};

CSequence c_from_hilbert(const OSequence& h);

// Eliahou-Kervaire formula; requires a stable ideal.
BettiTable betti_ek(const MonomialIdeal& I);

// m-full peeling recursion along the last variable; requires m-fullness at
// every level down to one variable.
BettiTable betti_mfull(const MonomialIdeal& I);

// Closed form for Borel-fixed ideals with the k-WLP: the base table of the
// (n-k)-variable intersection plus binomial multiples of the difference
// c-sequences.  base is ignored for k = n.
BettiTable betti_kwlp_closed_form(const OSequence& h, int nvars, int k,
                                  const std::optional<BettiTable>& base);

// Sharp upper bound over all algebras with the k-WLP and Hilbert function h;
// attained by the Borel tower ideal.
BettiTable betti_upper_bound(const OSequence& h, int nvars, int k);

// Independent oracle: ranks of the Koszul complex boundary maps over the
// rationals, graded strand by strand.
BettiTable betti_koszul(const MonomialIdeal& I);

} // namespace leflab
