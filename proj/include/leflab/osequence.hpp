#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leflab {

// Hilbert-function data h_0, h_1, ..., h_c.  Trailing zeros are stripped on
// construction so the socle degree is always meaningful.  Interior zeros can
// occur in difference sequences; the O-sequence test rejects them.
class OSequence {
public:
  OSequence() : h_{1} {}
  explicit OSequence(std::vector<int> values);

  int socle_degree() const { return static_cast<int>(h_.size()) - 1; }
  int size() const { return static_cast<int>(h_.size()); }
  // h_d, zero outside the support.
  int at(int d) const {
    return (d >= 0 && d < size()) ? h_[d] : 0;
  }
  const std::vector<int>& values() const { return h_; }
  long long sum() const;
  int max_value() const;

  bool operator==(const OSequence& o) const { return h_ == o.h_; }
  bool operator!=(const OSequence& o) const { return h_ != o.h_; }
  bool operator<(const OSequence& o) const { return h_ < o.h_; }

private:
  std::vector<int> h_;
};

// u[0] = u_1 marks where the strict increase stops; u[1], u[2], ... are the
// strict-drop indices u_2, u_3, ...
struct Breakpoints {
  std::vector<int> u;
};

// Degree intervals [start, end], sorted by (start asc, end desc); interval i
// is {d : h_d >= i}.
struct ChainProfile {
  std::vector<std::pair<int, int>> intervals;
};

// Macaulay growth test: h_0 = 1, positive entries, and
// h_{d+1} <= h_d^<d> for all d >= 1.
bool is_o_sequence(const OSequence& h);

// d-th Macaulay upper bound for the next value.
long long macaulay_bound(long long value, int d);

// Clamped backward difference applied k times, trailing zeros stripped after
// each application.  k = 0 returns h.
OSequence delta(const OSequence& h, int k = 1);

// Parses the strict unimodal pattern h_0 < ... < h_{u_1} = ... = h_{u_2-1} >
// h_{u_2} = ...; nullopt when h does not fit (plateau before the peak or any
// later increase).
std::optional<Breakpoints> unimodal_breakpoints(const OSequence& h);

inline bool is_unimodal(const OSequence& h) {
  return unimodal_breakpoints(h).has_value();
}

// Throws ShapeError on non-unimodal input.
Breakpoints breakpoints(const OSequence& h);

bool is_quasi_symmetric(const OSequence& h);

// Hilbert-function characterization of the k-SLP/k-WLP in n variables:
// h and its first k-1 differences are unimodal O-sequences and the k-th
// difference is an O-sequence.  h_1 may be below n (embedding dimension
// smaller than the ambient ring); h_1 > n is a dimension error.
bool admits_k_lefschetz(const OSequence& h, int n, int k);

// Smallest t whose condition fails (t in [0, k]); nullopt when admissible.
std::optional<int> k_lefschetz_failure_level(const OSequence& h, int n, int k);

// Horizontal-strip profile; throws ShapeError on non-unimodal input.
ChainProfile chain_profile(const OSequence& h);

// All Hilbert functions of n-variable graded Artinian algebras with the
// n-SLP, within the given socle/value bounds, generated by the partial-sum
// plus weakly-decreasing-tail manipulation applied n-1 times to (1,...,1).
std::vector<OSequence> enumerate_nslp_hilbert(int n, int max_socle, int max_value);

std::string to_string(const OSequence& h);

} // namespace leflab
