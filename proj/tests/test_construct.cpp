#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "leflab/chains.hpp"
#include "util.hpp"

using namespace leflab;
using namespace testutil;

namespace {

std::vector<OSequence> all_sequences(int max_h1, int max_socle, int max_value) {
  std::vector<OSequence> out;
  out.push_back(hseq("1"));
  std::vector<int> cur{1};
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) > max_socle) return;
    const int bound = cur.size() == 1 ? max_h1 : max_value;
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      out.emplace_back(cur);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

} // namespace

TEST_CASE("almost revlex construction hits the worked examples") {
  CHECK(almost_revlex_from_hilbert(hseq("1,3,4,3,1"), 3) == borel_wlp_I());
  CHECK(almost_revlex_from_hilbert(hseq("1,3,3,2"), 3) == stable_slp_I());
  CHECK(almost_revlex_from_hilbert(hseq("1"), 3) == ideal("x1, x2, x3", 3));
  CHECK_THROWS_AS(almost_revlex_from_hilbert(hseq("1,3,2,3"), 3),
                  CharacterizationError);
}

TEST_CASE("almost revlex output certifies and is deterministic") {
  for (const char* hs : {"1,3,4,3,1", "1,3,3,2", "1,2,3,4,2", "1,3,6,7,6,3,1"}) {
    OSequence h = hseq(hs);
    MonomialIdeal A = almost_revlex_from_hilbert(h, 3);
    MonomialIdeal B = almost_revlex_from_hilbert(h, 3);
    CHECK(A == B);
    CHECK(hilbert_function(A) == h);
    auto r = classify_stability(A);
    CHECK(r.almost_revlex);
    CHECK(r.borel_fixed);
    CHECK(k_lefschetz_last_vars(A, 3, LefschetzMode::strong));
  }
}

TEST_CASE("lex-segment construction hits the worked examples") {
  CHECK(lex_ideal_from_hilbert(hseq("1,2,1"), 2) == ideal("x1^2, x1*x2, x2^3", 2));
  CHECK(lex_ideal_from_hilbert(hseq("1,3,3"), 3) ==
        ideal("x1^2, x1*x2, x1*x3, x2^3, x2^2*x3, x2*x3^2, x3^3", 3));
  CHECK(lex_ideal_from_hilbert(hseq("1"), 2) == ideal("x1, x2", 2));
  CHECK_THROWS_AS(lex_ideal_from_hilbert(hseq("1,2,4"), 2), CharacterizationError);
}

TEST_CASE("lex-segment ideals are strongly stable; two variables collapse") {
  for (const char* hs : {"1,3,4,3,1", "1,3,3", "1,2,2,1", "1,3,5,5"}) {
    OSequence h = hseq(hs);
    MonomialIdeal L = lex_ideal_from_hilbert(h, 3);
    CHECK(hilbert_function(L) == h);
    CHECK(classify_stability(L).strongly_stable);
  }
  // in two variables the strongly stable ideal for h is unique, so the lex
  // and almost revlex constructions agree
  for (const char* hs : {"1,2,1", "1,2,2,1", "1,2,3,2", "1,1,1"}) {
    OSequence h = hseq(hs);
    if (!admits_k_lefschetz(h, 2, 2)) continue;
    CHECK(lex_ideal_from_hilbert(h, 2) == almost_revlex_from_hilbert(h, 2));
  }
}

TEST_CASE("phi inverse reproduces the worked lifts") {
  CHECK(phi_inverse(ideal("x1^2, x1*x2, x2^3", 2), hseq("1,3,4,3,1")) ==
        borel_wlp_I());
  CHECK(phi_inverse(ideal("x1^2, x1*x2, x2^2", 2), hseq("1,3,3,2")) ==
        stable_slp_I());
  CHECK(phi_inverse(ideal("x1", 1), hseq("1,1,1")) == ideal("x1, x2^3", 2));
}

TEST_CASE("phi inverse validates its inputs") {
  CHECK_THROWS_AS(phi_inverse(ideal("x1^2, x1*x2, x2^3", 2), hseq("1,3,3,2")),
                  CharacterizationError); // delta mismatch
  CHECK_THROWS_AS(phi_inverse(ideal("x1^2", 2), hseq("1,3,3")),
                  NonArtinianError);
}

TEST_CASE("phi inverse round trips") {
  for (const char* hs : {"1,3,4,3,1", "1,3,3,2", "1,3,5,4,2", "1,2,2,2,1"}) {
    OSequence h = hseq(hs);
    if (!admits_k_lefschetz(h, 3, 1)) continue;
    MonomialIdeal base = almost_revlex_from_hilbert(delta(h, 1), 2);
    MonomialIdeal lifted = phi_inverse(base, h);
    CHECK(intersect_subring(lifted, 1) == base);
    CHECK(hilbert_function(lifted) == h);
    CHECK(lefschetz_conditions(lifted).sl);
    CHECK(classify_stability(lifted).strongly_stable);
  }
}

TEST_CASE("borel tower matches the unique almost revlex ideal at k = n") {
  CHECK(borel_tower_from_hilbert(hseq("1,3,4,3,1"), 3, 3) ==
        almost_revlex_from_hilbert(hseq("1,3,4,3,1"), 3));
  CHECK(borel_tower_from_hilbert(hseq("1"), 2, 1) == ideal("x1, x2", 2));
}

TEST_CASE("borel tower carries the five-variable example") {
  OSequence h = hseq("1,5,13,20,13,5,1");
  MonomialIdeal I = borel_tower_from_hilbert(h, 5, 5);
  CHECK(hilbert_function(I) == h);
  CHECK(classify_stability(I).strongly_stable);
  CHECK(k_lefschetz_last_vars(I, 5, LefschetzMode::strong));
}

TEST_CASE("borel tower certificate across admissible sequences") {
  for (const auto& h : all_sequences(3, 4, 8)) {
    for (int k = 1; k <= 3; ++k) {
      const bool admissible = admits_k_lefschetz(h, 3, k);
      bool built = true;
      try {
        MonomialIdeal I = borel_tower_from_hilbert(h, 3, k);
        CHECK(hilbert_function(I) == h);
        CHECK(classify_stability(I).borel_fixed);
        CHECK(k_lefschetz_last_vars(I, k, LefschetzMode::strong));
      } catch (const CharacterizationError&) {
        built = false;
      }
      CHECK(admissible == built);
    }
  }
}

TEST_CASE("borel enumeration separates the WL pair") {
  OSequence h = hseq("1,3,4,3,1");
  auto wl = enumerate_borel_fixed(h, 3, BorelFilter::wl);
  CHECK(std::find(wl.begin(), wl.end(), borel_wlp_I()) != wl.end());
  CHECK(std::find(wl.begin(), wl.end(), borel_wlp_J()) != wl.end());
  CHECK(wl.size() >= 2);

  auto sl = enumerate_borel_fixed(h, 3, BorelFilter::sl);
  REQUIRE(sl.size() == 1);
  CHECK(sl[0] == borel_wlp_I());
  CHECK(sl[0] == almost_revlex_from_hilbert(h, 3));
}

TEST_CASE("borel enumeration finds the four-variable pair") {
  auto got = enumerate_borel_fixed(hseq("1,4,8,7"), 4, BorelFilter::k_slp, 4);
  CHECK(std::find(got.begin(), got.end(), four_var_I()) != got.end());
  CHECK(std::find(got.begin(), got.end(), four_var_J()) != got.end());
  CHECK(got.size() >= 2);
}

TEST_CASE("every enumerated ideal is strongly stable with the right h") {
  for (const char* hs : {"1,3,4,3,1", "1,3,3,2", "1,2,2"}) {
    OSequence h = hseq(hs);
    auto all = enumerate_borel_fixed(h, 3, BorelFilter::none);
    CHECK(!all.empty());
    for (const auto& I : all) {
      CHECK(hilbert_function(I) == h);
      CHECK(classify_stability(I).strongly_stable);
    }
    // deterministic order
    auto again = enumerate_borel_fixed(h, 3, BorelFilter::none);
    CHECK(all.size() == again.size());
    for (std::size_t t = 0; t < all.size(); ++t) CHECK(all[t] == again[t]);
  }
}

TEST_CASE("quasi-symmetric h makes the subring map injective on sl ideals") {
  for (const char* hs : {"1,3,4,3,1", "1,3,3,1", "1,2,2,2,1", "1,3,4,4,3,1"}) {
    OSequence h = hseq(hs);
    if (!is_quasi_symmetric(h) || !admits_k_lefschetz(h, 3, 1)) continue;
    auto sl = enumerate_borel_fixed(h, 3, BorelFilter::sl);
    std::set<std::string> images;
    for (const auto& I : sl)
      images.insert(to_string(intersect_subring(I, 1)));
    CHECK(images.size() == sl.size());
  }
}

TEST_CASE("uniqueness of Borel-fixed n-SLP ideals under quasi-symmetric differences") {
  // four variables: h itself quasi-symmetric suffices
  for (const char* hs : {"1,4,7,4,1", "1,4,4,4,1"}) {
    OSequence h = hseq(hs);
    if (!admits_k_lefschetz(h, 4, 4)) continue;
    REQUIRE(is_quasi_symmetric(h));
    auto got = enumerate_borel_fixed(h, 4, BorelFilter::k_slp, 4);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == almost_revlex_from_hilbert(h, 4));
  }
}

TEST_CASE("almost revlex feasibility equals n-SLP admissibility, exhaustively") {
  for (const auto& h : all_sequences(3, 4, 9)) {
    bool ok = true;
    try {
      almost_revlex_from_hilbert(h, 3);
    } catch (const CharacterizationError&) {
      ok = false;
    }
    CHECK(ok == admits_k_lefschetz(h, 3, 3));
  }
}

TEST_CASE("enumeration bounds are enforced") {
  CHECK_THROWS_AS(enumerate_borel_fixed(hseq("1,6"), 6, BorelFilter::none),
                  ResourceError);
}
