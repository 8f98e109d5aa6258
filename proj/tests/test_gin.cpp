#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leflab/gin.hpp"
#include "util.hpp"

using namespace leflab;
using namespace testutil;

namespace {

std::vector<Polynomial> polys(const std::string& s, int nvars,
                              std::uint32_t p = default_prime) {
  return parse_polynomials(s, nvars, p);
}

std::vector<Polynomial> as_polys(const MonomialIdeal& I,
                                 std::uint32_t p = default_prime) {
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) {
    Polynomial f(I.nvars(), p);
    f.add_term(g, 1);
    out.push_back(f);
  }
  return out;
}

} // namespace

TEST_CASE("split seeds are stable") {
  CHECK(split_seed(42, 0) != split_seed(42, 1));
  CHECK(split_seed(42, 3) == split_seed(42, 3));
}

TEST_CASE("symmetric fixtures") {
  CHECK(to_string(symmetric_fixture(SymmetricKind::elementary, 2, 1, 3,
                                    default_prime)) ==
        "x1*x2 + x1*x3 + x2*x3");
  CHECK(to_string(symmetric_fixture(SymmetricKind::power_sum, 3, 1, 3,
                                    default_prime)) ==
        "x1^3 + x2^3 + x3^3");
  CHECK(to_string(symmetric_fixture(SymmetricKind::elementary, 1, 4, 3,
                                    default_prime)) ==
        "x1^4 + x2^4 + x3^4");
  CHECK_THROWS_AS(symmetric_fixture(SymmetricKind::elementary, 4, 1, 3,
                                    default_prime),
                  DimensionError);
}

TEST_CASE("random linear changes preserve the Hilbert function") {
  std::mt19937_64 rng(8);
  auto gens = polys("x1^3, x2^3, x3^3", 3);
  OSequence h = quotient_hilbert(gens);
  for (int rep = 0; rep < 3; ++rep) {
    auto g = random_invertible_matrix(3, default_prime, rng);
    std::vector<Polynomial> moved;
    for (const auto& f : gens) moved.push_back(apply_linear_change(f, g));
    CHECK(quotient_hilbert(moved) == h);
  }
}

TEST_CASE("gin of a Borel-fixed ideal is the ideal itself") {
  GinReport rep = random_gin(as_polys(borel_wlp_I()), 3, 7);
  REQUIRE(rep.candidate.has_value());
  CHECK(*rep.candidate == borel_wlp_I());
  CHECK(rep.agreements == rep.samples);
  CHECK(classify_stability(*rep.candidate).strongly_stable);
}

TEST_CASE("gin of the cubes complete intersection is almost revlex") {
  GinReport rep = random_gin(polys("x1^3, x2^3, x3^3", 3), 3, 11);
  REQUIRE(rep.candidate.has_value());
  CHECK(*rep.candidate ==
        almost_revlex_from_hilbert(hseq("1,3,6,7,6,3,1"), 3));
  CHECK(classify_stability(*rep.candidate).strongly_stable);
}

TEST_CASE("gin rejects bad inputs") {
  CHECK_THROWS_AS(random_gin(polys("x1^2, x2^2", 3), 3, 1), NonArtinianError);
  CHECK_THROWS_AS(random_gin(polys("x1 + x2^2", 2), 3, 1), HypothesisError);
  CHECK_THROWS_AS(random_gin(polys("x1, x2", 2), 1, 1), ConfigError);
}

TEST_CASE("generic Lefschetz on complete intersections of quadrics") {
  CHECK(generic_lefschetz(polys("x1^2, x2^2, x3^2", 3), 1,
                          LefschetzMode::strong, 2, 5));
}

TEST_CASE("generic Lefschetz separates the Borel pair") {
  auto I = as_polys(borel_wlp_I());
  auto J = as_polys(borel_wlp_J());
  CHECK(generic_lefschetz(I, 1, LefschetzMode::strong, 2, 5));
  CHECK(generic_lefschetz(J, 1, LefschetzMode::weak, 2, 5));
  CHECK_FALSE(generic_lefschetz(J, 1, LefschetzMode::strong, 2, 5));
}

TEST_CASE("elementary symmetric squares have the strong property") {
  std::vector<Polynomial> gens{
      symmetric_fixture(SymmetricKind::elementary, 1, 2, 3, default_prime),
      symmetric_fixture(SymmetricKind::elementary, 2, 2, 3, default_prime),
      symmetric_fixture(SymmetricKind::elementary, 3, 2, 3, default_prime)};
  CHECK(generic_lefschetz(gens, 1, LefschetzMode::strong, 2, 5));
}

TEST_CASE("fixed last variables agree with the chain verdicts") {
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 12; ++rep) {
    MonomialIdeal I = random_artinian_ideal(rng, 3, 4);
    auto v = lefschetz_conditions(I);
    auto gens = as_polys(I);
    CHECK(v.sl == generic_lefschetz(gens, 1, LefschetzMode::strong, 1, 1, true));
    CHECK(v.wl == generic_lefschetz(gens, 1, LefschetzMode::weak, 1, 1, true));
  }
}

TEST_CASE("initial-ideal certificates transfer to the original ideal") {
  // quadric and cubic complete intersections: if the grevlex initial ideal
  // certifies the k-SLP along the last variables, the generic test on the
  // original ideal passes too
  std::mt19937_64 rng(321);
  for (int rep = 0; rep < 4; ++rep) {
    std::vector<Polynomial> gens{
        random_homogeneous(3, 2, default_prime, rng),
        random_homogeneous(3, 2, default_prime, rng),
        random_homogeneous(3, 2, default_prime, rng)};
    MonomialIdeal in(3);
    try {
      in = initial_ideal(buchberger(gens));
    } catch (const Error&) {
      continue;
    }
    if (!is_artinian(in)) continue;
    for (int k = 1; k <= 3; ++k)
      if (k_lefschetz_last_vars(in, k, LefschetzMode::strong))
        CHECK(generic_lefschetz(gens, k, LefschetzMode::strong, 3, 99));
  }
}
