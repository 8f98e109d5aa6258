#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "leflab/groebner.hpp"
#include "util.hpp"

using namespace leflab;
using namespace testutil;

namespace {

std::vector<Polynomial> polys(const std::string& s, int nvars,
                              std::uint32_t p = default_prime) {
  return parse_polynomials(s, nvars, p);
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
  Polynomial f = polys("x1^2 - x2^2", 2)[0];
  CHECK(f.term_count() == 2);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(to_string(f.leading_monomial()) == "x1^2");
  Polynomial g = add(f, f);
  CHECK(g.leading_coefficient() == 2);
  CHECK(sub(f, f).is_zero());
  Polynomial sq = mul(f, f);
  CHECK(sq.term_count() == 3);
  CHECK(pow(f, 3) == mul(sq, f));
  CHECK_FALSE(polys("x1 + x2^2", 2)[0].is_homogeneous());
}

TEST_CASE("buchberger on monomial generators returns them") {
  auto gb = buchberger(polys("x1^3, x2^3, x3^3", 3));
  CHECK(gb.basis.size() == 3);
  CHECK(initial_ideal(gb) == ideal("x1^3, x2^3, x3^3", 3));
}

TEST_CASE("buchberger resolves the one-pair example") {
  auto gb = buchberger(polys("x1^2, x1*x2 + x2^2", 2));
  REQUIRE(gb.basis.size() == 3);
  CHECK(initial_ideal(gb) == ideal("x1^2, x1*x2, x2^3", 2));
  // x2^3 itself reduces to zero
  Polynomial probe = polys("x2^3", 2)[0];
  CHECK(normal_form(probe, gb).is_zero());
}

TEST_CASE("buchberger reduces linear substitutions") {
  auto gb = buchberger(polys("x1 - x2, x2^2", 2));
  CHECK(initial_ideal(gb) == ideal("x1, x2^2", 2));
  CHECK(gb.basis.size() == 2);
}

TEST_CASE("reduced basis is independent of generator order") {
  std::mt19937_64 rng(5);
  auto gens = polys("x1^2 + x2*x3, x2^2 - x1*x3, x3^3, x1*x2*x3 - x3^3", 3);
  auto reference = buchberger(gens);
  for (int rep = 0; rep < 6; ++rep) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto gb = buchberger(gens);
    REQUIRE(gb.basis.size() == reference.basis.size());
    for (std::size_t t = 0; t < gb.basis.size(); ++t)
      CHECK(gb.basis[t] == reference.basis[t]);
  }
}

TEST_CASE("normal form decides membership, cross-checked on monomial ideals") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    MonomialIdeal I = random_artinian_ideal(rng, 3, 4);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
      Polynomial f(3, default_prime);
      f.add_term(g, 1);
      gens.push_back(f);
    }
    auto gb = buchberger(gens);
    for (int d = 0; d <= 5; ++d)
      for (const auto& m : monomials_of_degree(3, d)) {
        Polynomial probe(3, default_prime);
        probe.add_term(m, 1);
        CHECK(normal_form(probe, gb).is_zero() == is_member(I, m));
      }
  }
}

TEST_CASE("quotient Hilbert functions of complete intersections") {
  CHECK(quotient_hilbert(polys("x1^2, x2^2, x3^2", 3)) == hseq("1,3,3,1"));
  CHECK(quotient_hilbert(polys("x1^3, x2^3, x3^3", 3)) == hseq("1,3,6,7,6,3,1"));
  CHECK(quotient_hilbert(polys("x1, x2, x3", 3)) == hseq("1"));
  CHECK_THROWS_AS(quotient_hilbert(polys("x1^2, x2^2", 3)), NonArtinianError);
}

TEST_CASE("quotient Hilbert sees through non-monomial generators") {
  // (x1^2 - x2^2, x2^2 - x3^2, x1*x2, x2*x3, x1*x3) cuts out h = (1,3,1)
  auto h = quotient_hilbert(
      polys("x1^2 - x2^2, x2^2 - x3^2, x1*x2, x2*x3, x1*x3", 3));
  CHECK(h == hseq("1,3,1"));
}
