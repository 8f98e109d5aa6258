#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leflab/binomial.hpp"
#include "util.hpp"

using namespace leflab;
using testutil::mono;

TEST_CASE("grevlex compares degree first, then last differing exponent") {
  CHECK(compare(TermOrder::grevlex, mono("x2^2*x3", 3), mono("x1*x3^2", 3)) ==
        std::strong_ordering::greater);
  CHECK(compare(TermOrder::grevlex, mono("x3^3", 3), mono("x1", 3)) ==
        std::strong_ordering::greater);
  CHECK(compare(TermOrder::grevlex, mono("x1*x2", 3), mono("x1*x2", 3)) ==
        std::strong_ordering::equal);
}

TEST_CASE("lex grades by degree first") {
  CHECK(compare(TermOrder::lex, mono("x1", 2), mono("x2^3", 2)) ==
        std::strong_ordering::less);
  CHECK(compare(TermOrder::lex, mono("x1*x2", 2), mono("x2^2", 2)) ==
        std::strong_ordering::greater);
}

TEST_CASE("comparing across variable counts is a dimension error") {
  CHECK_THROWS_AS(compare(TermOrder::grevlex, Monomial(2), Monomial(3)),
                  DimensionError);
}

TEST_CASE("orders are total and multiplicative") {
  std::mt19937_64 rng(7);
  for (int nvars : {2, 3, 4}) {
    for (int d = 1; d <= 4; ++d) {
      auto all = monomials_of_degree(nvars, d);
      // monomials_of_degree returns strictly descending grevlex
      for (std::size_t t = 0; t + 1 < all.size(); ++t)
        CHECK(grevlex_greater(all[t], all[t + 1]));
      // multiplicativity: u > v implies uw > vw
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int rep = 0; rep < 50; ++rep) {
        const Monomial& u = all[pick(rng)];
        const Monomial& v = all[pick(rng)];
        const Monomial& w = all[pick(rng)];
        for (auto order : {TermOrder::grevlex, TermOrder::lex}) {
          auto c = compare(order, u, v);
          CHECK(compare(order, u.times(w), v.times(w)) == c);
        }
      }
    }
  }
}

TEST_CASE("degree-d monomial census matches the binomial count") {
  for (int nvars : {1, 2, 3, 5})
    for (int d = 0; d <= 5; ++d)
      CHECK(static_cast<long long>(monomials_of_degree(nvars, d).size()) ==
            monomial_count(nvars, d));
}

TEST_CASE("monomial arithmetic basics") {
  Monomial m = mono("x1^2*x3", 3);
  CHECK(m.degree() == 3);
  CHECK(m.max_var() == 3);
  CHECK(m.last_exponent() == 1);
  CHECK(m.with_last_zero() == mono("x1^2", 3));
  CHECK(mono("x1", 3).divides(m));
  CHECK_FALSE(mono("x2", 3).divides(m));
  CHECK(m.quotient_by(mono("x1", 3)) == mono("x1*x3", 3));
  CHECK(to_string(m) == "x1^2*x3");
  CHECK(to_string(Monomial(3)) == "1");
}

TEST_CASE("configuration bounds are enforced") {
  CHECK_THROWS_AS(Monomial(0), ConfigError);
  CHECK_THROWS_AS(Monomial(max_vars + 1), ConfigError);
  CHECK_THROWS_AS(Monomial::variable(2, 0, max_degree + 1), ConfigError);
}
