#include "doctest.h"

#include <random>

#include "pcgroups/corpus.hpp"
#include "pcgroups/subgroup.hpp"

using namespace pcgroups;

namespace {
  ExpVec random_element(Group const& g, std::mt19937_64& rng) {
    ExpVec x(g.num_gens());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rng() % g.relative_order(i);
    }
    return x;
  }
}  // namespace

TEST_SUITE("laws") {
  TEST_CASE("group axioms on random triples") {
    std::mt19937_64 rng(4242);
    for (auto const& entry : corpus::standard()) {
      CAPTURE(entry.name);
      auto         gp = Group::make(entry.presentation);
      Group const& g  = *gp;
      for (int t = 0; t < 1000; ++t) {
        ExpVec x = random_element(g, rng);
        ExpVec y = random_element(g, rng);
        ExpVec z = random_element(g, rng);
        REQUIRE(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
        REQUIRE(g.multiply(x, g.inverse(x)) == g.identity());
        REQUIRE(g.multiply(g.inverse(x), x) == g.identity());
        REQUIRE(g.multiply(x, g.identity()) == x);
        REQUIRE(g.inverse(g.multiply(x, y))
                == g.multiply(g.inverse(y), g.inverse(x)));
      }
    }
  }

  TEST_CASE("powers and orders") {
    std::mt19937_64 rng(99);
    for (auto const& entry : corpus::standard()) {
      CAPTURE(entry.name);
      auto         gp = Group::make(entry.presentation);
      Group const& g  = *gp;
      std::uint64_t p = g.prime();
      for (int t = 0; t < 200; ++t) {
        ExpVec        x = random_element(g, rng);
        std::uint64_t o = g.order(x);
        REQUIRE(g.power(x, o) == g.identity());
        if (o > 1) {
          REQUIRE(g.power(x, o / p) != g.identity());
        }
        // Lagrange: the cyclic subgroup has order o(x), dividing |G|
        std::vector<ExpVec> one{x};
        Subgroup            C = close(gp, one);
        REQUIRE(C.order() == o);
        REQUIRE(g.candidate_order() % o == 0);
        std::uint64_t a = rng() % 50, b = rng() % 50;
        REQUIRE(g.multiply(g.power(x, a), g.power(x, b)) == g.power(x, a + b));
        REQUIRE(g.power(g.power(x, a), b) == g.power(x, a * b));
        REQUIRE(g.power_signed(x, -std::int64_t(a)) == g.inverse(g.power(x, a)));
      }
    }
  }

  TEST_CASE("subgroup orders divide") {
    std::mt19937_64 rng(5);
    for (auto const& entry : corpus::standard()) {
      CAPTURE(entry.name);
      auto gp = Group::make(entry.presentation);
      for (int t = 0; t < 20; ++t) {
        std::vector<ExpVec> gens{random_element(*gp, rng), random_element(*gp, rng)};
        Subgroup            H = close(gp, gens);
        CHECK(gp->candidate_order() % H.order() == 0);
        for (auto const& x : gens) {
          CHECK(H.contains(x));
        }
        CHECK(H.contains(gp->multiply(gens[0], gens[1])));
        CHECK(H.contains(gp->commutator(gens[0], gens[1])));
      }
    }
  }
}
