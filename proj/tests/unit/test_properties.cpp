#include "doctest.h"

#include <optional>
#include <random>

#include "pcgroups/corpus.hpp"
#include "pcgroups/errors.hpp"
#include "pcgroups/properties.hpp"
#include "pcgroups/theorems.hpp"
#include "support/oracle.hpp"

using namespace pcgroups;

namespace {
  // Greedy upper series over explicit element sets.
  std::optional<unsigned> naive_pn_class(oracle::Naive const& n,
                                         oracle::Set const&   H,
                                         std::uint64_t        p) {
    if (H.size() == 1) {
      return 0u;
    }
    if (p == 2 && !oracle::subset(n.commutators(H, H), n.agemo(H, 2))) {
      return std::nullopt;
    }
    oracle::Set Z{0};
    for (unsigned k = 1;; ++k) {
      oracle::Set next = n.central_preimage(H, n.agemo(Z, 1));
      if (next == H) {
        return k;
      }
      if (next == Z) {
        return std::nullopt;
      }
      Z = next;
    }
  }

  bool naive_powerful(oracle::Naive const& n,
                      oracle::Set const&   H,
                      std::uint64_t        p) {
    return oracle::subset(n.commutators(H, H), n.agemo(H, p == 2 ? 2 : 1));
  }

  Subgroup omega_of_agemo(GroupPtr const& g, unsigned j, int i) {
    return omega(agemo(whole_group(g), j), i);
  }
}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("is_powerful") {
    for (std::uint64_t p : {3u, 5u}) {
      auto     g = Group::make(corpus::example1(p));
      Subgroup G = whole_group(g);
      CHECK(is_powerful(G));
      CHECK(!is_powerful(omega(G, 1)));
    }
    auto g2 = Group::make(corpus::example2());
    CHECK(is_powerful(whole_group(g2)));
    CHECK(!is_powerful(omega_of_agemo(g2, 1, 2)));
    CHECK(is_powerful(trivial_subgroup(g2)));
    auto ab = Group::make(corpus::abelian(2, {1, 2}));
    CHECK(is_powerful(whole_group(ab)));
  }

  TEST_CASE("is_strongly_powerful") {
    auto ab = Group::make(corpus::abelian(3, {2, 2}));
    CHECK(is_strongly_powerful(whole_group(ab)));
    auto g = Group::make(corpus::example2_odd(3));
    CHECK(is_strongly_powerful(whole_group(g)));
    Subgroup H = omega_of_agemo(g, 1, 2);
    CHECK(!is_strongly_powerful(H));
    CHECK(is_powerful(H));
    auto e1 = Group::make(corpus::example1(3));
    CHECK(!is_strongly_powerful(whole_group(e1)));
  }

  TEST_CASE("upper powerfully central series") {
    auto     ab = Group::make(corpus::abelian(5, {1, 2}));
    Subgroup A  = whole_group(ab);
    Chain    s  = upper_powerfully_central_series(A);
    REQUIRE(s.size() == 2);
    CHECK(s[0].is_trivial());
    CHECK(equal(s[1], A));

    auto     g = Group::make(corpus::example2_odd(3));
    Subgroup H = omega_of_agemo(g, 1, 2);
    Chain    z = upper_powerfully_central_series(H);
    REQUIRE(z.size() == 3);
    CHECK(z[0].is_trivial());
    CHECK(!equal(z[1], H));
    CHECK(equal(z[2], H));
    for (std::size_t k = 1; k < z.size(); ++k) {
      CHECK(leq(z[k - 1], z[k]));
    }

    auto     g2 = Group::make(corpus::example2());
    Subgroup H2 = omega_of_agemo(g2, 1, 2);
    Chain    z2 = upper_powerfully_central_series(H2);
    // the series does reach H2, but H2 is not powerful, so for p = 2 there
    // is no class
    CHECK(equal(z2.back(), H2));
    CHECK(!is_powerful(H2));
    CHECK(!pn_class(H2).has_value());
    oracle::Naive n(*g2);
    oracle::Set   Z{0};
    for (std::size_t k = 1; k < z2.size(); ++k) {
      Z = n.central_preimage(n.of(H2), n.agemo(Z, 1));
      CHECK(n.of(z2[k]) == Z);
    }
  }

  TEST_CASE("pn_class") {
    auto g = Group::make(corpus::example1(3));
    CHECK(pn_class(trivial_subgroup(g)) == 0u);
    Subgroup G = whole_group(g);
    CHECK(pn_class(G) == 2u);
    oracle::Naive n(*g);
    CHECK(naive_pn_class(n, n.of(G), 3) == 2u);
    // no chain of length 1: G is not abelian
    CHECK(!n.is_abelian(n.of(G)));

    auto g3 = Group::make(corpus::example2_odd(3));
    CHECK(pn_class(omega_of_agemo(g3, 1, 2)) == 2u);

    auto g2 = Group::make(corpus::example2());
    CHECK(!pn_class(omega_of_agemo(g2, 1, 2)).has_value());
    CHECK(pn_class(whole_group(g2)).has_value());

    auto c = Group::make(corpus::abelian(2, {3}));
    CHECK(pn_class(whole_group(c)) == 1u);
  }

  TEST_CASE("verify_chain") {
    auto     ab = Group::make(corpus::abelian(3, {1, 2}));
    Subgroup A  = whole_group(ab);
    CHECK(verify_chain(A, Chain{A, trivial_subgroup(ab)}).status
          == Status::pass);
    CHECK(verify_chain(A, Chain{trivial_subgroup(ab), A}, false).status
          == Status::pass);
    CHECK(verify_chain(A, Chain{A, omega(A, 1)}).status == Status::fail);

    auto     g = Group::make(corpus::example2_odd(3));
    Analysis an(g);
    Subgroup H     = an.omega_of_agemo(1, 2);
    Chain    chain = build_theorem3_chain(an, 2);
    REQUIRE(chain.size() == 3);
    CHECK(equal(chain[0], H));
    CHECK(equal(chain[1], an.omega_of_agemo(2, 2)));
    CHECK(chain[2].is_trivial());
    CHECK(verify_chain(H, chain).status == Status::pass);

    auto     g2 = Group::make(corpus::example2());
    Subgroup H2 = omega_of_agemo(g2, 1, 2);
    auto     r  = verify_chain(H2, Chain{H2, trivial_subgroup(g2)});
    CHECK(r.status == Status::fail);
    REQUIRE(!r.witnesses.empty());
    bool found = false;
    for (auto const& w : r.witnesses) {
      ExpVec x(w.begin(), w.end());
      found = found || !Group::is_identity(x);
    }
    CHECK(found);
    ExpVec a2{2, 0, 0}, b2{0, 2, 0};
    CHECK(g2->commutator(a2, b2) == ExpVec{0, 0, 16});

    CHECK_THROWS_AS(verify_chain(A, Chain{omega(A, 1), A, trivial_subgroup(ab)}),
                    DomainError);
  }

  TEST_CASE("rank and profile") {
    auto cyc = Group::make(corpus::abelian(7, {2}));
    CHECK(rank(whole_group(cyc)) == 1);
    auto g2 = Group::make(corpus::example2());
    CHECK(rank(whole_group(g2)) == 3);
    oracle::Naive n(*g2);
    oracle::Set   all = n.of(whole_group(g2));
    // Frattini subgroup G^2 [G,G] by set closure
    std::vector<std::uint32_t> gens;
    for (auto x : n.agemo(all, 1)) {
      gens.push_back(x);
    }
    for (auto x : n.commutators(all, all)) {
      gens.push_back(x);
    }
    CHECK(all.size() / n.closure(gens).size() == 8);

    auto e1 = Group::make(corpus::example1(3));
    auto pr = profile(whole_group(e1));
    CHECK(pr.order_log == 4);
    CHECK(pr.exponent_log == 2);
    CHECK(pr.rank == 3);
    CHECK(pr.pn_class == 2u);
    CHECK(pr.coclass == 2);

    auto pt = profile(trivial_subgroup(e1));
    CHECK(pt.order_log == 0);
    CHECK(pt.pn_class == 0u);

    auto pn = profile(omega_of_agemo(g2, 1, 2));
    CHECK(pn.order_log == 6);
    CHECK(!pn.pn_class.has_value());
    CHECK(!pn.coclass.has_value());
  }

  TEST_CASE("coclass inequalities on small corpus groups") {
    for (auto const& entry : corpus::standard()) {
      auto g = Group::make(entry.presentation);
      if (g->candidate_order() > 50000) {
        continue;
      }
      CAPTURE(entry.name);
      auto pr = profile(whole_group(g));
      REQUIRE(pr.pn_class.has_value());
      unsigned c = *pr.pn_class;
      CHECK(pr.exponent_log + c <= pr.order_log + 1);
      CHECK(pr.rank + c <= pr.order_log + 1);
      CHECK(pr.coclass == int(pr.order_log) - int(c));
      CHECK(pr.order_log >= pr.exponent_log);
      CHECK(pr.exponent_log >= 1);
      CHECK(pr.rank >= 1);
    }
  }

  TEST_CASE("greedy dominance over descending omega chains") {
    for (auto const& entry : corpus::standard()) {
      auto g = Group::make(entry.presentation);
      if (g->prime() == 2 || g->candidate_order() > 50000) {
        continue;
      }
      CAPTURE(entry.name);
      Analysis an(g);
      for (unsigned i = 1; i <= 4; ++i) {
        CAPTURE(i);
        Chain chain = build_theorem3_chain(an, i);
        Subgroup const& H = chain.front();
        Chain z = upper_powerfully_central_series(H);
        // chain descends; K_l = chain[t - l] ascends from 1 to H
        std::size_t t = chain.size() - 1;
        for (std::size_t l = 0; l <= t; ++l) {
          Subgroup const& Zl = z[std::min(l, z.size() - 1)];
          CHECK(leq(chain[t - l], Zl));
        }
        auto c = pn_class(H);
        REQUIRE(c.has_value());
        CHECK(*c <= t);
      }
    }
  }

  TEST_CASE("agreement with naive predicates on random subgroups") {
    std::mt19937_64 rng(77);
    for (auto const& entry : corpus::standard()) {
      auto g = Group::make(entry.presentation);
      if (g->candidate_order() > 2048) {
        continue;
      }
      CAPTURE(entry.name);
      oracle::Naive n(*g);
      std::uint64_t p = g->prime();
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint32_t> gi;
        for (int k = 0; k < 1 + trial % 3; ++k) {
          gi.push_back(std::uint32_t(rng() % n.size()));
        }
        std::vector<ExpVec> gv;
        for (auto x : gi) {
          gv.push_back(n.vec(x));
        }
        Subgroup    H  = close(g, gv);
        oracle::Set Hs = n.closure(gi);
        bool        pw = naive_powerful(n, Hs, p);
        CHECK(is_powerful(H) == pw);
        CHECK(is_strongly_powerful(H)
              == oracle::subset(n.commutators(Hs, Hs), n.agemo(Hs, 2)));
        auto c = pn_class(H);
        CHECK(c == naive_pn_class(n, Hs, p));
        if (is_strongly_powerful(H)) {
          CHECK(c.has_value());
        }
        if (p == 2 && pw) {
          CHECK(c.has_value());
        }
        bool nontrivial_abelian = !H.is_trivial() && n.is_abelian(Hs);
        CHECK((c == 1u) == nontrivial_abelian);
      }
    }
  }
}
