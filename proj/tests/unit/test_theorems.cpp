#include "doctest.h"

#include <algorithm>

#include "json.hpp"

#include "pcgroups/corpus.hpp"
#include "pcgroups/errors.hpp"
#include "pcgroups/theorems.hpp"
#include "support/oracle.hpp"

using namespace pcgroups;
using nlohmann::ordered_json;

namespace {
  CheckReport const* find(std::vector<CheckReport> const& rs,
                          std::string const&              name) {
    for (auto const& r : rs) {
      if (r.name == name) {
        return &r;
      }
    }
    return nullptr;
  }

  std::int64_t param(CheckReport const& r, std::string const& key) {
    for (auto const& [k, v] : r.params) {
      if (k == key) {
        return std::get<std::int64_t>(v);
      }
    }
    FAIL("missing parameter " << key);
    return 0;
  }

  bool has_param(CheckReport const& r, std::string const& key) {
    return std::any_of(r.params.begin(), r.params.end(),
                       [&](auto const& kv) { return kv.first == key; });
  }

  void require_no_failures(std::vector<CheckReport> const& rs) {
    for (auto const& r : rs) {
      CAPTURE(r.name);
      CHECK(r.status != Status::fail);
      CHECK(!r.resource_limited);
      if (r.status == Status::fail) {
        CHECK(!r.witnesses.empty());
      }
    }
  }

  RunConfig small_config() {
    RunConfig cfg;
    cfg.i_max   = 3;
    cfg.j_max   = 3;
    cfg.k_max   = 2;
    cfg.samples = 2000;
    return cfg;
  }
}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("element bounds on example2") {
    Analysis a(Group::make(corpus::example2()));
    RunConfig cfg = small_config();
    auto      rs  = check_thm1(a, cfg);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].name == "thm1.i");
    CHECK(rs[1].name == "thm1.ii");
    CHECK(rs[2].name == "thm1.iii");
    CHECK(rs[3].name == "thm1.iv");
    CHECK(rs[0].status == Status::pass);
    CHECK(rs[1].status == Status::pass);
    CHECK(rs[2].status == Status::skipped);
    CHECK(rs[3].status == Status::pass);
    // exhaustive: every ordered pair, times the 16 (j, k) shifts for part ii
    CHECK(rs[0].tested == 2048ull * 2048ull);
    CHECK(rs[1].tested == 2048ull * 2048ull * 16);
    // part iv at i = 2 is attained
    CHECK(exponent(a.omega_of_agemo(1, 2)) == 4);
    CHECK(a.omega_exponent_log(1, 2) == 2);
  }

  TEST_CASE("element bounds on abelian and odd groups") {
    RunConfig cfg = small_config();
    for (auto P : {corpus::abelian(3, {1, 2}), corpus::abelian(2, {2, 3}),
                   corpus::example1(3), corpus::example1(5)}) {
      Analysis a(Group::make(P));
      require_no_failures(check_thm1(a, cfg));
    }
    Analysis a(Group::make(corpus::example1(3)));
    auto     rs = check_thm1(a, cfg);
    CHECK(rs[2].status == Status::pass);
    CHECK(rs[3].status == Status::skipped);
  }

  TEST_CASE("commutator of cubes in example2_odd(3)") {
    auto   g  = Group::make(corpus::example2_odd(3));
    ExpVec a3{3, 0, 0}, b3{0, 3, 0};
    ExpVec c  = g->commutator(a3, b3);
    // [a,b] = c^9 is central, so [a^3, b^3] = c^81
    CHECK(c == ExpVec{0, 0, 81});
    CHECK(g->order(c) == 3);
    CHECK(g->order_log(ExpVec{1, 0, 0}) == 3);
    CHECK(g->order_log(ExpVec{0, 1, 0}) == 3);
    // i = 3, j = k = 1: bound 3^{3-1-1} = 3
    CHECK(g->order_log(c) <= 1);
  }

  TEST_CASE("sampled element bounds agree with exhaustive") {
    for (auto P : {corpus::example2(), corpus::example1(3),
                   corpus::family(2, 2, 2, 4, 2), corpus::family(3, 2, 2, 3, 1)}) {
      Analysis  a(Group::make(P));
      RunConfig ex = small_config();
      ex.mode      = ScanMode::exhaustive;
      RunConfig sm = small_config();
      sm.mode      = ScanMode::sample;
      sm.seed      = 9;
      auto re      = check_thm1(a, ex);
      auto rsm     = check_thm1(a, sm);
      REQUIRE(re.size() == rsm.size());
      for (std::size_t k = 0; k < re.size(); ++k) {
        CHECK(re[k].status == rsm[k].status);
      }
      CHECK(rsm[0].tested == sm.samples);
      CHECK(param(rsm[0], "seed") == 9);
    }
  }

  TEST_CASE("sampling is reproducible") {
    auto      g = Group::make(corpus::example2());
    RunConfig cfg = small_config();
    cfg.mode      = ScanMode::sample;
    cfg.seed      = 12345;
    Analysis a1(g), a2(g);
    auto     r1 = check_thm1(a1, cfg);
    auto     r2 = check_thm1(a2, cfg);
    CHECK(reports_to_json("g", 2, 11, r1) == reports_to_json("g", 2, 11, r2));
  }

  TEST_CASE("exhaustive mode over budget") {
    Analysis  a(Group::make(corpus::example2()));
    RunConfig cfg            = small_config();
    cfg.mode                 = ScanMode::exhaustive;
    cfg.max_exhaustive_pairs = 1000;
    CHECK_THROWS_AS(check_thm1(a, cfg), ResourceLimit);
    cfg.mode = ScanMode::automatic;
    auto rs  = check_thm1(a, cfg);
    CHECK(rs[0].tested == cfg.samples);
  }

  TEST_CASE("elements of order p commute") {
    RunConfig cfg = small_config();
    for (auto P : {corpus::example2(), corpus::abelian(5, {2, 2}),
                   corpus::example1(3)}) {
      Analysis a(Group::make(P));
      auto     r = check_order_p_lemma(a, cfg);
      CHECK(r.name == "lemma.order_p");
      CHECK(r.status == Status::pass);
    }
    // tested = qualifying pairs in G^2 plus the abelian corollary
    auto          g = Group::make(corpus::example2());
    Analysis      a(g);
    oracle::Naive n(*g);
    oracle::Set   all = n.of(whole_group(g));
    oracle::Set   G2  = n.agemo(all, 1);
    CHECK(G2.size() == 256);
    std::uint64_t ord2 = 0, ord4 = 0;
    for (auto x : G2) {
      ord2 += n.order_log(x) == 1;
      ord4 += n.order_log(x) <= 2;
    }
    auto r = check_order_p_lemma(a, small_config());
    CHECK(r.tested == ord2 * ord4 + 1);
  }

  TEST_CASE("elements of order p commute in example2_odd(3)") {
    Analysis a(Group::make(corpus::example2_odd(3)));
    auto     r = check_order_p_lemma(a, small_config());
    CHECK(r.status == Status::pass);
    CHECK(is_abelian(a.omega_of_agemo(1, 1)));
  }

  TEST_CASE("power inclusion") {
    auto     g = Group::make(corpus::example2());
    Analysis a(g);
    CHECK(check_power_inclusion(a, small_config()).status == Status::pass);
    // i = 2, j = 1, k = 1 by explicit sets
    oracle::Naive n(*g);
    oracle::Set   all = n.of(whole_group(g));
    oracle::Set   lhs = n.agemo(n.omega(n.agemo(all, 1), 2), 1);
    oracle::Set   rhs = n.omega(n.agemo(all, 2), 1);
    // <a^4, b^4, c^16> on both sides
    CHECK(lhs.size() == 8);
    CHECK(rhs.size() == 8);
    CHECK(oracle::subset(lhs, rhs));
    CHECK(n.of(agemo(a.omega_of_agemo(1, 2), 1)) == lhs);
    CHECK(n.of(a.omega_of_agemo(2, 1)) == rhs);

    Analysis b(Group::make(corpus::example2_odd(3)));
    RunConfig cfg = small_config();
    cfg.i_max = 2;
    cfg.j_max = 1;
    cfg.k_max = 1;
    auto r = check_power_inclusion(b, cfg);
    CHECK(r.status == Status::pass);
    CHECK(r.tested == 3 * 2 * 1);
  }

  TEST_CASE("shortening inclusion") {
    Analysis a(Group::make(corpus::example2_odd(3)));
    auto     r = check_shortening_lemma(a, small_config());
    CHECK(r.status == Status::pass);
    CHECK(r.tested == 3 * 4);
    Analysis ab(Group::make(corpus::abelian(3, {1, 2, 3})));
    CHECK(check_shortening_lemma(ab, small_config()).status == Status::pass);
    Analysis e(Group::make(corpus::example2()));
    CHECK(check_shortening_lemma(e, small_config()).status == Status::skipped);
  }

  TEST_CASE("descending omega chain") {
    Analysis a(Group::make(corpus::example2_odd(3)));
    for (unsigned i = 1; i <= 4; ++i) {
      CAPTURE(i);
      Chain c = build_theorem3_chain(a, i);
      CHECK(c.size() - 1 <= i);
      CHECK(c.back().is_trivial());
      CHECK(verify_chain(c.front(), c).status == Status::pass);
      CHECK(check_theorem3_chain(a, i).status == Status::pass);
    }
    Chain c1 = build_theorem3_chain(a, 1);
    REQUIRE(c1.size() == 2);
    CHECK(is_abelian(c1.front()));
    CHECK(build_theorem3_chain(a, 2).size() == 3);
    CHECK_THROWS_AS(build_theorem3_chain(a, 0), DomainError);

    Analysis ab(Group::make(corpus::abelian(5, {2, 2})));
    for (unsigned i = 1; i <= 3; ++i) {
      Chain c = build_theorem3_chain(ab, i);
      CHECK(c.size() <= 2);
      CHECK(verify_chain(c.front(), c).status == Status::pass);
    }
  }

  TEST_CASE("class bound, odd p") {
    Analysis a(Group::make(corpus::example2_odd(3)));
    RunConfig cfg = small_config();
    auto      rs  = verify_main_odd(a, cfg);
    CHECK(rs.size() == cfg.i_max * cfg.j_max);
    require_no_failures(rs);
    bool attained = false;
    for (auto const& r : rs) {
      CHECK(param(r, "class") <= param(r, "i"));
      if (param(r, "i") == 2 && param(r, "j") == 1) {
        CHECK(param(r, "class") == 2);
        attained = true;
      }
    }
    CHECK(attained);

    Analysis e(Group::make(corpus::example1(3)));
    auto     re = verify_main_odd(e, cfg);
    require_no_failures(re);
    CHECK(equal(e.omega_of_agemo(1, 1), close(e.group(), std::vector<ExpVec>{{0, 0, 3}})));
    CHECK(param(re[0], "class") <= 1);

    Analysis ab(Group::make(corpus::abelian(3, {2, 2})));
    for (auto const& r : verify_main_odd(ab, cfg)) {
      CHECK(param(r, "class") <= 1);
    }
    Analysis two(Group::make(corpus::example2()));
    CHECK(verify_main_odd(two, cfg).front().status == Status::skipped);
  }

  TEST_CASE("class bound, p = 2") {
    Analysis  a(Group::make(corpus::example2()));
    RunConfig cfg = small_config();
    auto      rs  = verify_main_even(a, cfg);
    require_no_failures(rs);
    std::size_t controls = 0;
    for (auto const& r : rs) {
      if (r.name == "main.even") {
        std::int64_t i = param(r, "i");
        CHECK(param(r, "j") >= 2);
        CHECK(param(r, "class") >= 0);
        CHECK(param(r, "class") <= std::max<std::int64_t>(i - 1, 1));
        CHECK(r.status == Status::pass);
      } else {
        REQUIRE(r.name == "main.even.control");
        ++controls;
        CHECK(param(r, "j") == 1);
        if (param(r, "i") == 2) {
          CHECK(r.status == Status::expected_fail);
          CHECK(param(r, "powerful") == 0);
          CHECK(!r.witnesses.empty());
        }
      }
    }
    CHECK(controls == cfg.i_max);
    CHECK(is_abelian(a.omega_of_agemo(2, 2)));
    CHECK(pn_class(a.omega_of_agemo(2, 1)) <= 1u);

    Analysis odd(Group::make(corpus::example1(3)));
    CHECK(verify_main_even(odd, cfg).front().status == Status::skipped);
  }

  TEST_CASE("run_suite") {
    auto      g = Group::make(corpus::example2());
    Analysis  a(g);
    RunConfig cfg = small_config();
    auto      rs  = run_suite(a, cfg);
    REQUIRE(rs.size() >= 3);
    CHECK(rs[0].name == "consistency");
    CHECK(rs[0].status == Status::pass);
    CHECK(rs[1].name == "powerful");
    CHECK(rs[1].status == Status::pass);
    require_no_failures(rs);
    CHECK(exit_code(rs) == 0);
    auto const* ctl = find(rs, "main.even.control");
    REQUIRE(ctl != nullptr);
    CHECK(find(rs, "thm1.iv") != nullptr);
    CHECK(find(rs, "lemma.order_p") != nullptr);
    CHECK(find(rs, "prop.power_inclusion") != nullptr);

    auto only = run_suite(a, cfg, Suite::thm1);
    CHECK(only.size() == 2 + 4);

    Analysis triv(Group::make(corpus::abelian(3, {})));
    auto     rt = run_suite(triv, cfg);
    require_no_failures(rt);
    CHECK(exit_code(rt) == 0);
  }

  TEST_CASE("run_suite on a non-powerful group") {
    // Omega_1 of example 1 is not powerful; present it as its own group
    Presentation P = parse(
        "p = 3\ngens a b c\norders a:3 b:3 c:3\nrel [b,a] = c\n");
    Analysis a(Group::make(P));
    auto     rs = run_suite(a, small_config());
    REQUIRE(rs.size() == 2);
    CHECK(rs[1].name == "powerful");
    CHECK(rs[1].status == Status::skipped);
    CHECK(!rs[1].witnesses.empty());
    CHECK(exit_code(rs) == 0);
  }

  TEST_CASE("run_suite on an inconsistent group") {
    Presentation P = parse(
        "p = 3\ngens a b c\norders a:3 b:3 c:9\nrel [b,a] = c\n");
    Analysis a(Group::make(P));
    auto     rs = run_suite(a, small_config());
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::fail);
    CHECK(exit_code(rs) == 1);
  }

  TEST_CASE("parse_suite and exit_code") {
    CHECK(parse_suite("all") == Suite::all);
    CHECK(parse_suite("lemma-p") == Suite::lemma_p);
    CHECK(parse_suite("shorten") == Suite::shorten);
    CHECK(parse_suite("main") == Suite::main);
    CHECK(!parse_suite("bogus").has_value());
    CheckReport ok, lim, bad;
    lim.status           = Status::skipped;
    lim.resource_limited = true;
    bad.status           = Status::fail;
    CHECK(exit_code({ok}) == 0);
    CHECK(exit_code({ok, lim}) == 3);
    CHECK(exit_code({lim, bad}) == 1);
  }

  TEST_CASE("resource limits become skipped reports") {
    auto      g = Group::make(corpus::example2_odd(3), Limits{10'000'000, 500});
    Analysis  a(g);
    RunConfig cfg = small_config();
    auto      rs  = run_suite(a, cfg, Suite::lemma_p);
    auto const* r = find(rs, "lemma.order_p");
    REQUIRE(r != nullptr);
    CHECK(r->status == Status::skipped);
    CHECK(r->resource_limited);
    CHECK(exit_code(rs) == 3);
  }

  TEST_CASE("json report") {
    Analysis  a(Group::make(corpus::example1(3)));
    RunConfig cfg = small_config();
    auto      rs  = run_suite(a, cfg, Suite::main);
    std::string js = reports_to_json("example1", 3, 4, rs);
    auto j = ordered_json::parse(js);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
      keys.push_back(it.key());
    }
    // insertion order is kept
    CHECK(keys == std::vector<std::string>{"group", "p", "order_log_p", "checks"});
    CHECK(j["group"] == "example1");
    CHECK(j["p"] == 3);
    CHECK(j["order_log_p"] == 4);
    REQUIRE(j["checks"].size() == rs.size());
    for (auto const& c : j["checks"]) {
      std::vector<std::string> ck;
      for (auto it = c.begin(); it != c.end(); ++it) {
        ck.push_back(it.key());
      }
      CHECK(ck == std::vector<std::string>{"name", "params", "status",
                                           "witnesses", "tested", "ms"});
      CHECK(c["status"] == "pass");
      CHECK(c["ms"] == 0);
    }
    Analysis b(Group::make(corpus::example1(3)));
    CHECK(reports_to_json("example1", 3, 4, run_suite(b, cfg, Suite::main)) == js);
    for (auto const& r : rs) {
      CHECK(r.ms == 0);
      CHECK(!has_param(r, "ms"));
    }
  }
}
