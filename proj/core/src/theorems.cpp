#include "pcgroups/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "pcgroups/consistency.hpp"
#include "pcgroups/errors.hpp"

namespace pcgroups {

  namespace {

    constexpr std::size_t max_witness_sets = 5;
    constexpr unsigned    max_power_shift  = 3;  // j, k range of part (ii)

    class Stopwatch {
     public:
      explicit Stopwatch(bool on)
          : on_(on), start_(std::chrono::steady_clock::now()) {}
      std::uint64_t ms() const {
        if (!on_) {
          return 0;
        }
        auto d = std::chrono::steady_clock::now() - start_;
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
      }

     private:
      bool                                  on_;
      std::chrono::steady_clock::time_point start_;
    };

    // Portable uniform draws: mt19937_64 is fully specified, and the
    // rejection step avoids library-specific distributions.
    class Rng {
     public:
      explicit Rng(std::uint64_t seed) : eng_(seed) {}
      std::uint64_t below(std::uint64_t n) {
        std::uint64_t const top   = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t const limit = top - top % n;
        std::uint64_t       r;
        do {
          r = eng_();
        } while (r >= limit);
        return r % n;
      }
      ExpVec element(Group const& g) {
        ExpVec x = g.identity();
        for (std::size_t i = 0; i < x.size(); ++i) {
          x[i] = static_cast<Exponent>(below(g.relative_order(i)));
        }
        return x;
      }

     private:
      std::mt19937_64 eng_;
    };

    std::uint64_t seed_for(RunConfig const& cfg, std::uint64_t salt) {
      return cfg.seed * 0x9E3779B97F4A7C15ull + salt;
    }

    std::uint64_t ipow(std::uint64_t p, unsigned k) {
      std::uint64_t r = 1;
      while (k-- > 0) {
        r *= p;
      }
      return r;
    }

    CheckReport skipped(std::string name, std::string reason) {
      CheckReport r;
      r.name   = std::move(name);
      r.status = Status::skipped;
      r.add_param("reason", std::move(reason));
      return r;
    }

    char const* mode_name(bool exhaustive) {
      return exhaustive ? "exhaustive" : "sample";
    }

    bool use_exhaustive(RunConfig const& cfg,
                        std::uint64_t    domain,
                        char const*      what) {
      bool fits = domain <= cfg.max_exhaustive_pairs;
      switch (cfg.mode) {
        case ScanMode::exhaustive:
          if (!fits) {
            throw ResourceLimit(std::string(what) + ": exhaustive scan of "
                                + std::to_string(domain)
                                + " pairs exceeds the pair budget");
          }
          return true;
        case ScanMode::sample:
          return false;
        case ScanMode::automatic:
          return fits;
      }
      return fits;
    }

    // Cayley table of a small group, indexed by Group::index.
    struct Table {
      std::size_t                               n = 0;
      std::vector<std::uint32_t>                mul;
      std::vector<std::uint32_t>                inv;
      std::vector<std::uint8_t>                 ordl;
      std::vector<std::array<std::uint32_t, 4>> pw;  // x^{p^j}, j = 0..3
      std::vector<ExpVec>                       elems;

      explicit Table(Group const& g) {
        n = g.candidate_order();
        elems.reserve(n);
        for (std::uint64_t x = 0; x < n; ++x) {
          elems.push_back(g.from_index(x));
        }
        mul.resize(n * n);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            mul[x * n + y] = static_cast<std::uint32_t>(
                g.index(g.multiply(elems[x], elems[y])));
          }
        }
        inv.resize(n);
        ordl.resize(n);
        pw.resize(n);
        for (std::size_t x = 0; x < n; ++x) {
          inv[x]  = static_cast<std::uint32_t>(g.index(g.inverse(elems[x])));
          ordl[x] = static_cast<std::uint8_t>(g.order_log(elems[x]));
          ExpVec y = elems[x];
          for (unsigned j = 0; j <= max_power_shift; ++j) {
            pw[x][j] = static_cast<std::uint32_t>(g.index(y));
            y        = g.power(y, g.prime());
          }
        }
      }

      std::uint32_t comm(std::uint32_t x, std::uint32_t y) const {
        return mul[std::size_t(inv[mul[y * n + x]]) * n + mul[x * n + y]];
      }
    };

    // Smallest i for which the pair (x, y) satisfies the hypotheses of
    // part (ii); larger i only weaken the bound.
    int tightest_i(unsigned ordl_x, unsigned ordl_y) {
      int from_x = ordl_x > 0 ? static_cast<int>(ordl_x) - 1 : 0;
      return std::max(from_x, static_cast<int>(ordl_y));
    }

    void thm1_pairs_exhaustive(Group const& g,
                               CheckReport& part1,
                               CheckReport& part2) {
      Table       t(g);
      std::size_t n   = t.n;
      std::size_t w1  = 0, w2 = 0;
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          std::uint32_t c = t.comm(x, y);
          if (t.ordl[c] > t.ordl[y] && w1++ < max_witness_sets) {
            part1.fail({t.elems[x], t.elems[y], t.elems[c]});
          }
          int i0 = tightest_i(t.ordl[x], t.ordl[y]);
          for (unsigned j = 0; j <= max_power_shift; ++j) {
            for (unsigned k = 0; k <= max_power_shift; ++k) {
              std::uint32_t cc    = t.comm(t.pw[x][j], t.pw[y][k]);
              int           bound = i0 - static_cast<int>(j + k);
              bool ok = bound < 0 ? t.ordl[cc] == 0
                                  : t.ordl[cc] <= static_cast<unsigned>(bound);
              if (!ok && w2++ < max_witness_sets) {
                part2.fail({t.elems[x], t.elems[y], t.elems[cc]},
                           "j=" + std::to_string(j) + " k=" + std::to_string(k));
              }
            }
          }
        }
      }
      part1.tested = std::uint64_t(n) * n;
      part2.tested = std::uint64_t(n) * n * (max_power_shift + 1)
                     * (max_power_shift + 1);
    }

    void thm1_pairs_sampled(Group const&     g,
                            RunConfig const& cfg,
                            CheckReport&     part1,
                            CheckReport&     part2) {
      Rng         rng(seed_for(cfg, 1));
      std::size_t w1 = 0, w2 = 0;
      for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        ExpVec   x  = rng.element(g);
        ExpVec   y  = rng.element(g);
        unsigned ox = g.order_log(x), oy = g.order_log(y);
        ExpVec   c  = g.commutator(x, y);
        if (g.order_log(c) > oy && w1++ < max_witness_sets) {
          part1.fail({x, y, c});
        }
        int    i0 = tightest_i(ox, oy);
        ExpVec xp = x;
        for (unsigned j = 0; j <= max_power_shift; ++j) {
          ExpVec yp = y;
          for (unsigned k = 0; k <= max_power_shift; ++k) {
            ExpVec   cc    = g.commutator(xp, yp);
            unsigned oc    = g.order_log(cc);
            int      bound = i0 - static_cast<int>(j + k);
            bool ok = bound < 0 ? oc == 0 : oc <= static_cast<unsigned>(bound);
            if (!ok && w2++ < max_witness_sets) {
              part2.fail({x, y, cc},
                         "j=" + std::to_string(j) + " k=" + std::to_string(k));
            }
            yp = g.power(yp, g.prime());
          }
          xp = g.power(xp, g.prime());
        }
      }
      part1.tested = cfg.samples;
      part2.tested = cfg.samples * (max_power_shift + 1) * (max_power_shift + 1);
    }

    // exp Omega_i(H) <= p^i for i = 1..max(exp_log H, 1), H enumerable.
    void exponent_of_omegas(Analysis&    a,
                            unsigned     agemo_level,
                            CheckReport& r) {
      Subgroup const& H = a.agemo(agemo_level);
      unsigned        e = exponent_log(H);
      for (unsigned i = 1; i <= std::max(e, 1u); ++i) {
        ++r.tested;
        int      ii = static_cast<int>(i);
        unsigned eo = a.omega_exponent_log(agemo_level, ii);
        if (eo > i) {
          r.fail(a.omega_of_agemo(agemo_level, ii).generators(), "i=" + std::to_string(i) + ": exponent p^"
                                     + std::to_string(eo));
        }
      }
      r.add_param("i_max", static_cast<std::int64_t>(std::max(e, 1u)));
    }

    // Sampled form of part (iii) for groups too large to enumerate: random
    // elements pushed into Omega_i by powering, multiplied in pairs and
    // triples, must have order at most p^i.
    void exponent_of_omegas_sampled(Group const&     g,
                                    RunConfig const& cfg,
                                    CheckReport&     r) {
      Rng         rng(seed_for(cfg, 3));
      std::size_t w = 0;
      for (unsigned i = 1; i <= cfg.i_max; ++i) {
        auto draw = [&] {
          ExpVec   x = rng.element(g);
          unsigned o = g.order_log(x);
          return o > i ? g.power(x, ipow(g.prime(), o - i)) : x;
        };
        for (std::uint64_t s = 0; s < cfg.samples; ++s) {
          ExpVec prod = draw();
          unsigned factors = 2 + static_cast<unsigned>(rng.below(2));
          for (unsigned f = 1; f < factors; ++f) {
            g.multiply_in_place(prod, draw());
          }
          ++r.tested;
          if (!g.power_is_trivial(prod, i) && w++ < max_witness_sets) {
            r.fail({prod}, "i=" + std::to_string(i));
          }
        }
      }
      r.add_param("i_max", static_cast<std::int64_t>(cfg.i_max));
    }

    std::vector<ExpVec> first_outside(Subgroup const& S, Subgroup const& T) {
      for (auto const& e : S.entries()) {
        if (!T.contains(e.elem)) {
          return {e.elem};
        }
      }
      return {};
    }

    // A commutator of generators of H outside H^{p^j}, if any.
    std::vector<ExpVec> commutator_outside(Subgroup const& H, unsigned j) {
      Group const& g     = *H.group();
      Subgroup     bound = agemo(H, j);
      auto const&  igs   = H.entries();
      for (std::size_t x = 0; x < igs.size(); ++x) {
        for (std::size_t y = x + 1; y < igs.size(); ++y) {
          ExpVec c = g.commutator(igs[x].elem, igs[y].elem);
          if (!bound.contains(c)) {
            return {c, igs[x].elem, igs[y].elem};
          }
        }
      }
      return first_outside(commutator_subgroup(H, H), bound);
    }

    template <typename F>
    void guarded(std::vector<CheckReport>& out,
                 std::string const&        name,
                 F&&                       fn) {
      try {
        fn();
      } catch (ResourceLimit const& e) {
        CheckReport r = skipped(name, "resource limit");
        r.resource_limited = true;
        r.notes.push_back(e.what());
        out.push_back(std::move(r));
      }
    }

  }  // namespace

  Analysis::Analysis(GroupPtr group)
      : group_(std::move(group)), whole_(whole_group(group_)) {}

  bool Analysis::is_powerful() {
    if (!powerful_) {
      powerful_ = pcgroups::is_powerful(whole_);
    }
    return *powerful_;
  }

  bool Analysis::is_consistent() {
    if (!consistent_) {
      consistent_ = check_consistency(group_).status == Status::pass;
    }
    return *consistent_;
  }

  Subgroup const& Analysis::agemo(unsigned j) {
    auto it = agemo_.find(j);
    if (it == agemo_.end()) {
      it = agemo_.emplace(j, pcgroups::agemo(whole_, j)).first;
    }
    return it->second;
  }

  Subgroup const& Analysis::omega_of_agemo(unsigned j, int i) {
    auto it = omega_.find(j);
    if (it == omega_.end()) {
      it = omega_.emplace(j, omega_series(agemo(j))).first;
    }
    auto const& series = it->second;
    if (i < 0) {
      return series.front();
    }
    return series[std::min<std::size_t>(static_cast<std::size_t>(i),
                                        series.size() - 1)];
  }

  unsigned Analysis::omega_exponent_log(unsigned j, int i) {
    i       = std::max(i, -1);
    auto it = omega_exp_.find({j, i});
    if (it == omega_exp_.end()) {
      it = omega_exp_.emplace(std::make_pair(j, i),
                              exponent_log(omega_of_agemo(j, i)))
               .first;
    }
    return it->second;
  }

  std::vector<CheckReport> check_thm1(Analysis& a, RunConfig const& cfg) {
    Group const& g = *a.group();
    std::uint64_t n = g.candidate_order();

    CheckReport part1, part2;
    part1.name = "thm1.i";
    part2.name = "thm1.ii";
    {
      Stopwatch     sw(cfg.timing);
      std::uint64_t domain = n > (std::uint64_t(1) << 32)
                                 ? std::numeric_limits<std::uint64_t>::max()
                                 : n * n;
      bool exhaustive = use_exhaustive(cfg, domain, "thm1");
      part1.add_param("mode", mode_name(exhaustive));
      part2.add_param("mode", mode_name(exhaustive));
      part2.add_param("jk_max", static_cast<std::int64_t>(max_power_shift));
      if (!exhaustive) {
        part1.add_param("seed", static_cast<std::int64_t>(cfg.seed));
        part2.add_param("seed", static_cast<std::int64_t>(cfg.seed));
        thm1_pairs_sampled(g, cfg, part1, part2);
      } else {
        thm1_pairs_exhaustive(g, part1, part2);
      }
      part1.ms = part2.ms = sw.ms();
    }

    CheckReport part3, part4;
    part3.name = "thm1.iii";
    part4.name = "thm1.iv";
    if (g.prime() != 2) {
      Stopwatch sw(cfg.timing);
      bool      enumerable = n <= g.limits().max_elements
                        && cfg.mode != ScanMode::sample;
      part3.add_param("mode", mode_name(enumerable));
      if (enumerable) {
        exponent_of_omegas(a, 0, part3);
      } else {
        part3.add_param("seed", static_cast<std::int64_t>(cfg.seed));
        exponent_of_omegas_sampled(g, cfg, part3);
      }
      part3.ms = sw.ms();
      part4    = skipped("thm1.iv", "p is odd");
    } else {
      Stopwatch sw(cfg.timing);
      part3 = skipped("thm1.iii", "p = 2");
      part4.add_param("mode", "exhaustive");
      exponent_of_omegas(a, 1, part4);
      part4.ms = sw.ms();
    }
    return {part1, part2, part3, part4};
  }

  CheckReport check_order_p_lemma(Analysis& a, RunConfig const& cfg) {
    Stopwatch    sw(cfg.timing);
    Group const& g = *a.group();
    CheckReport  r;
    r.name = "lemma.order_p";

    std::vector<ExpVec> order_p, order_p2;
    for_each_element(a.agemo(1), [&](ExpVec const& x) {
      unsigned o = g.order_log(x);
      if (o == 1) {
        order_p.push_back(x);
      }
      if (o <= 2) {
        order_p2.push_back(x);
      }
    });
    std::uint64_t domain     = order_p.size() * order_p2.size();
    bool          exhaustive = use_exhaustive(cfg, domain, "lemma.order_p");
    r.add_param("mode", mode_name(exhaustive));
    std::size_t w     = 0;
    auto        check = [&](ExpVec const& g1, ExpVec const& g2) {
      ++r.tested;
      ExpVec c = g.commutator(g1, g2);
      if (!Group::is_identity(c) && w++ < max_witness_sets) {
        r.fail({g1, g2, c});
      }
    };
    if (exhaustive) {
      for (auto const& g1 : order_p) {
        for (auto const& g2 : order_p2) {
          check(g1, g2);
        }
      }
    } else if (!order_p.empty()) {
      r.add_param("seed", static_cast<std::int64_t>(cfg.seed));
      Rng rng(seed_for(cfg, 2));
      for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        check(order_p[rng.below(order_p.size())],
              order_p2[rng.below(order_p2.size())]);
      }
    }
    // consequence: Omega_1(G^p) is abelian
    Subgroup const& O = a.omega_of_agemo(1, 1);
    ++r.tested;
    if (!is_abelian(O)) {
      r.fail(commutator_outside(O, 64), "Omega_1(G^p) is not abelian");
    }
    r.ms = sw.ms();
    return r;
  }

  CheckReport check_power_inclusion(Analysis& a, RunConfig const& cfg) {
    Stopwatch   sw(cfg.timing);
    CheckReport r;
    r.name = "prop.power_inclusion";
    r.add_param("i_max", static_cast<std::int64_t>(cfg.i_max));
    r.add_param("j_max", static_cast<std::int64_t>(cfg.j_max));
    r.add_param("k_max", static_cast<std::int64_t>(cfg.k_max));
    for (unsigned k = 1; k <= cfg.k_max; ++k) {
      for (unsigned i = 0; i <= cfg.i_max; ++i) {
        for (unsigned j = 0; j <= cfg.j_max; ++j) {
          ++r.tested;
          std::string where = "i=" + std::to_string(i) + " j="
                              + std::to_string(j) + " k=" + std::to_string(k);
          Subgroup lhs = agemo(a.omega_of_agemo(k, static_cast<int>(i)), j);
          Subgroup const& rhs
              = a.omega_of_agemo(k + j, static_cast<int>(i) - static_cast<int>(j));
          if (!leq(lhs, rhs)) {
            r.fail(first_outside(lhs, rhs), where + ": inclusion fails");
            continue;
          }
          // lhs <= rhs, so exp(rhs) bounds exp(lhs)
          unsigned bound = i > j ? i - j : 0;
          unsigned e     = a.omega_exponent_log(
              k + j, static_cast<int>(i) - static_cast<int>(j));
          if (e > bound) {
            e = exponent_log(lhs);
          }
          if (e > bound) {
            r.fail(lhs.generators(), where + ": exponent p^" + std::to_string(e));
          }
        }
      }
    }
    r.ms = sw.ms();
    return r;
  }

  CheckReport check_shortening_lemma(Analysis& a, RunConfig const& cfg) {
    if (a.prime() == 2) {
      return skipped("lemma.shortening", "p = 2");
    }
    Stopwatch   sw(cfg.timing);
    CheckReport r;
    r.name = "lemma.shortening";
    r.add_param("i_max", static_cast<std::int64_t>(cfg.i_max));
    r.add_param("j_max", static_cast<std::int64_t>(cfg.j_max));
    for (unsigned i = 1; i <= cfg.i_max; ++i) {
      Subgroup const& o2 = a.omega_of_agemo(2, static_cast<int>(i));
      Subgroup const& o1 = a.omega_of_agemo(1, static_cast<int>(i));
      for (unsigned j = 0; j <= cfg.j_max; ++j) {
        ++r.tested;
        Subgroup comm  = commutator_subgroup(agemo(o2, j), o1);
        Subgroup bound = agemo(o2, j + 2);
        if (!leq(comm, bound)) {
          r.fail(first_outside(comm, bound),
                 "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
      }
    }
    r.ms = sw.ms();
    return r;
  }

  Chain build_theorem3_chain(Analysis& a, unsigned i) {
    if (i == 0) {
      throw DomainError("the omega chain needs i >= 1");
    }
    int   ii = static_cast<int>(i);
    Chain terms{a.omega_of_agemo(1, ii)};
    if (i >= 2) {
      Subgroup const& o2 = a.omega_of_agemo(2, ii);
      for (unsigned t = 0; t + 2 <= i; ++t) {
        terms.push_back(agemo(o2, t));
      }
    }
    terms.push_back(Subgroup(a.group()));
    Chain chain;
    for (auto& s : terms) {
      if (chain.empty() || !equal(chain.back(), s)) {
        chain.push_back(std::move(s));
      }
    }
    return chain;
  }

  CheckReport check_theorem3_chain(Analysis& a, unsigned i, bool timing) {
    if (a.prime() == 2) {
      return skipped("chain", "p = 2");
    }
    Stopwatch   sw(timing);
    Chain       chain = build_theorem3_chain(a, i);
    CheckReport r = verify_chain(a.omega_of_agemo(1, static_cast<int>(i)), chain);
    r.name        = "chain";
    r.params.insert(r.params.begin(), {"i", static_cast<std::int64_t>(i)});
    if (chain.size() - 1 > i) {
      r.fail(chain.front().generators(),
             "chain length " + std::to_string(chain.size() - 1) + " exceeds i");
    }
    r.ms = sw.ms();
    return r;
  }

  std::vector<CheckReport> check_theorem3_chains(Analysis&        a,
                                                 RunConfig const& cfg) {
    if (a.prime() == 2) {
      return {skipped("chain", "p = 2")};
    }
    std::vector<CheckReport> out;
    for (unsigned i = 1; i <= cfg.i_max; ++i) {
      guarded(out, "chain",
              [&] { out.push_back(check_theorem3_chain(a, i, cfg.timing)); });
    }
    return out;
  }

  std::vector<CheckReport> verify_main_odd(Analysis& a, RunConfig const& cfg) {
    if (a.prime() == 2) {
      return {skipped("main.odd", "p = 2")};
    }
    std::vector<CheckReport> out;
    for (unsigned j = 1; j <= cfg.j_max; ++j) {
      for (unsigned i = 1; i <= cfg.i_max; ++i) {
        guarded(out, "main.odd", [&] {
          Stopwatch       sw(cfg.timing);
          Subgroup const& H = a.omega_of_agemo(j, static_cast<int>(i));
          CheckReport     r;
          r.name = "main.odd";
          r.add_param("i", static_cast<std::int64_t>(i));
          r.add_param("j", static_cast<std::int64_t>(j));
          r.add_param("order_log", static_cast<std::int64_t>(H.order_log()));
          auto c        = pn_class(H);
          bool powerful = is_powerful(H);
          r.add_param("class", c ? static_cast<std::int64_t>(*c) : -1);
          r.tested = 1;
          if (!powerful) {
            r.fail(commutator_outside(H, 1), "not powerful");
          } else if (!c || *c > i) {
            r.fail(H.generators(), c ? "class exceeds i"
                                     : "not powerfully nilpotent");
          }
          r.ms = sw.ms();
          out.push_back(std::move(r));
        });
      }
    }
    return out;
  }

  std::vector<CheckReport> verify_main_even(Analysis& a, RunConfig const& cfg) {
    if (a.prime() != 2) {
      return {skipped("main.even", "p is odd")};
    }
    std::vector<CheckReport> out;
    for (unsigned j = 2; j <= cfg.j_max; ++j) {
      for (unsigned i = 1; i <= cfg.i_max; ++i) {
        guarded(out, "main.even", [&] {
          Stopwatch       sw(cfg.timing);
          Subgroup const& H = a.omega_of_agemo(j, static_cast<int>(i));
          CheckReport     r;
          r.name = "main.even";
          r.add_param("i", static_cast<std::int64_t>(i));
          r.add_param("j", static_cast<std::int64_t>(j));
          r.add_param("order_log", static_cast<std::int64_t>(H.order_log()));
          auto     c     = pn_class(H);
          unsigned bound = std::max(i, 2u) - 1;
          r.add_param("class", c ? static_cast<std::int64_t>(*c) : -1);
          r.tested = 1;
          if (!c || *c > bound) {
            r.fail(H.generators(), c ? "class exceeds max(i-1,1)"
                                     : "not powerfully nilpotent");
          }
          r.ms = sw.ms();
          out.push_back(std::move(r));
        });
      }
    }
    for (unsigned i = 1; i <= cfg.i_max; ++i) {
      guarded(out, "main.even.control", [&] {
        Stopwatch       sw(cfg.timing);
        Subgroup const& H = a.omega_of_agemo(1, static_cast<int>(i));
        CheckReport     r;
        r.name = "main.even.control";
        r.add_param("i", static_cast<std::int64_t>(i));
        r.add_param("j", std::int64_t{1});
        bool powerful = is_powerful(H);
        r.add_param("powerful", std::int64_t{powerful});
        r.tested = 1;
        if (!powerful) {
          r.status = Status::expected_fail;
          for (auto const& w : commutator_outside(H, 2)) {
            r.add_witness(w);
          }
          r.notes.push_back("Omega_" + std::to_string(i)
                            + "(G^2) is not powerful");
        }
        r.ms = sw.ms();
        out.push_back(std::move(r));
      });
    }
    return out;
  }

  std::optional<Suite> parse_suite(std::string const& name) {
    static std::pair<char const*, Suite> const table[] = {
        {"all", Suite::all},         {"thm1", Suite::thm1},
        {"lemma-p", Suite::lemma_p}, {"prop", Suite::prop},
        {"shorten", Suite::shorten}, {"chain", Suite::chain},
        {"main", Suite::main}};
    for (auto const& [n, s] : table) {
      if (name == n) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::vector<CheckReport> run_suite(Analysis&        a,
                                     RunConfig const& cfg,
                                     Suite            suite) {
    std::vector<CheckReport> out;
    {
      Stopwatch   sw(cfg.timing);
      CheckReport c = check_consistency(a.group());
      c.ms          = sw.ms();
      bool ok       = c.status == Status::pass;
      out.push_back(std::move(c));
      if (!ok) {
        return out;
      }
    }
    bool powerful = false;
    guarded(out, "powerful", [&] {
      CheckReport r;
      r.name   = "powerful";
      r.tested = 1;
      powerful = a.is_powerful();
      if (!powerful) {
        r.status = Status::skipped;
        r.add_param("reason", "group is not powerful");
        for (auto const& w : commutator_outside(a.whole(), a.prime() == 2 ? 2 : 1)) {
          r.add_witness(w);
        }
      }
      out.push_back(std::move(r));
    });
    if (!powerful) {
      return out;
    }
    auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
    auto append = [&](std::vector<CheckReport> rs) {
      for (auto& r : rs) {
        out.push_back(std::move(r));
      }
    };
    if (want(Suite::thm1)) {
      guarded(out, "thm1", [&] { append(check_thm1(a, cfg)); });
    }
    if (want(Suite::lemma_p)) {
      guarded(out, "lemma.order_p",
              [&] { out.push_back(check_order_p_lemma(a, cfg)); });
    }
    if (want(Suite::prop)) {
      guarded(out, "prop.power_inclusion",
              [&] { out.push_back(check_power_inclusion(a, cfg)); });
    }
    if (want(Suite::shorten)) {
      guarded(out, "lemma.shortening",
              [&] { out.push_back(check_shortening_lemma(a, cfg)); });
    }
    if (want(Suite::chain)) {
      append(check_theorem3_chains(a, cfg));
    }
    if (want(Suite::main)) {
      append(a.prime() == 2 ? verify_main_even(a, cfg)
                            : verify_main_odd(a, cfg));
    }
    return out;
  }

  int exit_code(std::vector<CheckReport> const& reports) noexcept {
    bool limited = false;
    for (auto const& r : reports) {
      if (r.status == Status::fail) {
        return 1;
      }
      limited = limited || r.resource_limited;
    }
    return limited ? 3 : 0;
  }

}  // namespace pcgroups
