#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcgroups/properties.hpp"
#include "pcgroups/report.hpp"
#include "pcgroups/subgroup.hpp"

namespace pcgroups {

  enum class ScanMode {
    automatic,   // exhaustive while the pair domain fits, sampled beyond
    exhaustive,
    sample
  };

  struct RunConfig {
    unsigned      i_max   = 4;
    unsigned      j_max   = 4;
    unsigned      k_max   = 3;
    ScanMode      mode    = ScanMode::automatic;
    std::uint64_t samples = 10'000;
    std::uint64_t seed    = 1;
    // Largest pair domain scanned exhaustively (|G| <= 2^12).
    std::uint64_t max_exhaustive_pairs = std::uint64_t(1) << 24;
    bool          timing               = false;
  };

  // One ambient group together with the subgroups the checks share:
  // G^{p^j} and Omega_i(G^{p^j}) are computed once and cached.
  class Analysis {
   public:
    explicit Analysis(GroupPtr group);

    GroupPtr const& group() const noexcept {
      return group_;
    }
    std::uint64_t prime() const noexcept {
      return group_->prime();
    }
    Subgroup const& whole() const noexcept {
      return whole_;
    }
    bool is_powerful();
    bool is_consistent();

    // G^{p^j}
    Subgroup const& agemo(unsigned j);
    // Omega_i(G^{p^j}); trivial for i < 0.
    Subgroup const& omega_of_agemo(unsigned j, int i);
    // log_p of the exponent of Omega_i(G^{p^j}).
    unsigned omega_exponent_log(unsigned j, int i);

   private:
    GroupPtr                              group_;
    Subgroup                              whole_;
    std::optional<bool>                   powerful_;
    std::optional<bool>                   consistent_;
    std::map<unsigned, Subgroup>          agemo_;
    std::map<unsigned, std::vector<Subgroup>>     omega_;
    std::map<std::pair<unsigned, int>, unsigned> omega_exp_;
  };

  // Element-level bounds for a powerful group: (i) o(y) <= p^i implies
  // o([x,y]) <= p^i; (ii) o(x) <= p^{i+1}, o(y) <= p^i imply
  // o([x^{p^j}, y^{p^k}]) <= p^{i-j-k} for 0 <= j,k <= 3, a negative bound
  // meaning the commutator is trivial; (iii) for odd p,
  // exp Omega_i(G) <= p^i; (iv) for p = 2, exp Omega_i(G^2) <= 2^i.
  // One report per part; the part not applicable to p is skipped.
  std::vector<CheckReport> check_thm1(Analysis& a, RunConfig const& cfg);

  // g1, g2 in G^p with o(g1) = p and o(g2) <= p^2 commute; also
  // Omega_1(G^p) is abelian.
  CheckReport check_order_p_lemma(Analysis& a, RunConfig const& cfg);

  // Omega_i(G^{p^k})^{p^j} <= Omega_{i-j}(G^{p^{k+j}}) and
  // exp(Omega_i(G^{p^k})^{p^j}) <= p^{max(i-j,0)} for 0 <= i <= i_max,
  // 0 <= j <= j_max, 1 <= k <= k_max.
  CheckReport check_power_inclusion(Analysis& a, RunConfig const& cfg);

  // [Omega_i(G^{p^2})^{p^j}, Omega_i(G^p)] <= Omega_i(G^{p^2})^{p^{j+2}} for
  // 1 <= i <= i_max, 0 <= j <= j_max. Odd p only.
  CheckReport check_shortening_lemma(Analysis& a, RunConfig const& cfg);

  // Omega_i(G^p) >= Omega_i(G^{p^2}) >= Omega_i(G^{p^2})^p >= ...
  //             >= Omega_i(G^{p^2})^{p^{i-2}} >= 1
  // with repeated terms collapsed; for i = 1 this is Omega_1(G^p) >= 1.
  Chain build_theorem3_chain(Analysis& a, unsigned i);

  // build_theorem3_chain(a, i) passes verify_chain with length <= i.
  CheckReport check_theorem3_chain(Analysis& a, unsigned i, bool timing = false);

  // check_theorem3_chain for 1 <= i <= i_max.
  std::vector<CheckReport> check_theorem3_chains(Analysis&        a,
                                                 RunConfig const& cfg);

  // Odd p: Omega_i(G^{p^j}) is powerful with powerful class <= i, per (i, j)
  // with 1 <= i <= i_max, 1 <= j <= j_max. The class found is reported in
  // the "class" parameter (-1 if undefined).
  std::vector<CheckReport> verify_main_odd(Analysis& a, RunConfig const& cfg);

  // p = 2: Omega_i(G^{2^j}) has powerful class <= max(i-1, 1) for j >= 2.
  // Also reports whether Omega_i(G^2) is powerful as a negative control
  // ("main.even.control"), expected_fail when it is not.
  std::vector<CheckReport> verify_main_even(Analysis& a, RunConfig const& cfg);

  enum class Suite { all, thm1, lemma_p, prop, shorten, chain, main };

  std::optional<Suite> parse_suite(std::string const& name);

  // Consistency, then the selected checks in a fixed order. Checks that hit
  // a resource limit are reported as skipped with resource_limited set.
  std::vector<CheckReport> run_suite(Analysis&        a,
                                     RunConfig const& cfg,
                                     Suite            suite = Suite::all);

  // Overall outcome: 1 if any report failed, 3 if none failed but some hit a
  // resource limit, 0 otherwise.
  int exit_code(std::vector<CheckReport> const& reports) noexcept;

}  // namespace pcgroups
