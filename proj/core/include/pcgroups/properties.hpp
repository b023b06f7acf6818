#pragma once

#include <optional>

#include "pcgroups/report.hpp"
#include "pcgroups/subgroup.hpp"

namespace pcgroups {

  // Numerical invariants of a p-group H: |H| = p^n, exp H = p^e, rank r
  // (minimal number of generators), powerful nilpotency class c and powerful
  // coclass n - c when H is powerfully nilpotent.
  struct GroupProfile {
    unsigned                order_log    = 0;
    unsigned                exponent_log = 0;
    unsigned                rank         = 0;
    std::optional<unsigned> pn_class;
    std::optional<int>      coclass;
  };

  // [H,H] <= H^p for odd p, [H,H] <= H^4 for p = 2.
  bool is_powerful(Subgroup const& H);

  // [H,H] <= H^{p^2}
  bool is_strongly_powerful(Subgroup const& H);

  // Z_0 = 1, Z_k = {x in H : [x, H] <= Z_{k-1}^p}, stopping once the series
  // reaches H or stabilizes. Returned ascending, starting with Z_0.
  //
  // If 1 = K_0 <= ... <= K_t = H is any powerfully central chain then
  // K_l <= Z_l for all l (induction: K_{l-1} <= Z_{l-1} gives
  // [K_l, H] <= K_{l-1}^p <= Z_{l-1}^p), so the series reaches H in as few
  // steps as any chain.
  Chain upper_powerfully_central_series(Subgroup const& H);

  // Length of a shortest powerfully central chain; 0 for the trivial group,
  // nullopt when H is not powerfully nilpotent (including non-powerful H for
  // p = 2).
  std::optional<unsigned> pn_class(Subgroup const& H);

  // Checks that chain runs from H down to 1 (or up, if !descending) and that
  // [S_l, H] <= S_{l+1}^p for each adjacent pair S_l >= S_{l+1}. Throws
  // DomainError if the terms are not nested.
  CheckReport verify_chain(Subgroup const& H,
                           Chain const&    chain,
                           bool            descending = true);

  // log_p |H : H^p [H,H]|
  unsigned rank(Subgroup const& H);

  GroupProfile profile(Subgroup const& H);

}  // namespace pcgroups
