#include "pcgroups/properties.hpp"

#include <algorithm>

#include "pcgroups/errors.hpp"

namespace pcgroups {

  bool is_powerful(Subgroup const& H) {
    unsigned j = H.group()->prime() == 2 ? 2 : 1;
    return leq(commutator_subgroup(H, H), agemo(H, j));
  }

  bool is_strongly_powerful(Subgroup const& H) {
    return leq(commutator_subgroup(H, H), agemo(H, 2));
  }

  Chain upper_powerfully_central_series(Subgroup const& H) {
    Chain series{Subgroup(H.group())};
    while (!equal(series.back(), H)) {
      Subgroup next = central_preimage(H, agemo(series.back(), 1));
      if (equal(next, series.back())) {
        break;
      }
      series.push_back(std::move(next));
    }
    return series;
  }

  std::optional<unsigned> pn_class(Subgroup const& H) {
    if (H.is_trivial()) {
      return 0u;
    }
    if (H.group()->prime() == 2 && !is_powerful(H)) {
      return std::nullopt;
    }
    Chain series = upper_powerfully_central_series(H);
    if (!equal(series.back(), H)) {
      return std::nullopt;
    }
    return static_cast<unsigned>(series.size() - 1);
  }

  CheckReport verify_chain(Subgroup const& H,
                           Chain const&    chain,
                           bool            descending) {
    CheckReport report;
    report.name = "chain";
    Chain terms = chain;
    if (!descending) {
      std::reverse(terms.begin(), terms.end());
    }
    report.add_param("length",
                     static_cast<std::int64_t>(terms.empty() ? 0
                                                             : terms.size() - 1));
    for (std::size_t l = 0; l + 1 < terms.size(); ++l) {
      if (!leq(terms[l + 1], terms[l])) {
        throw DomainError("chain terms are not nested at position "
                          + std::to_string(l + 1));
      }
    }
    if (terms.empty()) {
      throw DomainError("empty chain");
    }
    if (!equal(terms.front(), H)) {
      std::vector<ExpVec> missing;
      for (auto const& e : H.entries()) {
        if (!terms.front().contains(e.elem)) {
          missing.push_back(e.elem);
          break;
        }
      }
      if (missing.empty()) {
        missing.push_back(terms.front().generators().front());
      }
      report.fail(missing, "top term is not H");
      return report;
    }
    if (!terms.back().is_trivial()) {
      report.fail({terms.back().generators().front()},
                  "bottom term is not trivial");
      return report;
    }
    Group const& g = *H.group();
    for (std::size_t l = 0; l + 1 < terms.size(); ++l) {
      ++report.tested;
      Subgroup bound = agemo(terms[l + 1], 1);
      Subgroup comm  = commutator_subgroup(terms[l], H);
      if (leq(comm, bound)) {
        continue;
      }
      std::vector<ExpVec> witness;
      for (auto const& u : terms[l].entries()) {
        for (auto const& h : H.entries()) {
          ExpVec c = g.commutator(u.elem, h.elem);
          if (!bound.contains(c)) {
            witness = {c, u.elem, h.elem};
            break;
          }
        }
        if (!witness.empty()) {
          break;
        }
      }
      if (witness.empty()) {
        for (auto const& e : comm.entries()) {
          if (!bound.contains(e.elem)) {
            witness = {e.elem};
            break;
          }
        }
      }
      report.fail(witness, "[S_" + std::to_string(l) + ", H] is not in S_"
                               + std::to_string(l + 1) + "^p");
      report.add_param("failed_at", static_cast<std::int64_t>(l));
      return report;
    }
    return report;
  }

  unsigned rank(Subgroup const& H) {
    Subgroup frattini = join(agemo(H, 1), commutator_subgroup(H, H));
    return H.order_log() - frattini.order_log();
  }

  GroupProfile profile(Subgroup const& H) {
    GroupProfile prof;
    prof.order_log    = H.order_log();
    prof.exponent_log = exponent_log(H);
    prof.rank         = rank(H);
    prof.pn_class     = pn_class(H);
    if (prof.pn_class) {
      prof.coclass = static_cast<int>(prof.order_log)
                     - static_cast<int>(*prof.pn_class);
    }
    return prof;
  }

}  // namespace pcgroups
