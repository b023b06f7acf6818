#pragma once

#include <cstddef>

#include "pcgroups/collector.hpp"
#include "pcgroups/report.hpp"

namespace pcgroups {

  // Evaluates the overlap identities of a weighted power-commutator
  // presentation through the collector:
  //   (a) g_k (g_j g_i) = (g_k g_j) g_i                     k > j > i
  //   (b) (g_j^{p^{m_j}}) g_i = g_j^{p^{m_j}-1} (g_j g_i)     j > i
  //   (c) g_j (g_i^{p^{m_i}}) = (g_j g_i) g_i^{p^{m_i}-1}     j > i
  //   (d) g_i (g_i^{p^{m_i}}) = (g_i^{p^{m_i}}) g_i
  // The presentation is consistent iff all of them hold. A failing report
  // lists up to max_failures overlaps, each with both collected sides as
  // consecutive witnesses, in the order (a), (b), (c), (d) with indices
  // ascending.
  CheckReport check_consistency(GroupPtr const& group,
                                std::size_t     max_failures = 10);
  CheckReport check_consistency(Presentation const& P,
                                std::size_t         max_failures = 10);

}  // namespace pcgroups
