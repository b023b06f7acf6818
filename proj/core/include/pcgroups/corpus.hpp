#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcgroups/presentation.hpp"

namespace pcgroups::corpus {

  // <a,b,c | a^p = b^p = c^{p^2} = [c,b] = [c,a] = 1, [b,a] = c^p>, p odd.
  Presentation example1(std::uint64_t p);

  // family(2, 3, 3, 5, 2): order 2^11, [a,b] = c^4.
  Presentation example2();

  // family(p, 3, 3, 5, 2) for odd p: order p^11.
  Presentation example2_odd(std::uint64_t p);

  // Direct product of cyclic groups of orders p^{parts[k]}.
  Presentation abelian(std::uint64_t p, std::vector<unsigned> const& parts);

  // Orders p^alpha, p^beta, p^gamma for a, b, c with [a,b] = c^{p^delta} and
  // c central. Throws PresentationError naming the failing overlap when the
  // parameters give an inconsistent presentation.
  Presentation family(std::uint64_t p,
                      unsigned      alpha,
                      unsigned      beta,
                      unsigned      gamma,
                      unsigned      delta);

  struct Entry {
    std::string  name;
    Presentation presentation;
  };

  // The fixed set of consistent powerful groups swept by the verification
  // harness, ordered by prime and then by name.
  std::vector<Entry> standard();

  // Constructor names with their parameter lists, for `corpus list`.
  std::vector<std::string> constructors();

  // Builds a presentation by constructor name. params are the integer
  // arguments after p (partition for abelian, alpha..delta for family).
  Presentation build(std::string const&           name,
                     std::uint64_t                p,
                     std::vector<unsigned> const& params);

}  // namespace pcgroups::corpus
