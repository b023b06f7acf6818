#include "pcgroups/corpus.hpp"

#include "pcgroups/consistency.hpp"
#include "pcgroups/errors.hpp"

namespace pcgroups::corpus {

  namespace {

    void require_odd_prime(std::uint64_t p) {
      if (p == 2 || !is_prime(p)) {
        throw PresentationError(std::to_string(p) + " is not an odd prime");
      }
    }

    std::int64_t ipow(std::uint64_t p, unsigned k) {
      std::int64_t r = 1;
      while (k-- > 0) {
        r *= static_cast<std::int64_t>(p);
      }
      return r;
    }

    std::string gen_name(std::size_t i, std::size_t n) {
      if (n <= 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "g" + std::to_string(i + 1);
    }

    std::string describe(std::string const&           base,
                         std::uint64_t                p,
                         std::vector<unsigned> const& params) {
      std::string s = base + "(" + std::to_string(p);
      for (unsigned x : params) {
        s += "," + std::to_string(x);
      }
      return s + ")";
    }

  }  // namespace

  Presentation example1(std::uint64_t p) {
    require_odd_prime(p);
    return Presentation::make(
        p, {"a", "b", "c"}, {1, 1, 2}, {},
        {{{1, 0}, Word{{2, static_cast<std::int64_t>(p)}}}});
  }

  Presentation example2() {
    return family(2, 3, 3, 5, 2);
  }

  Presentation example2_odd(std::uint64_t p) {
    require_odd_prime(p);
    return family(p, 3, 3, 5, 2);
  }

  Presentation abelian(std::uint64_t p, std::vector<unsigned> const& parts) {
    if (!is_prime(p)) {
      throw PresentationError(std::to_string(p) + " is not prime");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == 0) {
        throw PresentationError("partition entries must be at least 1");
      }
      names.push_back(gen_name(i, parts.size()));
    }
    return Presentation::make(p, std::move(names), parts, {}, {});
  }

  Presentation family(std::uint64_t p,
                      unsigned      alpha,
                      unsigned      beta,
                      unsigned      gamma,
                      unsigned      delta) {
    if (!is_prime(p)) {
      throw PresentationError(std::to_string(p) + " is not prime");
    }
    if (alpha == 0 || beta == 0 || gamma == 0) {
      throw PresentationError("family orders must be at least p");
    }
    // [a,b] = c^{p^delta} is stored as [b,a] = c^{-p^delta}
    std::map<CommKey, Word> comms;
    if (delta < gamma) {
      comms[{1, 0}] = Word{{2, -ipow(p, delta)}};
    }
    Presentation P = Presentation::make(p, {"a", "b", "c"},
                                        {alpha, beta, gamma}, {},
                                        std::move(comms));
    CheckReport r = check_consistency(P, 1);
    if (r.status == Status::fail) {
      throw PresentationError(
          describe("family", p, {alpha, beta, gamma, delta})
          + " is inconsistent: "
          + (r.notes.empty() ? std::string("overlap failure") : r.notes[0]));
    }
    return P;
  }

  std::vector<Entry> standard() {
    return {
        {"example2", example2()},
        {"abelian(2,1)", abelian(2, {1})},
        {"abelian(2,2,3)", abelian(2, {2, 3})},
        {"abelian(2,3,3,5)", abelian(2, {3, 3, 5})},
        {"family(2,2,2,4,2)", family(2, 2, 2, 4, 2)},
        {"family(2,3,2,4,2)", family(2, 3, 2, 4, 2)},
        {"family(2,4,4,6,2)", family(2, 4, 4, 6, 2)},
        {"example1(3)", example1(3)},
        {"example2_odd(3)", example2_odd(3)},
        {"abelian(3,1)", abelian(3, {1})},
        {"abelian(3,2,2)", abelian(3, {2, 2})},
        {"abelian(3,1,2,3)", abelian(3, {1, 2, 3})},
        {"family(3,2,2,3,1)", family(3, 2, 2, 3, 1)},
        {"family(3,2,3,4,2)", family(3, 2, 3, 4, 2)},
        {"example1(5)", example1(5)},
        {"example2_odd(5)", example2_odd(5)},
        {"abelian(5,2,2)", abelian(5, {2, 2})},
        {"family(5,2,2,3,1)", family(5, 2, 2, 3, 1)},
    };
  }

  std::vector<std::string> constructors() {
    return {"example1 --p P            (P odd)",
            "example2",
            "example2_odd --p P        (P odd)",
            "abelian --p P --params L1,L2,...",
            "family --p P --params ALPHA,BETA,GAMMA,DELTA"};
  }

  Presentation build(std::string const&           name,
                     std::uint64_t                p,
                     std::vector<unsigned> const& params) {
    auto want = [&](std::size_t k) {
      if (params.size() != k) {
        throw PresentationError(name + " expects " + std::to_string(k)
                                + " parameters");
      }
    };
    if (name == "example1") {
      want(0);
      return example1(p);
    }
    if (name == "example2") {
      want(0);
      return example2();
    }
    if (name == "example2_odd") {
      want(0);
      return example2_odd(p);
    }
    if (name == "abelian") {
      return abelian(p, params);
    }
    if (name == "family") {
      want(4);
      return family(p, params[0], params[1], params[2], params[3]);
    }
    throw PresentationError("unknown corpus constructor '" + name + "'");
  }

}  // namespace pcgroups::corpus
