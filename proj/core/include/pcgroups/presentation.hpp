#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcgroups {

  // One generator power g^exp inside a word. Generator indices are 0-based.
  struct Letter {
    std::size_t  gen;
    std::int64_t exp;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  // An unreduced product of generator powers.
  using Word = std::vector<Letter>;

  // Key (j, i) with j > i of the relation [g_j, g_i] = C_ji.
  using CommKey = std::pair<std::size_t, std::size_t>;

  bool is_prime(std::uint64_t n) noexcept;

  // A weighted power-commutator presentation of a finite p-group.
  //
  // Generator g_i has relative order p^{m_i}. Power relations read
  // g_i^{p^{m_i}} = R_i with R_i a word in generators of index > i, and
  // commutator relations read [g_j, g_i] = C_ji for j > i with C_ji a word in
  // generators of index > j. Absent relations are trivial. The convention
  // g_j g_i = g_i g_j [g_j, g_i] is used throughout.
  //
  // Instances are produced by make() or parse() and are immutable; stored
  // relation words are in collected normal form, so every exponent on
  // generator k lies in [0, p^{m_k}).
  class Presentation {
   public:
    Presentation() = default;

    // Validates the structure, then rewrites every relation word into its
    // collected normal form (negative exponents allowed on input). Trivial
    // relations are dropped.
    static Presentation make(std::uint64_t                 p,
                             std::vector<std::string>      names,
                             std::vector<unsigned>         order_logs,
                             std::map<std::size_t, Word>   power_rels,
                             std::map<CommKey, Word>       comm_rels);

    std::uint64_t prime() const noexcept {
      return p_;
    }
    std::size_t num_gens() const noexcept {
      return names_.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::string const& name(std::size_t i) const {
      return names_.at(i);
    }
    // m_i, so that g_i has relative order p^{m_i}.
    std::vector<unsigned> const& order_logs() const noexcept {
      return order_logs_;
    }
    std::uint64_t relative_order(std::size_t i) const;

    // Empty word means the relation is trivial.
    Word const& power_relation(std::size_t i) const;
    Word const& commutator_relation(std::size_t j, std::size_t i) const;

    std::map<std::size_t, Word> const& power_relations() const noexcept {
      return power_rels_;
    }
    std::map<CommKey, Word> const& commutator_relations() const noexcept {
      return comm_rels_;
    }

    // Index of a generator name, or num_gens() if unknown.
    std::size_t index_of(std::string_view name) const noexcept;

    // log_p of candidate_order().
    unsigned candidate_order_log() const noexcept;

    friend bool operator==(Presentation const&, Presentation const&)
        = default;

   private:
    friend class Group;

    std::uint64_t               p_ = 0;
    std::vector<std::string>    names_;
    std::vector<unsigned>       order_logs_;
    std::map<std::size_t, Word> power_rels_;
    std::map<CommKey, Word>     comm_rels_;

    // Checks everything except the index restriction on relation words.
    void validate_header() const;
    void validate_relations() const;
  };

  // p^{sum m_i}; the group order when the presentation is consistent.
  // Throws ResourceLimit if it does not fit in 64 bits.
  std::uint64_t candidate_order(Presentation const& P);

  // Parse the line-oriented text format:
  //
  //   p = 3
  //   gens a b c
  //   orders a:3 b:3 c:9
  //   rel a^3 = 1
  //   rel [b,a] = c^3
  //
  // Throws ParseError, with the position, for syntax problems and for
  // problems found while reading (non-prime p, duplicate names or relations,
  // orders that are not powers of p). Violations of the index restriction
  // raise PresentationError.
  Presentation parse(std::string_view text);

  // Inverse of parse(): parse(render(P)) == P.
  std::string render(Presentation const& P);

  // Word syntax: factors separated by '*', each `atom` or `atom^int`, where
  // atom is a generator name, `1`, `(word)` or, if allow_brackets, `[w1,w2]`
  // (expanded to w1^-1 w2^-1 w1 w2).
  Word parse_word(Presentation const& P,
                  std::string_view    text,
                  bool                allow_brackets = true);

  // Renders `a^1*b^2`; the empty word renders as `1`.
  std::string render_word(Presentation const& P, Word const& w);

  Word invert_word(Word const& w);

}  // namespace pcgroups
