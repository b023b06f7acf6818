#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pcgroups/presentation.hpp"

namespace pcgroups {

  using Exponent = std::uint32_t;
  // Exponent vector (x_1, ..., x_n) of a collected word g_1^{x_1}...g_n^{x_n}.
  using ExpVec = std::vector<Exponent>;

  struct Limits {
    // Letters processed by one collection run.
    std::uint64_t max_steps = 10'000'000;
    // Elements any single subgroup enumeration may visit.
    std::uint64_t max_elements = std::uint64_t(1) << 20;
  };

  // Collection from the left over a fixed presentation.
  //
  // A Group owns the normalized presentation together with the rewriting
  // tables derived from it. All arithmetic is on exponent vectors in normal
  // form; negative exponents never reach the collector, inverses are solved
  // for left to right instead.
  class Group {
   public:
    // Normalizes the relations of P (see Presentation::make).
    static std::shared_ptr<Group const> make(Presentation const& P,
                                             Limits              limits = {});

    Presentation const& presentation() const noexcept {
      return pres_;
    }
    Limits const& limits() const noexcept {
      return limits_;
    }
    std::uint64_t prime() const noexcept {
      return pres_.prime();
    }
    std::size_t num_gens() const noexcept {
      return rel_orders_.size();
    }
    std::uint64_t relative_order(std::size_t i) const noexcept {
      return rel_orders_[i];
    }
    std::uint64_t candidate_order() const noexcept {
      return candidate_order_;
    }

    ExpVec identity() const {
      return ExpVec(num_gens(), 0);
    }
    ExpVec generator(std::size_t i) const;
    static bool is_identity(ExpVec const& x) noexcept;
    // Index of the first nonzero exponent, or num_gens() for the identity.
    std::size_t depth(ExpVec const& x) const noexcept;

    // x <- x * y
    void multiply_in_place(ExpVec& x, ExpVec const& y) const;
    // x <- x * g_gen^exp
    void multiply_by_generator(ExpVec&      x,
                               std::size_t  gen,
                               std::uint64_t exp) const;
    ExpVec multiply(ExpVec const& x, ExpVec const& y) const;
    ExpVec inverse(ExpVec const& x) const;
    ExpVec power(ExpVec const& x, std::uint64_t k) const;
    // Negative k raises the inverse.
    ExpVec power_signed(ExpVec const& x, std::int64_t k) const;
    // x^-1 y^-1 x y
    ExpVec commutator(ExpVec const& x, ExpVec const& y) const;
    // y^-1 x y
    ExpVec conjugate(ExpVec const& x, ExpVec const& y) const;

    // log_p of the order of x, by repeated p-th powering.
    unsigned      order_log(ExpVec const& x) const;
    std::uint64_t order(ExpVec const& x) const;
    // True iff x^{p^k} = 1, i.e. o(x) <= p^k.
    bool power_is_trivial(ExpVec const& x, unsigned k) const;

    ExpVec normal_form(Word const& w) const;

    // Mixed-radix index of a normal form, x_1 most significant.
    std::uint64_t index(ExpVec const& x) const noexcept;
    ExpVec        from_index(std::uint64_t idx) const;

    Word        to_word(ExpVec const& x) const;
    std::string render(ExpVec const& x) const;

   private:
    struct Syllable {
      std::uint32_t gen;
      std::uint32_t exp;
    };

    struct Frame {
      Syllable const* word;  // nullptr: single syllable (gen, exp)
      std::uint32_t   len;
      std::uint32_t   pos;
      std::uint64_t   reps;
      std::uint64_t   exp;
      std::uint32_t   gen;
    };

    Group(Presentation const& raw, Limits limits);

    void build_tables(Presentation const& raw);
    void build_power_tables(std::size_t k);
    void run(ExpVec& x, std::vector<Frame>& stack) const;
    void apply(ExpVec&             x,
               std::uint32_t       k,
               std::uint64_t       e,
               std::vector<Frame>& stack) const;
    std::vector<Syllable> syllables(ExpVec const& x) const;
    bool commuting(std::vector<Syllable> const& w) const noexcept;
    void push_word(std::vector<Frame>&          stack,
                   std::vector<Syllable> const& w,
                   bool                         abelian,
                   std::uint64_t                reps) const;

    bool comm_trivial(std::size_t l, std::size_t k) const noexcept {
      return comm_trivial_[l * num_gens() + k] != 0;
    }

    Presentation                       pres_;
    Limits                             limits_;
    std::vector<std::uint64_t>         rel_orders_;
    std::uint64_t                      candidate_order_ = 1;
    unsigned                           candidate_log_   = 0;
    std::vector<std::vector<Syllable>> power_;
    // conj_[l*n + k] for l > k: syllables of g_l^{g_k} = g_l [g_l, g_k].
    std::vector<std::vector<Syllable>> conj_;
    std::vector<char>                  comm_trivial_;
    // Words whose syllables commute pairwise; w^r is pushed as scaled
    // syllables instead of r copies.
    std::vector<char> power_abelian_;
    std::vector<char> conj_abelian_;
    // conj_pow_[l*n + k][e] = g_l^{g_k^e} for non-commuting pairs when the
    // relative order of g_k is small enough to tabulate.
    struct PowerTable {
      std::vector<std::vector<Syllable>> words;
      std::vector<char>                  abelian;
    };
    std::vector<PowerTable> conj_pow_;
    std::vector<char>       tabulated_;  // per k: all tables for g_k present
  };

  using GroupPtr = std::shared_ptr<Group const>;

  // An element of a group, tied to it by shared ownership.
  class Element {
   public:
    Element() = default;
    Element(GroupPtr group, ExpVec exps);

    static Element identity(GroupPtr const& group);
    static Element generator(GroupPtr const& group, std::size_t i);

    GroupPtr const& group() const noexcept {
      return group_;
    }
    ExpVec const& exponents() const noexcept {
      return exps_;
    }
    bool is_identity() const noexcept {
      return Group::is_identity(exps_);
    }
    std::string to_string() const {
      return group_->render(exps_);
    }

    friend bool operator==(Element const& x, Element const& y) {
      return x.group_ == y.group_ && x.exps_ == y.exps_;
    }

   private:
    GroupPtr group_;
    ExpVec   exps_;
  };

  Element normal_form(GroupPtr const& group, Word const& w);
  Element multiply(Element const& x, Element const& y);
  Element inverse(Element const& x);
  Element power(Element const& x, std::int64_t k);
  Element commutator(Element const& x, Element const& y);
  std::uint64_t order(Element const& x);

  inline Element operator*(Element const& x, Element const& y) {
    return multiply(x, y);
  }

}  // namespace pcgroups
