#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pcgroups/collector.hpp"

namespace pcgroups {

  // A subgroup of a consistent ambient group, held as an induced generating
  // sequence: at most one element per depth, depths strictly increasing, and
  // each leading exponent a power of p. The element at depth d with leading
  // exponent p^k contributes a factor p^{m_d - k} to the order, and every
  // element of the subgroup is uniquely u_1^{e_1} ... u_r^{e_r} with e_a
  // below that factor.
  class Subgroup {
   public:
    struct Entry {
      std::size_t   depth;
      unsigned      lead_log;   // leading exponent is p^lead_log
      std::uint64_t rel_order;  // p^{m_depth - lead_log}
      ExpVec        elem;
      // inv_powers[t] = elem^{-t}, cached for sifting when small enough
      std::vector<ExpVec> inv_powers;
      ExpVec              inv;
    };

    // The trivial subgroup.
    explicit Subgroup(GroupPtr group);

    GroupPtr const& group() const noexcept {
      return group_;
    }
    std::vector<Entry> const& entries() const noexcept {
      return igs_;
    }
    std::vector<ExpVec> generators() const;
    std::vector<Element> generator_elements() const;

    std::uint64_t order() const noexcept;
    unsigned      order_log() const noexcept;
    bool          is_trivial() const noexcept {
      return igs_.empty();
    }

    bool contains(ExpVec const& x) const;
    bool contains(Element const& x) const;

    // Canonical representative of the coset x S. Exponents at each depth
    // carrying an IGS element are reduced below its leading exponent.
    ExpVec residue(ExpVec x) const;

   private:
    friend class SubgroupBuilder;

    GroupPtr           group_;
    std::vector<Entry> igs_;
  };

  // Descending chain S_0 >= S_1 >= ... >= S_t in one ambient group.
  using Chain = std::vector<Subgroup>;

  Subgroup whole_group(GroupPtr const& group);
  Subgroup trivial_subgroup(GroupPtr const& group);

  // Smallest subgroup containing gens (sift-and-spin).
  Subgroup close(GroupPtr const& group, std::span<ExpVec const> gens);
  Subgroup close(GroupPtr const& group, std::vector<Element> const& gens);

  // Smallest subgroup containing gens and normalized by ambient_gens.
  Subgroup normal_closure(GroupPtr const&         group,
                          std::span<ExpVec const> gens,
                          std::span<ExpVec const> ambient_gens);

  bool contains(Subgroup const& S, Element const& x);
  bool leq(Subgroup const& S, Subgroup const& T);
  bool equal(Subgroup const& S, Subgroup const& T);

  // <S, T>
  Subgroup join(Subgroup const& S, Subgroup const& T);

  // Visits every element once, as products over the IGS transversal.
  // Throws ResourceLimit if order(S) exceeds the element budget.
  void for_each_element(Subgroup const&                          S,
                        std::function<void(ExpVec const&)> const& fn);
  std::vector<ExpVec> elements(Subgroup const& S);

  // Canonical representatives of the cosets of N in H, N normal in H.
  std::vector<ExpVec> coset_representatives(Subgroup const& H,
                                            Subgroup const& N);

  // [H, K]
  Subgroup commutator_subgroup(Subgroup const& H, Subgroup const& K);

  // H^{p^j}, the subgroup generated by all p^j-th powers.
  Subgroup agemo(Subgroup const& H, unsigned j);

  // Omega_i(H), generated by the elements of order dividing p^i; trivial for
  // i < 0.
  Subgroup omega(Subgroup const& H, int i);

  // Omega_0(H), ..., Omega_e(H) = H where p^e is the exponent of H, from a
  // single enumeration of H.
  std::vector<Subgroup> omega_series(Subgroup const& H);

  std::uint64_t exponent(Subgroup const& H);
  unsigned      exponent_log(Subgroup const& H);

  bool is_normal(Subgroup const& H, Subgroup const& G);

  // |H : K| for K <= H.
  std::uint64_t index(Subgroup const& H, Subgroup const& K);

  // {x in H : [x, h] in N for all h in H}, the preimage of Z(H/N).
  Subgroup central_preimage(Subgroup const& H, Subgroup const& N);

  bool is_abelian(Subgroup const& H);

}  // namespace pcgroups
