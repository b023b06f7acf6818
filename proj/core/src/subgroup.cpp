#include "pcgroups/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <tuple>
#include <unordered_set>

#include "pcgroups/errors.hpp"

namespace pcgroups {

  namespace {

    constexpr std::uint64_t max_cached_powers = 4096;

    std::uint64_t ipow(std::uint64_t p, unsigned k) {
      std::uint64_t r = 1;
      while (k-- > 0) {
        r *= p;
      }
      return r;
    }

    // v_p(e) for e > 0
    unsigned valuation(std::uint64_t e, std::uint64_t p) {
      unsigned v = 0;
      while (e % p == 0) {
        e /= p;
        ++v;
      }
      return v;
    }

    std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
      std::int64_t t = 0, new_t = 1;
      std::int64_t r = static_cast<std::int64_t>(m),
                   new_r = static_cast<std::int64_t>(a % m);
      while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
      }
      if (t < 0) {
        t += static_cast<std::int64_t>(m);
      }
      return static_cast<std::uint64_t>(t);
    }

    void require_same(GroupPtr const& a, GroupPtr const& b) {
      if (a != b) {
        throw DomainError("subgroups of different ambient groups");
      }
    }

    void check_budget(GroupPtr const& g, std::uint64_t count, char const* what) {
      if (count > g->limits().max_elements) {
        throw ResourceLimit(std::string(what) + " needs "
                            + std::to_string(count)
                            + " elements, above the element budget of "
                            + std::to_string(g->limits().max_elements));
      }
    }

    Subgroup::Entry make_entry(Group const& g, std::size_t depth, ExpVec elem) {
      Subgroup::Entry e;
      e.depth     = depth;
      e.lead_log  = valuation(elem[depth], g.prime());
      e.rel_order = g.relative_order(depth) / ipow(g.prime(), e.lead_log);
      e.inv       = g.inverse(elem);
      e.elem      = std::move(elem);
      if (e.rel_order <= max_cached_powers) {
        e.inv_powers.reserve(e.rel_order);
        e.inv_powers.push_back(g.identity());
        for (std::uint64_t t = 1; t < e.rel_order; ++t) {
          e.inv_powers.push_back(g.multiply(e.inv_powers.back(), e.inv));
        }
      }
      return e;
    }

    // x <- x * u^{-t}
    void reduce_by(Group const& g, ExpVec& x, Subgroup::Entry const& u,
                   std::uint64_t t) {
      if (t == 0) {
        return;
      }
      if (!u.inv_powers.empty()) {
        g.multiply_in_place(x, u.inv_powers[t]);
      } else {
        g.multiply_in_place(x, g.power(u.inv, t));
      }
    }

  }  // namespace

  // Incremental sift-and-spin. Every element that enters a slot queues the
  // elements whose membership certifies closure: its relative power, its
  // commutators with the other slots and its conjugates by the extra
  // conjugators. finish() repeats the full certificate check until it holds
  // for the final sequence.
  class SubgroupBuilder {
   public:
    SubgroupBuilder(GroupPtr group, std::span<ExpVec const> conjugators)
        : g_(std::move(group)),
          slots_(g_->num_gens()),
          conj_(conjugators.begin(), conjugators.end()) {}

    SubgroupBuilder(Subgroup const& start, std::span<ExpVec const> conjugators)
        : SubgroupBuilder(start.group(), conjugators) {
      for (auto const& e : start.entries()) {
        slots_[e.depth] = e;
      }
      if (!conj_.empty()) {
        for (auto const& e : start.entries()) {
          for (auto const& c : conj_) {
            queue_.push_back(g_->conjugate(e.elem, c));
          }
        }
        drain();
      }
    }

    bool contains(ExpVec x) const {
      Group const& g = *g_;
      for (std::size_t d = 0; d < x.size(); ++d) {
        if (x[d] == 0) {
          continue;
        }
        auto const& slot = slots_[d];
        if (!slot) {
          return false;
        }
        std::uint64_t lead = ipow(g.prime(), slot->lead_log);
        if (x[d] % lead != 0) {
          return false;
        }
        reduce_by(g, x, *slot, x[d] / lead);
      }
      return true;
    }

    // Returns true if x was not already a member.
    bool add(ExpVec x) {
      bool grew = sift_insert(std::move(x));
      drain();
      return grew;
    }

    Subgroup finish() {
      for (;;) {
        drain();
        std::vector<Subgroup::Entry const*> live;
        for (auto const& s : slots_) {
          if (s) {
            live.push_back(&*s);
          }
        }
        for (std::size_t a = 0; a < live.size(); ++a) {
          queue_.push_back(g_->power(live[a]->elem, live[a]->rel_order));
          for (std::size_t b = a + 1; b < live.size(); ++b) {
            queue_.push_back(g_->commutator(live[a]->elem, live[b]->elem));
          }
          for (auto const& c : conj_) {
            queue_.push_back(g_->conjugate(live[a]->elem, c));
          }
        }
        bool grew = false;
        while (!queue_.empty()) {
          ExpVec x = std::move(queue_.front());
          queue_.pop_front();
          grew = sift_insert(std::move(x)) || grew;
        }
        if (!grew) {
          break;
        }
      }
      Subgroup S(g_);
      for (auto& s : slots_) {
        if (s) {
          S.igs_.push_back(std::move(*s));
        }
      }
      return S;
    }

   private:
    void drain() {
      while (!queue_.empty()) {
        ExpVec x = std::move(queue_.front());
        queue_.pop_front();
        sift_insert(std::move(x));
      }
    }

    bool sift_insert(ExpVec x) {
      Group const& g = *g_;
      std::uint64_t p = g.prime();
      for (std::size_t d = 0; d < x.size(); ++d) {
        if (x[d] == 0) {
          continue;
        }
        auto&    slot = slots_[d];
        unsigned v    = valuation(x[d], p);
        if (slot && v >= slot->lead_log) {
          reduce_by(g, x, *slot, x[d] / ipow(p, slot->lead_log));
          continue;
        }
        // normalize the leading exponent to exactly p^v
        std::uint64_t modulus = g.relative_order(d) / ipow(p, v);
        std::uint64_t unit    = x[d] / ipow(p, v);
        if (unit != 1) {
          x = g.power(x, inverse_mod(unit, modulus));
        }
        std::optional<Subgroup::Entry> old = std::move(slot);
        slot = make_entry(g, d, std::move(x));
        if (old) {
          queue_.push_back(std::move(old->elem));
        }
        queue_.push_back(g.power(slot->elem, slot->rel_order));
        for (auto const& s : slots_) {
          if (s && s->depth != d) {
            queue_.push_back(g.commutator(slot->elem, s->elem));
          }
        }
        for (auto const& c : conj_) {
          queue_.push_back(g.conjugate(slot->elem, c));
        }
        return true;
      }
      return false;
    }

    GroupPtr                                     g_;
    std::vector<std::optional<Subgroup::Entry>> slots_;
    std::vector<ExpVec>                          conj_;
    std::deque<ExpVec>                           queue_;
  };

  Subgroup::Subgroup(GroupPtr group) : group_(std::move(group)) {
    if (!group_) {
      throw DomainError("subgroup needs an ambient group");
    }
  }

  std::vector<ExpVec> Subgroup::generators() const {
    std::vector<ExpVec> out;
    out.reserve(igs_.size());
    for (auto const& e : igs_) {
      out.push_back(e.elem);
    }
    return out;
  }

  std::vector<Element> Subgroup::generator_elements() const {
    std::vector<Element> out;
    for (auto const& e : igs_) {
      out.emplace_back(group_, e.elem);
    }
    return out;
  }

  std::uint64_t Subgroup::order() const noexcept {
    std::uint64_t o = 1;
    for (auto const& e : igs_) {
      o *= e.rel_order;
    }
    return o;
  }

  unsigned Subgroup::order_log() const noexcept {
    unsigned l = 0;
    for (auto const& e : igs_) {
      l += group_->presentation().order_logs()[e.depth] - e.lead_log;
    }
    return l;
  }

  ExpVec Subgroup::residue(ExpVec x) const {
    Group const& g = *group_;
    for (auto const& e : igs_) {
      std::uint64_t lead = ipow(g.prime(), e.lead_log);
      reduce_by(g, x, e, x[e.depth] / lead);
    }
    return x;
  }

  bool Subgroup::contains(ExpVec const& x) const {
    Group const& g = *group_;
    ExpVec       y = x;
    std::size_t  a = 0;
    for (std::size_t d = 0; d < y.size(); ++d) {
      if (y[d] == 0) {
        continue;
      }
      while (a < igs_.size() && igs_[a].depth < d) {
        ++a;
      }
      if (a == igs_.size() || igs_[a].depth != d) {
        return false;
      }
      std::uint64_t lead = ipow(g.prime(), igs_[a].lead_log);
      if (y[d] % lead != 0) {
        return false;
      }
      reduce_by(g, y, igs_[a], y[d] / lead);
    }
    return true;
  }

  bool Subgroup::contains(Element const& x) const {
    require_same(group_, x.group());
    return contains(x.exponents());
  }

  Subgroup trivial_subgroup(GroupPtr const& group) {
    return Subgroup(group);
  }

  Subgroup whole_group(GroupPtr const& group) {
    std::vector<ExpVec> gens;
    for (std::size_t i = 0; i < group->num_gens(); ++i) {
      gens.push_back(group->generator(i));
    }
    return close(group, gens);
  }

  Subgroup close(GroupPtr const& group, std::span<ExpVec const> gens) {
    SubgroupBuilder b(group, {});
    for (auto const& x : gens) {
      b.add(x);
    }
    return b.finish();
  }

  Subgroup close(GroupPtr const& group, std::vector<Element> const& gens) {
    std::vector<ExpVec> raw;
    for (auto const& x : gens) {
      require_same(group, x.group());
      raw.push_back(x.exponents());
    }
    return close(group, raw);
  }

  Subgroup normal_closure(GroupPtr const&         group,
                          std::span<ExpVec const> gens,
                          std::span<ExpVec const> ambient_gens) {
    SubgroupBuilder b(group, ambient_gens);
    for (auto const& x : gens) {
      b.add(x);
    }
    return b.finish();
  }

  bool contains(Subgroup const& S, Element const& x) {
    return S.contains(x);
  }

  bool leq(Subgroup const& S, Subgroup const& T) {
    require_same(S.group(), T.group());
    for (auto const& e : S.entries()) {
      if (!T.contains(e.elem)) {
        return false;
      }
    }
    return true;
  }

  bool equal(Subgroup const& S, Subgroup const& T) {
    return S.order() == T.order() && leq(S, T);
  }

  Subgroup join(Subgroup const& S, Subgroup const& T) {
    require_same(S.group(), T.group());
    SubgroupBuilder b(S, {});
    for (auto const& e : T.entries()) {
      b.add(e.elem);
    }
    return b.finish();
  }

  void for_each_element(Subgroup const&                           S,
                        std::function<void(ExpVec const&)> const& fn) {
    Group const& g = *S.group();
    check_budget(S.group(), S.order(), "element enumeration");
    auto const&         igs = S.entries();
    std::vector<ExpVec> prefix(igs.size() + 1, g.identity());
    // prefix[a] = u_1^{e_1} ... u_a^{e_a}
    auto rec = [&](auto&& self, std::size_t a) -> void {
      if (a == igs.size()) {
        fn(prefix[a]);
        return;
      }
      prefix[a + 1] = prefix[a];
      for (std::uint64_t e = 0; e < igs[a].rel_order; ++e) {
        if (e != 0) {
          g.multiply_in_place(prefix[a + 1], igs[a].elem);
        }
        self(self, a + 1);
      }
    };
    rec(rec, 0);
  }

  std::vector<ExpVec> elements(Subgroup const& S) {
    std::vector<ExpVec> out;
    out.reserve(S.order());
    for_each_element(S, [&](ExpVec const& x) { out.push_back(x); });
    return out;
  }

  std::vector<ExpVec> coset_representatives(Subgroup const& H,
                                            Subgroup const& N) {
    require_same(H.group(), N.group());
    Group const&                      g    = *H.group();
    auto                              gens = H.generators();
    std::vector<ExpVec>               reps{g.identity()};
    std::unordered_set<std::uint64_t> seen{g.index(g.identity())};
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (auto const& u : gens) {
        ExpVec y = N.residue(g.multiply(reps[a], u));
        if (seen.insert(g.index(y)).second) {
          reps.push_back(std::move(y));
          check_budget(H.group(), reps.size(), "coset enumeration");
        }
      }
    }
    return reps;
  }

  Subgroup commutator_subgroup(Subgroup const& H, Subgroup const& K) {
    require_same(H.group(), K.group());
    Group const&        g = *H.group();
    std::vector<ExpVec> comms;
    std::vector<ExpVec> ambient = H.generators();
    for (auto const& h : H.entries()) {
      for (auto const& k : K.entries()) {
        comms.push_back(g.commutator(h.elem, k.elem));
      }
    }
    for (auto const& k : K.entries()) {
      ambient.push_back(k.elem);
    }
    return normal_closure(H.group(), comms, ambient);
  }

  // H^{p^j} is normal in H, so it contains the normal closure L of the
  // p^j-th powers of the generators. Conversely H^{p^j} <= L exactly when
  // every element of H has its p^j-th power in L. Let Z >= L with Z/L
  // central in H/L. Powering is a homomorphism on Z/L, so Z^{p^j} <= L can
  // be read off generators, and then (xz)^{p^j} = x^{p^j} z^{p^j} mod L
  // leaves one representative per coset of Z to test. Failing powers are
  // added to L until nothing fails.
  Subgroup agemo(Subgroup const& H, unsigned j) {
    if (j == 0) {
      return H;
    }
    Group const& g = *H.group();
    if (j > g.presentation().candidate_order_log()) {
      return Subgroup(H.group());
    }
    std::uint64_t       q    = ipow(g.prime(), j);
    std::vector<ExpVec> gens = H.generators();
    std::vector<ExpVec> seeds;
    for (auto const& u : gens) {
      seeds.push_back(g.power(u, q));
    }
    Subgroup L = normal_closure(H.group(), seeds, gens);
    for (;;) {
      auto central = [&](ExpVec const& z) {
        for (auto const& h : gens) {
          if (!L.contains(g.commutator(z, h))) {
            return false;
          }
        }
        return true;
      };
      SubgroupBuilder zb(L, {});
      for (auto const& u : gens) {
        for (ExpVec y = u; !Group::is_identity(y); y = g.power(y, g.prime())) {
          if (central(y)) {
            zb.add(y);
            break;
          }
        }
      }
      Subgroup            Z = zb.finish();
      std::vector<ExpVec> extra;
      for (auto const& e : Z.entries()) {
        ExpVec y = g.power(e.elem, q);
        if (!L.contains(y)) {
          extra.push_back(std::move(y));
        }
      }
      if (extra.empty()) {
        for (auto const& r : coset_representatives(H, Z)) {
          ExpVec y = g.power(r, q);
          if (!L.contains(y)) {
            extra.push_back(std::move(y));
          }
        }
      }
      if (extra.empty()) {
        return L;
      }
      SubgroupBuilder b(L, gens);
      for (auto& y : extra) {
        b.add(std::move(y));
      }
      L = b.finish();
    }
  }

  Subgroup omega(Subgroup const& H, int i) {
    if (i < 0) {
      return Subgroup(H.group());
    }
    Group const&    g = *H.group();
    SubgroupBuilder b(H.group(), {});
    for_each_element(H, [&](ExpVec const& x) {
      if (!b.contains(x) && g.power_is_trivial(x, static_cast<unsigned>(i))) {
        b.add(x);
      }
    });
    return b.finish();
  }

  std::vector<Subgroup> omega_series(Subgroup const& H) {
    Group const&                 g = *H.group();
    std::vector<SubgroupBuilder> layers;
    for_each_element(H, [&](ExpVec const& x) {
      unsigned o = g.order_log(x);
      while (layers.size() <= o) {
        layers.emplace_back(H.group(), std::span<ExpVec const>{});
      }
      if (!layers[o].contains(x)) {
        layers[o].add(x);
      }
    });
    std::vector<Subgroup> out{Subgroup(H.group())};
    for (std::size_t i = 1; i < layers.size(); ++i) {
      SubgroupBuilder b(out.back(), {});
      Subgroup        layer = layers[i].finish();
      for (auto const& u : layer.entries()) {
        b.add(u.elem);
      }
      out.push_back(b.finish());
    }
    return out;
  }

  // Least e with H^{p^e} = 1, starting from the largest generator order,
  // which is a lower bound.
  unsigned exponent_log(Subgroup const& H) {
    Group const& g = *H.group();
    unsigned     e = 0;
    for (auto const& u : H.entries()) {
      e = std::max(e, g.order_log(u.elem));
    }
    while (!agemo(H, e).is_trivial()) {
      ++e;
    }
    return e;
  }

  std::uint64_t exponent(Subgroup const& H) {
    return ipow(H.group()->prime(), exponent_log(H));
  }

  bool is_normal(Subgroup const& H, Subgroup const& G) {
    require_same(H.group(), G.group());
    Group const& g = *H.group();
    for (auto const& u : H.entries()) {
      for (auto const& c : G.entries()) {
        if (!H.contains(g.conjugate(u.elem, c.elem))) {
          return false;
        }
      }
    }
    return true;
  }

  std::uint64_t index(Subgroup const& H, Subgroup const& K) {
    if (!leq(K, H)) {
      throw DomainError("index: K is not a subgroup of H");
    }
    return H.order() / K.order();
  }

  // The result C is normal in H, and for any K <= C normal in H a coset xK
  // lies in C iff its representative does: [xk, h] = [x, h]^k [k, h] lies
  // in N iff [x, h] does. K starts as the normal closure of N and the first
  // qualifying power of each generator, so only |H : K| cosets are tested.
  Subgroup central_preimage(Subgroup const& H, Subgroup const& N) {
    require_same(H.group(), N.group());
    if (!leq(N, H) || !is_normal(N, H)) {
      throw DomainError("central_preimage: N must be a normal subgroup of H");
    }
    Group const& g       = *H.group();
    auto         gens    = H.generators();
    auto         central = [&](ExpVec const& x) {
      for (auto const& h : gens) {
        if (!N.contains(g.commutator(x, h))) {
          return false;
        }
      }
      return true;
    };
    std::vector<ExpVec> seeds = N.generators();
    for (auto const& u : H.entries()) {
      for (ExpVec x = u.elem; !Group::is_identity(x); x = g.power(x, g.prime())) {
        if (central(x)) {
          seeds.push_back(x);
          break;
        }
      }
    }
    Subgroup        K = normal_closure(H.group(), seeds, gens);
    SubgroupBuilder b(K, {});
    for (auto const& r : coset_representatives(H, K)) {
      if (!b.contains(r) && central(r)) {
        b.add(r);
      }
    }
    return b.finish();
  }

  bool is_abelian(Subgroup const& H) {
    Group const& g   = *H.group();
    auto const&  igs = H.entries();
    for (std::size_t a = 0; a < igs.size(); ++a) {
      for (std::size_t b = a + 1; b < igs.size(); ++b) {
        if (!Group::is_identity(g.commutator(igs[a].elem, igs[b].elem))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace pcgroups
