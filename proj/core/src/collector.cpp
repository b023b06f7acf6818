#include "pcgroups/collector.hpp"

#include <algorithm>
#include <limits>

#include "pcgroups/errors.hpp"

namespace pcgroups {

  namespace {
    void require_same(GroupPtr const& a, GroupPtr const& b) {
      if (a != b || a == nullptr) {
        throw DomainError("elements belong to different groups");
      }
    }
  }  // namespace

  std::shared_ptr<Group const> Group::make(Presentation const& P,
                                           Limits              limits) {
    return std::shared_ptr<Group const>(new Group(P, limits));
  }

  Group::Group(Presentation const& raw, Limits limits) : limits_(limits) {
    raw.validate_header();
    raw.validate_relations();
    pres_.p_          = raw.p_;
    pres_.names_      = raw.names_;
    pres_.order_logs_ = raw.order_logs_;

    std::size_t n = raw.num_gens();
    rel_orders_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      rel_orders_[i] = raw.relative_order(i);
      candidate_order_ *= rel_orders_[i];
      candidate_log_ += raw.order_logs_[i];
    }
    power_.assign(n, {});
    conj_.assign(n * n, {});
    comm_trivial_.assign(n * n, 1);
    power_abelian_.assign(n, 0);
    conj_abelian_.assign(n * n, 0);
    conj_pow_.assign(n * n, {});
    tabulated_.assign(n, 0);
    build_tables(raw);
  }

  // Relations are normalized from the last generator down: the relations
  // for g_k only mention generators above k, whose tables are complete by
  // the time k is reached.
  void Group::build_tables(Presentation const& raw) {
    std::size_t n = num_gens();
    for (std::size_t k = n; k-- > 0;) {
      for (std::size_t l = k + 1; l < n; ++l) {
        auto it = raw.comm_rels_.find({l, k});
        if (it == raw.comm_rels_.end()) {
          continue;
        }
        ExpVec c = normal_form(it->second);
        if (is_identity(c)) {
          continue;
        }
        pres_.comm_rels_.emplace(CommKey{l, k}, to_word(c));
        auto& cw = conj_[l * n + k];
        cw.push_back({static_cast<std::uint32_t>(l), 1});
        auto s = syllables(c);
        cw.insert(cw.end(), s.begin(), s.end());
        comm_trivial_[l * n + k] = 0;
        conj_abelian_[l * n + k] = commuting(cw);
      }
      build_power_tables(k);
      auto it = raw.power_rels_.find(k);
      if (it != raw.power_rels_.end()) {
        ExpVec r = normal_form(it->second);
        if (!is_identity(r)) {
          pres_.power_rels_.emplace(k, to_word(r));
          power_[k] = syllables(r);
          power_abelian_[k] = commuting(power_[k]);
        }
      }
    }
  }

  std::vector<Group::Syllable> Group::syllables(ExpVec const& x) const {
    std::vector<Syllable> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) {
        out.push_back({static_cast<std::uint32_t>(i), x[i]});
      }
    }
    return out;
  }

  // Tables are built right after the relations for g_k, so collection in
  // the generators above k is already fully available.
  void Group::build_power_tables(std::size_t k) {
    constexpr std::uint64_t max_tabulated_order = 4096;
    std::size_t n = num_gens();
    if (rel_orders_[k] > max_tabulated_order) {
      return;
    }
    std::vector<Frame> stack;
    for (std::size_t l = k + 1; l < n; ++l) {
      if (comm_trivial(l, k)) {
        continue;
      }
      PowerTable& t = conj_pow_[l * n + k];
      ExpVec      z = generator(l);
      for (std::uint64_t e = 0; e < rel_orders_[k]; ++e) {
        if (e > 0) {
          // z <- z^{g_k}, one syllable of z at a time
          ExpVec next = identity();
          for (std::size_t m = n; m-- > k + 1;) {
            if (z[m] == 0) {
              continue;
            }
            if (comm_trivial(m, k)) {
              stack.push_back(
                  {nullptr, 0, 0, 1, z[m], static_cast<std::uint32_t>(m)});
            } else {
              push_word(stack, conj_[m * n + k], conj_abelian_[m * n + k] != 0,
                        z[m]);
            }
          }
          run(next, stack);
          z = std::move(next);
        }
        t.words.push_back(syllables(z));
        t.abelian.push_back(commuting(t.words.back()));
      }
    }
    tabulated_[k] = 1;
  }

  bool Group::commuting(std::vector<Syllable> const& w) const noexcept {
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t b = a + 1; b < w.size(); ++b) {
        std::size_t lo = std::min(w[a].gen, w[b].gen);
        std::size_t hi = std::max(w[a].gen, w[b].gen);
        if (lo != hi && !comm_trivial(hi, lo)) {
          return false;
        }
      }
    }
    return true;
  }

  void Group::push_word(std::vector<Frame>&          stack,
                        std::vector<Syllable> const& w,
                        bool                         abelian,
                        std::uint64_t                reps) const {
    if (abelian && reps > 1) {
      for (std::size_t s = w.size(); s-- > 0;) {
        stack.push_back({nullptr, 0, 0, 1, w[s].exp * reps, w[s].gen});
      }
      return;
    }
    stack.push_back(
        {w.data(), static_cast<std::uint32_t>(w.size()), 0, reps, 0, 0});
  }

  ExpVec Group::generator(std::size_t i) const {
    ExpVec x = identity();
    x.at(i)  = 1;
    return x;
  }

  bool Group::is_identity(ExpVec const& x) noexcept {
    for (Exponent e : x) {
      if (e != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t Group::depth(ExpVec const& x) const noexcept {
    std::size_t d = 0;
    while (d < x.size() && x[d] == 0) {
      ++d;
    }
    return d;
  }

  void Group::run(ExpVec& x, std::vector<Frame>& stack) const {
    std::uint64_t steps = 0;
    while (!stack.empty()) {
      if (++steps > limits_.max_steps) {
        stack.clear();
        throw ResourceLimit("collection exceeded "
                            + std::to_string(limits_.max_steps) + " steps");
      }
      Frame&        f = stack.back();
      std::uint32_t k;
      std::uint64_t e;
      if (f.word == nullptr) {
        k = f.gen;
        e = f.exp;
        stack.pop_back();
      } else {
        k = f.word[f.pos].gen;
        e = f.word[f.pos].exp;
        if (++f.pos == f.len) {
          f.pos = 0;
          if (--f.reps == 0) {
            stack.pop_back();
          }
        }
      }
      apply(x, k, e, stack);
    }
  }

  // x <- x * g_k^e where x is collected. If g_k commutes with every
  // generator still present above position k the whole power is absorbed at
  // once; otherwise one g_k is moved into place and the part of x above k is
  // pushed back conjugated by g_k:
  //   x g_k = x_{<=k} g_k (x_{>k})^{g_k}.
  void Group::apply(ExpVec&             x,
                    std::uint32_t       k,
                    std::uint64_t       e,
                    std::vector<Frame>& stack) const {
    std::size_t n        = num_gens();
    bool        commutes = true;
    for (std::size_t l = k + 1; l < n; ++l) {
      if (x[l] != 0 && !comm_trivial(l, k)) {
        commutes = false;
        break;
      }
    }
    if (commutes) {
      std::uint64_t v = x[k] + e;
      std::uint64_t q = v / rel_orders_[k];
      x[k]            = static_cast<Exponent>(v % rel_orders_[k]);
      if (q != 0 && !power_[k].empty()) {
        push_word(stack, power_[k], power_abelian_[k] != 0, q);
      }
      return;
    }
    if (tabulated_[k]) {
      // x g_k^c = x_{<k} g_k^{x_k + c} (x_{>k})^{g_k^c}
      std::uint64_t r = rel_orders_[k];
      std::uint64_t c = std::min<std::uint64_t>(e, r - 1);
      if (e > c) {
        stack.push_back({nullptr, 0, 0, 1, e - c, k});
      }
      for (std::size_t l = n; l-- > k + 1;) {
        if (x[l] == 0) {
          continue;
        }
        if (comm_trivial(l, k)) {
          stack.push_back(
              {nullptr, 0, 0, 1, x[l], static_cast<std::uint32_t>(l)});
        } else {
          PowerTable const& t = conj_pow_[l * n + k];
          push_word(stack, t.words[c], t.abelian[c] != 0, x[l]);
        }
        x[l] = 0;
      }
      std::uint64_t v = x[k] + c;
      x[k]            = static_cast<Exponent>(v % r);
      if (v >= r && !power_[k].empty()) {
        push_word(stack, power_[k], power_abelian_[k] != 0, 1);
      }
      return;
    }
    if (e > 1) {
      stack.push_back({nullptr, 0, 0, 1, e - 1, k});
    }
    for (std::size_t l = n; l-- > k + 1;) {
      if (x[l] == 0) {
        continue;
      }
      if (comm_trivial(l, k)) {
        stack.push_back(
            {nullptr, 0, 0, 1, x[l], static_cast<std::uint32_t>(l)});
      } else {
        push_word(stack, conj_[l * n + k], conj_abelian_[l * n + k] != 0,
                  x[l]);
      }
      x[l] = 0;
    }
    std::uint64_t v = std::uint64_t(x[k]) + 1;
    if (v == rel_orders_[k]) {
      x[k] = 0;
      if (!power_[k].empty()) {
        stack.push_back({power_[k].data(),
                         static_cast<std::uint32_t>(power_[k].size()), 0, 1, 0,
                         0});
      }
    } else {
      x[k] = static_cast<Exponent>(v);
    }
  }

  void Group::multiply_in_place(ExpVec& x, ExpVec const& y) const {
    thread_local std::vector<Frame> stack;
    // y is pushed as single-syllable frames, last syllable at the bottom
    for (std::size_t i = y.size(); i-- > 0;) {
      if (y[i] != 0) {
        stack.push_back(
            {nullptr, 0, 0, 1, y[i], static_cast<std::uint32_t>(i)});
      }
    }
    run(x, stack);
  }

  void Group::multiply_by_generator(ExpVec&       x,
                                    std::size_t   gen,
                                    std::uint64_t exp) const {
    if (exp == 0) {
      return;
    }
    thread_local std::vector<Frame> stack;
    stack.push_back({nullptr, 0, 0, 1, exp, static_cast<std::uint32_t>(gen)});
    run(x, stack);
  }

  ExpVec Group::multiply(ExpVec const& x, ExpVec const& y) const {
    ExpVec z = x;
    multiply_in_place(z, y);
    return z;
  }

  // Solve x y = 1 for y one position at a time; after step i the product
  // x g_1^{y_1} ... g_i^{y_i} has zero exponents up to position i.
  ExpVec Group::inverse(ExpVec const& x) const {
    ExpVec z = x;
    ExpVec y = identity();
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] != 0) {
        y[i] = static_cast<Exponent>(rel_orders_[i] - z[i]);
        multiply_by_generator(z, i, y[i]);
      }
    }
    return y;
  }

  ExpVec Group::power(ExpVec const& x, std::uint64_t k) const {
    ExpVec result = identity();
    ExpVec base   = x;
    while (k != 0) {
      if (k & 1) {
        multiply_in_place(result, base);
      }
      k >>= 1;
      if (k != 0) {
        ExpVec copy = base;
        multiply_in_place(base, copy);
      }
    }
    return result;
  }

  ExpVec Group::power_signed(ExpVec const& x, std::int64_t k) const {
    if (k >= 0) {
      return power(x, static_cast<std::uint64_t>(k));
    }
    // -(k+1) avoids overflow at INT64_MIN
    return power(inverse(x), static_cast<std::uint64_t>(-(k + 1)) + 1);
  }

  ExpVec Group::commutator(ExpVec const& x, ExpVec const& y) const {
    ExpVec yx = multiply(y, x);
    ExpVec r  = inverse(yx);
    multiply_in_place(r, multiply(x, y));
    return r;
  }

  ExpVec Group::conjugate(ExpVec const& x, ExpVec const& y) const {
    ExpVec r = inverse(y);
    multiply_in_place(r, x);
    multiply_in_place(r, y);
    return r;
  }

  unsigned Group::order_log(ExpVec const& x) const {
    unsigned k = 0;
    ExpVec   y = x;
    while (!is_identity(y)) {
      if (k >= candidate_log_) {
        throw DomainError("element order exceeds the candidate group order; "
                          "the presentation is inconsistent");
      }
      y = power(y, prime());
      ++k;
    }
    return k;
  }

  std::uint64_t Group::order(ExpVec const& x) const {
    std::uint64_t o = 1;
    for (unsigned k = order_log(x); k > 0; --k) {
      o *= prime();
    }
    return o;
  }

  bool Group::power_is_trivial(ExpVec const& x, unsigned k) const {
    ExpVec y = x;
    for (unsigned r = 0; r < k && !is_identity(y); ++r) {
      y = power(y, prime());
    }
    return is_identity(y);
  }

  ExpVec Group::normal_form(Word const& w) const {
    ExpVec x = identity();
    for (Letter const& l : w) {
      if (l.gen >= num_gens()) {
        throw DomainError("generator index out of range");
      }
      if (l.exp > 0
          && static_cast<std::uint64_t>(l.exp) < rel_orders_[l.gen]) {
        multiply_by_generator(x, l.gen, static_cast<std::uint64_t>(l.exp));
      } else if (l.exp != 0) {
        multiply_in_place(x, power_signed(generator(l.gen), l.exp));
      }
    }
    return x;
  }

  std::uint64_t Group::index(ExpVec const& x) const noexcept {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      idx = idx * rel_orders_[i] + x[i];
    }
    return idx;
  }

  ExpVec Group::from_index(std::uint64_t idx) const {
    ExpVec x = identity();
    for (std::size_t i = x.size(); i-- > 0;) {
      x[i] = static_cast<Exponent>(idx % rel_orders_[i]);
      idx /= rel_orders_[i];
    }
    return x;
  }

  Word Group::to_word(ExpVec const& x) const {
    Word w;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) {
        w.push_back({i, static_cast<std::int64_t>(x[i])});
      }
    }
    return w;
  }

  std::string Group::render(ExpVec const& x) const {
    return render_word(pres_, to_word(x));
  }

  Element::Element(GroupPtr group, ExpVec exps)
      : group_(std::move(group)), exps_(std::move(exps)) {
    if (!group_ || exps_.size() != group_->num_gens()) {
      throw DomainError("exponent vector does not match the group");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] >= group_->relative_order(i)) {
        throw DomainError("exponent out of range");
      }
    }
  }

  Element Element::identity(GroupPtr const& group) {
    return Element(group, group->identity());
  }

  Element Element::generator(GroupPtr const& group, std::size_t i) {
    return Element(group, group->generator(i));
  }

  Element normal_form(GroupPtr const& group, Word const& w) {
    return Element(group, group->normal_form(w));
  }

  Element multiply(Element const& x, Element const& y) {
    require_same(x.group(), y.group());
    return Element(x.group(), x.group()->multiply(x.exponents(), y.exponents()));
  }

  Element inverse(Element const& x) {
    return Element(x.group(), x.group()->inverse(x.exponents()));
  }

  Element power(Element const& x, std::int64_t k) {
    return Element(x.group(), x.group()->power_signed(x.exponents(), k));
  }

  Element commutator(Element const& x, Element const& y) {
    require_same(x.group(), y.group());
    return Element(x.group(),
                   x.group()->commutator(x.exponents(), y.exponents()));
  }

  std::uint64_t order(Element const& x) {
    return x.group()->order(x.exponents());
  }

}  // namespace pcgroups
