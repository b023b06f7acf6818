#include "support/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oracle {

  namespace {
    std::uint64_t mod(std::int64_t v, std::uint64_t m) {
      auto r = v % static_cast<std::int64_t>(m);
      return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m)
                                              : r);
    }

    std::uint64_t ipow(std::uint64_t p, unsigned k) {
      std::uint64_t r = 1;
      while (k-- > 0) {
        r *= p;
      }
      return r;
    }
  }  // namespace

  Class2::Triple Class2::mul(Triple const& u, Triple const& v) const {
    std::int64_t z = static_cast<std::int64_t>(u[2] + v[2])
                     + s * static_cast<std::int64_t>(u[1] * v[0] % oc);
    return {(u[0] + v[0]) % oa, (u[1] + v[1]) % ob, mod(z, oc)};
  }

  Class2::Triple Class2::inv(Triple const& u) const {
    std::int64_t z = -static_cast<std::int64_t>(u[2])
                     + s * static_cast<std::int64_t>(u[0] * u[1] % oc);
    return {(oa - u[0]) % oa, (ob - u[1]) % ob, mod(z, oc)};
  }

  Class2::Triple Class2::pow(Triple u, std::uint64_t k) const {
    Triple r{0, 0, 0};
    while (k != 0) {
      if (k & 1) {
        r = mul(r, u);
      }
      u = mul(u, u);
      k >>= 1;
    }
    return r;
  }

  std::uint64_t Class2::order(Triple const& u) const {
    std::uint64_t o = 1;
    Triple        y = u;
    while (y != Triple{0, 0, 0}) {
      y = pow(y, p);
      o *= p;
    }
    return o;
  }

  Class2 example1_model(std::uint64_t p) {
    return {p, p, p, p * p, static_cast<std::int64_t>(p)};
  }

  Class2 family_model(std::uint64_t p,
                      unsigned      alpha,
                      unsigned      beta,
                      unsigned      gamma,
                      unsigned      delta) {
    return {p, ipow(p, alpha), ipow(p, beta), ipow(p, gamma),
            -static_cast<std::int64_t>(ipow(p, delta))};
  }

  ExpVec to_vec(Class2::Triple const& t) {
    return {static_cast<pcgroups::Exponent>(t[0]),
            static_cast<pcgroups::Exponent>(t[1]),
            static_cast<pcgroups::Exponent>(t[2])};
  }

  Class2::Triple to_triple(ExpVec const& x) {
    return {x.at(0), x.at(1), x.at(2)};
  }

  Naive::Naive(Group const& g)
      : g_(&g), n_(g.candidate_order()), p_(g.prime()) {
    if (n_ > (1u << 13)) {
      throw std::invalid_argument("group too large for the naive oracle");
    }
    std::vector<ExpVec> elems;
    for (std::size_t x = 0; x < n_; ++x) {
      elems.push_back(g.from_index(x));
    }
    table_.resize(n_ * n_);
    inv_.assign(n_, 0);
    std::uint32_t const id = static_cast<std::uint32_t>(g.index(g.identity()));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        auto z = static_cast<std::uint32_t>(g.index(g.multiply(elems[x], elems[y])));
        table_[x * n_ + y] = z;
        if (z == id) {
          inv_[x] = static_cast<std::uint32_t>(y);
        }
      }
    }
  }

  std::uint32_t Naive::comm(std::uint32_t x, std::uint32_t y) const noexcept {
    return mul(inv(mul(y, x)), mul(x, y));
  }

  std::uint32_t Naive::pow(std::uint32_t x, std::uint64_t k) const noexcept {
    std::uint32_t r = 0;
    for (std::uint64_t t = 0; t < k; ++t) {
      r = mul(r, x);
    }
    return r;
  }

  unsigned Naive::order_log(std::uint32_t x) const noexcept {
    unsigned k = 0;
    while (x != 0) {
      x = pow(x, p_);
      ++k;
    }
    return k;
  }

  std::uint32_t Naive::index(ExpVec const& x) const {
    return static_cast<std::uint32_t>(g_->index(x));
  }

  ExpVec Naive::vec(std::uint32_t x) const {
    return g_->from_index(x);
  }

  Set Naive::closure(std::vector<std::uint32_t> const& gens) const {
    std::vector<char> seen(n_, 0);
    Set               out{0};
    seen[0] = 1;
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (auto u : gens) {
        std::uint32_t y = mul(out[a], u);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Set Naive::normal_closure(std::vector<std::uint32_t> const& gens,
                            std::vector<std::uint32_t> const& conj) const {
    Set S = closure(gens);
    for (;;) {
      std::vector<std::uint32_t> more(S.begin(), S.end());
      for (auto x : S) {
        for (auto c : conj) {
          more.push_back(mul(mul(inv(c), x), c));
        }
      }
      Set T = closure(more);
      if (T == S) {
        return S;
      }
      S = std::move(T);
    }
  }

  Set Naive::commutators(Set const& H, Set const& K) const {
    std::vector<char> seen(n_, 0);
    std::vector<std::uint32_t> gens;
    for (auto h : H) {
      for (auto k : K) {
        std::uint32_t c = comm(h, k);
        if (!seen[c]) {
          seen[c] = 1;
          gens.push_back(c);
        }
      }
    }
    return closure(gens);
  }

  Set Naive::agemo(Set const& H, unsigned j) const {
    std::vector<std::uint32_t> gens;
    for (auto x : H) {
      gens.push_back(pow(x, ipow(p_, j)));
    }
    return closure(gens);
  }

  Set Naive::omega(Set const& H, int i) const {
    std::vector<std::uint32_t> gens;
    if (i >= 0) {
      for (auto x : H) {
        if (order_log(x) <= static_cast<unsigned>(i)) {
          gens.push_back(x);
        }
      }
    }
    return closure(gens);
  }

  Set Naive::central_preimage(Set const& H, Set const& N) const {
    Set out;
    for (auto x : H) {
      bool central = true;
      for (auto h : H) {
        if (!contains(N, comm(x, h))) {
          central = false;
          break;
        }
      }
      if (central) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool Naive::is_abelian(Set const& H) const {
    for (auto x : H) {
      for (auto y : H) {
        if (mul(x, y) != mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  unsigned Naive::exponent_log(Set const& H) const {
    unsigned e = 0;
    for (auto x : H) {
      e = std::max(e, order_log(x));
    }
    return e;
  }

  Set Naive::of(Subgroup const& S) const {
    Set out;
    for (auto const& x : pcgroups::elements(S)) {
      out.push_back(index(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint32_t> Naive::indices(std::vector<ExpVec> const& xs) const {
    std::vector<std::uint32_t> out;
    for (auto const& x : xs) {
      out.push_back(index(x));
    }
    return out;
  }

  bool contains(Set const& S, std::uint32_t x) {
    return std::binary_search(S.begin(), S.end(), x);
  }

  bool subset(Set const& A, Set const& B) {
    return std::includes(B.begin(), B.end(), A.begin(), A.end());
  }

}  // namespace oracle
