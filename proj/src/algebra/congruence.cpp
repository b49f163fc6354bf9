#include <algorithm>
#include <numeric>
#include <vector>

#include "diamond/algebra.hpp"
#include "diamond/errors.hpp"

namespace diamond {

  namespace {

    class DisjointSets {
     public:
      explicit DisjointSets(std::size_t n)
          : _parent(n), _flags(n, 0), _classes(n) {
        std::iota(_parent.begin(), _parent.end(), Index(0));
      }

      Index find(Index a) {
        while (_parent[a] != a) {
          _parent[a] = _parent[_parent[a]];
          a          = _parent[a];
        }
        return a;
      }

      // false if already together
      bool unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        _flags[a] |= _flags[b];
        --_classes;
        return true;
      }

      void mark(Index a, unsigned char f) {
        _flags[a] |= f;
      }
      unsigned char flags(Index a) {
        return _flags[find(a)];
      }

      std::size_t classes() const noexcept {
        return _classes;
      }

      Partition partition() {
        std::vector<std::size_t> b(_parent.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
          b[i] = find(static_cast<Index>(i));
        }
        return Partition(std::move(b));
      }

     private:
      std::vector<Index>         _parent;
      std::vector<unsigned char> _flags;
      std::size_t                _classes;
    };

    constexpr unsigned char kStar    = 1;   // every pair with it is full
    constexpr unsigned char kRow     = 2;   // the element whose row is swept
    constexpr unsigned char kPartner = 4;   // pairs with the row element full

    // What a sweep already knows. A class holding a star and anything else,
    // or the row element and one of its partners, forces the full relation.
    struct Known {
      std::vector<char> star, partner;
      Index             row = 0;
    };

    // Returns the closure, or nothing when it collapses to a single class.
    std::optional<Partition> close(FiniteSemiring const& s,
                                   Index                 x,
                                   Index                 y,
                                   Known const*          known) {
      auto const   n = static_cast<Index>(s.order());
      DisjointSets ds(n);
      if (known) {
        for (Index t = 0; t < n; ++t) {
          if (known->star[t]) {
            ds.mark(t, kStar);
          }
          if (known->partner[t]) {
            ds.mark(t, kPartner);
          }
        }
        ds.mark(known->row, kRow);
      }
      std::vector<std::pair<Index, Index>> stack{{x, y}};
      while (!stack.empty()) {
        auto [u, v] = stack.back();
        stack.pop_back();
        if (!ds.unite(u, v)) {
          continue;
        }
        if (ds.classes() == 1) {
          return std::nullopt;
        }
        if (known) {
          auto f = ds.flags(u);
          if ((f & kStar) || ((f & kRow) && (f & kPartner))) {
            return std::nullopt;
          }
        }
        auto au = s.add_row(u), av = s.add_row(v);
        auto mu = s.mul_row(u), mv = s.mul_row(v);
        for (Index t = 0; t < n; ++t) {
          if (au[t] != av[t]) {
            stack.emplace_back(au[t], av[t]);
          }
          if (mu[t] != mv[t]) {
            stack.emplace_back(mu[t], mv[t]);
          }
          Index l = s.mul(t, u), r = s.mul(t, v);
          if (l != r) {
            stack.emplace_back(l, r);
          }
        }
      }
      return ds.partition();
    }

    void check_index(FiniteSemiring const& s, Index x) {
      if (x >= s.order()) {
        throw InvalidElement("element index " + std::to_string(x)
                             + " is out of range");
      }
    }

    constexpr std::size_t kRefineBudget = 4096;

  }  // namespace

  Partition principal_congruence(FiniteSemiring const& s, Index x, Index y) {
    check_index(s, x);
    check_index(s, y);
    auto p = close(s, x, y, nullptr);
    return p ? *p : Partition::full(s.order());
  }

  bool is_congruence(FiniteSemiring const& s, Partition const& p) {
    if (p.size() != s.order()) {
      return false;
    }
    auto const n = static_cast<Index>(s.order());
    // Compatibility with translations by each t suffices, comparing every
    // element with the first member of its block.
    std::vector<Index> rep(p.block_count(), n);
    for (Index x = 0; x < n; ++x) {
      auto& r = rep[p.block_of(x)];
      if (r == n) {
        r = x;
        continue;
      }
      for (Index t = 0; t < n; ++t) {
        if (!p.same_block(s.add(x, t), s.add(r, t))
            || !p.same_block(s.mul(x, t), s.mul(r, t))
            || !p.same_block(s.mul(t, x), s.mul(t, r))) {
          return false;
        }
      }
    }
    return true;
  }

  CongruenceSimplicity is_congruence_simple(FiniteSemiring const& s) {
    CongruenceSimplicity r;
    auto const           n = static_cast<Index>(s.order());
    if (n <= 2) {
      // order 2 has no proper nontrivial partition
      r.degenerate = n <= 1;
      return r;
    }
    // the additive top, when there is one, merges with most things fast
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index(0));
    Index top = 0;
    for (Index t = 1; t < n; ++t) {
      top = s.add(top, t);
    }
    bool absorbing = true;
    for (Index t = 0; t < n && absorbing; ++t) {
      absorbing = s.add(top, t) == top;
    }
    if (absorbing) {
      std::rotate(order.begin(), order.begin() + top, order.begin() + top + 1);
    }

    Known known{std::vector<char>(n, 0), std::vector<char>(n, 0), 0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      Index const x = order[i];
      known.row     = x;
      std::fill(known.partner.begin(), known.partner.end(), 0);
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        Index const y = order[j];
        auto        p = close(s, x, y, &known);
        if (!p) {
          known.partner[y] = 1;
          continue;
        }
        // Refine within the witness: every pair inside one of its blocks
        // generates a congruence below it. Budgeted, large blocks get big.
        r.simple       = false;
        std::size_t budget = kRefineBudget;
        r.witness      = *p;
        r.witness_pair = {x, y};
        for (auto const& block : p->blocks()) {
          for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size() && budget > 0;
                 ++j, --budget) {
              auto q = close(s, block[i], block[j], nullptr);
              if (q && q->block_count() > r.witness->block_count()) {
                r.witness      = *q;
                r.witness_pair = {block[i], block[j]};
              }
            }
          }
        }
        return r;
      }
      known.star[x] = 1;
    }
    return r;
  }

  std::vector<Partition> congruences_by_sweep(FiniteSemiring const& s,
                                              std::size_t           max_order) {
    std::size_t const n = s.order();
    if (n > max_order) {
      throw CapExceeded("partition sweep limited to order "
                        + std::to_string(max_order));
    }
    std::vector<Partition> out;
    if (n == 0) {
      return out;
    }
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<std::size_t> a(n, 0), mx(n, 0);
    while (true) {
      Partition p(a);
      if (is_congruence(s, p)) {
        out.push_back(std::move(p));
      }
      std::size_t i = n - 1;
      while (i > 0 && a[i] == mx[i - 1] + 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++a[i];
      mx[i] = std::max(mx[i - 1], a[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        a[j]  = 0;
        mx[j] = mx[i];
      }
    }
    return out;
  }

}  // namespace diamond
