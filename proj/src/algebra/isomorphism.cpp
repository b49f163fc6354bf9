#include <algorithm>
#include <map>

#include "diamond/algebra.hpp"
#include "diamond/errors.hpp"

namespace diamond {

  namespace {

    using Invariant = std::array<std::size_t, 9>;

    std::vector<Invariant> invariants(FiniteSemiring const& s) {
      auto const             n   = static_cast<Index>(s.order());
      auto const             rec = classify(s);
      std::vector<Invariant> out(n);
      for (Index x = 0; x < n; ++x) {
        Invariant& v = out[x];
        v[0]         = rec[x].mul_idempotent;
        v[1]         = rec[x].orbit_index;
        v[2]         = rec[x].orbit_period;
        for (Index y = 0; y < n; ++y) {
          v[3] += s.add(x, y) == x;
          v[4] += s.add(x, y) == y;
          v[5] += s.mul(x, y) == x;
          v[6] += s.mul(y, x) == x;
          v[7] += s.mul(x, y) == y;
          v[8] += s.mul(y, x) == y;
        }
      }
      return out;
    }

    class Search {
     public:
      Search(FiniteSemiring const& a, FiniteSemiring const& b)
          : _a(a), _b(b), _map(a.order(), kUnset), _used(b.order(), false) {
        auto ia = invariants(a);
        auto ib = invariants(b);
        _candidates.resize(a.order());
        std::map<Invariant, std::size_t> count_a, count_b;
        for (auto const& v : ia) {
          ++count_a[v];
        }
        for (auto const& v : ib) {
          ++count_b[v];
        }
        _feasible = count_a == count_b;
        for (Index x = 0; x < a.order(); ++x) {
          for (Index y = 0; y < b.order(); ++y) {
            if (ia[x] == ib[y]) {
              _candidates[x].push_back(y);
            }
          }
          _order.push_back(x);
        }
        // most constrained first
        std::stable_sort(_order.begin(), _order.end(), [&](Index x, Index y) {
          return _candidates[x].size() < _candidates[y].size();
        });
      }

      std::optional<std::vector<Index>> run() {
        if (!_feasible) {
          return std::nullopt;
        }
        if (step(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr Index kUnset = static_cast<Index>(-1);

      bool consistent(Index x) const {
        Index const fx = _map[x];
        for (Index y = 0; y < _a.order(); ++y) {
          Index const fy = _map[y];
          if (fy == kUnset) {
            continue;
          }
          if (!agree(_a.add(x, y), _b.add(fx, fy))
              || !agree(_a.mul(x, y), _b.mul(fx, fy))
              || !agree(_a.mul(y, x), _b.mul(fy, fx))) {
            return false;
          }
        }
        return true;
      }

      // Assigned results must match; unassigned ones must not land on an
      // already used target.
      bool agree(Index in_a, Index in_b) const {
        if (_map[in_a] != kUnset) {
          return _map[in_a] == in_b;
        }
        return !_used[in_b];
      }

      bool step(std::size_t depth) {
        if (depth == _order.size()) {
          return true;
        }
        Index const x = _order[depth];
        for (Index y : _candidates[x]) {
          if (_used[y]) {
            continue;
          }
          _map[x]  = y;
          _used[y] = true;
          if (consistent(x) && step(depth + 1)) {
            return true;
          }
          _map[x]  = kUnset;
          _used[y] = false;
        }
        return false;
      }

      FiniteSemiring const&           _a;
      FiniteSemiring const&           _b;
      std::vector<Index>              _map;
      std::vector<bool>               _used;
      std::vector<std::vector<Index>> _candidates;
      std::vector<Index>              _order;
      bool                            _feasible = true;
    };

  }  // namespace

  bool is_isomorphism(FiniteSemiring const&     a,
                      FiniteSemiring const&     b,
                      std::vector<Index> const& map) {
    if (a.order() != b.order() || map.size() != a.order()) {
      return false;
    }
    std::vector<bool> hit(b.order(), false);
    for (Index y : map) {
      if (y >= b.order() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (Index x = 0; x < a.order(); ++x) {
      for (Index y = 0; y < a.order(); ++y) {
        if (map[a.add(x, y)] != b.add(map[x], map[y])
            || map[a.mul(x, y)] != b.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Index>>
  find_isomorphism(FiniteSemiring const&                    a,
                   FiniteSemiring const&                    b,
                   std::optional<std::vector<Index>> const& candidate) {
    if (candidate) {
      if (is_isomorphism(a, b, *candidate)) {
        return candidate;
      }
      if (a.order() > kIsomorphismSearchLimit) {
        return std::nullopt;
      }
    }
    if (a.order() != b.order()) {
      return std::nullopt;
    }
    if (a.order() > kIsomorphismSearchLimit) {
      throw SearchLimit("isomorphism search limited to order "
                        + std::to_string(kIsomorphismSearchLimit)
                        + "; supply a candidate map");
    }
    return Search(a, b).run();
  }

}  // namespace diamond
