#include <random>

#include "diamond/algebra.hpp"

namespace diamond {

  namespace {

    void record(LawReport& r, bool& flag, char const* law, Index x, Index y,
                Index z) {
      if (flag) {
        flag = false;
        r.failures.push_back({law, {x, y, z}});
      }
    }

    void check_triple(FiniteSemiring const& s, LawReport& r, Index x, Index y,
                      Index z) {
      if (s.add(s.add(x, y), z) != s.add(x, s.add(y, z))) {
        record(r, r.add_associative, "additive associativity", x, y, z);
      }
      if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) {
        record(r, r.mul_associative, "multiplicative associativity", x, y, z);
      }
      if (s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z))) {
        record(r, r.left_distributive, "left distributivity", x, y, z);
      }
      if (s.mul(s.add(x, y), z) != s.add(s.mul(x, z), s.mul(y, z))) {
        record(r, r.right_distributive, "right distributivity", x, y, z);
      }
    }

  }  // namespace

  LawReport check_laws(FiniteSemiring const& s,
                       std::size_t           exhaustive_up_to,
                       std::size_t           samples,
                       std::uint64_t         seed) {
    LawReport   r;
    auto const  n = static_cast<Index>(s.order());
    for (Index x = 0; x < n; ++x) {
      if (s.add(x, x) != x) {
        record(r, r.additively_idempotent, "additive idempotency", x, 0, 0);
      }
      for (Index y = x + 1; y < n; ++y) {
        if (s.add(x, y) != s.add(y, x)) {
          record(r, r.add_commutative, "additive commutativity", x, y, 0);
        }
      }
    }

    if (s.order() <= exhaustive_up_to) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          for (Index z = 0; z < n; ++z) {
            check_triple(s, r, x, y, z);
          }
        }
      }
      r.triples_checked = s.order() * s.order() * s.order();
    } else {
      r.exhaustive = false;
      std::mt19937_64                      rng(seed);
      std::uniform_int_distribution<Index> pick(0, n - 1);
      for (std::size_t k = 0; k < samples; ++k) {
        Index x = pick(rng), y = pick(rng), z = pick(rng);
        check_triple(s, r, x, y, z);
      }
      r.triples_checked = samples;
    }

    r.zero     = find_zero(s);
    r.identity = find_identity(s);
    r.infinity = find_infinity(s);
    return r;
  }

  std::optional<Index> find_zero(FiniteSemiring const& s) {
    auto const n = static_cast<Index>(s.order());
    for (Index z = 0; z < n; ++z) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        ok = s.add(z, x) == x && s.add(x, z) == x && s.mul(z, x) == z
             && s.mul(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::optional<Index> find_identity(FiniteSemiring const& s) {
    auto const n = static_cast<Index>(s.order());
    for (Index e = 0; e < n; ++e) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        ok = s.mul(e, x) == x && s.mul(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<Index> find_mul_absorbing(FiniteSemiring const& s) {
    auto const n = static_cast<Index>(s.order());
    for (Index z = 0; z < n; ++z) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        ok = s.mul(z, x) == z && s.mul(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::optional<Index> find_infinity(FiniteSemiring const& s) {
    auto z = find_mul_absorbing(s);
    if (!z) {
      return std::nullopt;
    }
    for (Index x = 0; x < s.order(); ++x) {
      if (s.add(*z, x) != *z || s.add(x, *z) != *z) {
        return std::nullopt;
      }
    }
    return z;
  }

  bool is_viterbi(FiniteSemiring const& s) {
    for (Index x = 0; x < s.order(); ++x) {
      if (s.add(x, x) != x || s.add(s.mul(x, x), x) != x) {
        return false;
      }
    }
    return true;
  }

}  // namespace diamond
