#include <unordered_map>

#include "diamond/algebra.hpp"

namespace diamond {

  std::vector<ElementRecord> classify(FiniteSemiring const& s) {
    auto const                 n        = static_cast<Index>(s.order());
    auto const                 zero     = find_zero(s);
    auto const                 identity = find_identity(s);
    std::vector<ElementRecord> out(n);

    for (Index x = 0; x < n; ++x) {
      ElementRecord& r = out[x];
      r.index          = x;
      r.is_zero        = zero && *zero == x;
      r.add_idempotent = s.add(x, x) == x;
      r.mul_idempotent = s.mul(x, x) == x;

      // x, x^2, ... until the first repetition
      std::unordered_map<Index, unsigned> seen;
      Index                               p = x;
      while (!seen.contains(p)) {
        seen.emplace(p, static_cast<unsigned>(r.powers.size()));
        r.powers.push_back(p);
        p = s.mul(p, x);
      }
      r.orbit_index  = seen.at(p);
      r.orbit_period = static_cast<unsigned>(r.powers.size()) - r.orbit_index;

      if (zero && !r.is_zero) {
        for (std::size_t k = 0; k < r.powers.size(); ++k) {
          if (r.powers[k] == *zero) {
            r.nilpotent        = true;
            r.nilpotency_index = static_cast<unsigned>(k + 1);
            break;
          }
        }
        for (Index y = 0; y < n; ++y) {
          if (y == *zero) {
            continue;
          }
          if (s.mul(x, y) == *zero) {
            r.left_zero_divisor = true;
          }
          if (s.mul(y, x) == *zero) {
            r.right_zero_divisor = true;
          }
        }
      }
      r.regular = !r.is_zero && !r.zero_divisor();

      if (identity) {
        for (Index y = 0; y < n; ++y) {
          if (s.mul(x, y) == *identity && s.mul(y, x) == *identity) {
            r.invertible = true;
            break;
          }
        }
      }
    }
    return out;
  }

}  // namespace diamond
