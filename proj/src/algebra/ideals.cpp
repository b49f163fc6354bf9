#include <algorithm>
#include <deque>

#include "diamond/algebra.hpp"
#include "diamond/errors.hpp"

namespace diamond {

  std::string to_string(IdealKind k) {
    switch (k) {
      case IdealKind::Left:
        return "left";
      case IdealKind::Right:
        return "right";
      case IdealKind::TwoSided:
        return "two_sided";
      case IdealKind::None:
        break;
    }
    return "none";
  }

  namespace {

    std::optional<ClosureWitness> additive_failure(Subset const& sub) {
      auto const& s = sub.ambient();
      for (Index x : sub.indices()) {
        for (Index y : sub.indices()) {
          if (!sub.contains(s.add(x, y))) {
            return ClosureWitness{Op::Add, x, y, s.add(x, y)};
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  ClosureResult is_subsemiring(Subset const& sub) {
    auto const& s = sub.ambient();
    for (Index x : sub.indices()) {
      for (Index y : sub.indices()) {
        if (!sub.contains(s.add(x, y))) {
          return {false, ClosureWitness{Op::Add, x, y, s.add(x, y)}};
        }
        if (!sub.contains(s.mul(x, y))) {
          return {false, ClosureWitness{Op::Mul, x, y, s.mul(x, y)}};
        }
      }
    }
    return {};
  }

  IdealReport ideal_kind(Subset const& sub) {
    IdealReport r;
    auto const& s = sub.ambient();
    r.add_witness = additive_failure(sub);
    if (r.add_witness) {
      return r;
    }
    for (Index i : sub.indices()) {
      for (Index t = 0; t < s.order(); ++t) {
        if (!r.left_witness && !sub.contains(s.mul(t, i))) {
          r.left_witness = ClosureWitness{Op::Mul, t, i, s.mul(t, i)};
        }
        if (!r.right_witness && !sub.contains(s.mul(i, t))) {
          r.right_witness = ClosureWitness{Op::Mul, i, t, s.mul(i, t)};
        }
      }
    }
    bool const left  = !r.left_witness;
    bool const right = !r.right_witness;
    r.kind           = left && right ? IdealKind::TwoSided
                       : left        ? IdealKind::Left
                       : right       ? IdealKind::Right
                                     : IdealKind::None;
    return r;
  }

  namespace {

    // Closure of an ideal under adding more seeds. `members` must already be
    // closed, so only newly admitted elements need processing.
    struct Growing {
      FiniteSemiring const* s;
      std::vector<bool>     in;
      std::vector<Index>    members;

      explicit Growing(FiniteSemiring const& ring)
          : s(&ring), in(ring.order(), false) {}

      void add(std::vector<Index> const& seeds) {
        std::deque<Index> todo;
        auto              admit = [&](Index x) {
          if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            todo.push_back(x);
          }
        };
        for (Index x : seeds) {
          admit(x);
        }
        while (!todo.empty()) {
          Index x = todo.front();
          todo.pop_front();
          for (Index t = 0; t < s->order(); ++t) {
            admit(s->mul(t, x));
            admit(s->mul(x, t));
          }
          // members grows inside the loop; index-based iteration is deliberate
          for (std::size_t k = 0; k < members.size(); ++k) {
            admit(s->add(x, members[k]));
          }
        }
      }

      std::vector<Index> sorted() const {
        auto out = members;
        std::sort(out.begin(), out.end());
        return out;
      }
    };

  }  // namespace

  std::vector<Index> generate_ideal(FiniteSemiring const&     s,
                                    std::vector<Index> const& seeds) {
    Growing g(s);
    g.add(seeds);
    return g.sorted();
  }

  bool is_maximal_ideal(Subset const& sub) {
    if (ideal_kind(sub).kind != IdealKind::TwoSided) {
      throw NotAnIdeal("subset is not a two-sided ideal");
    }
    if (sub.is_full()) {
      throw NotAnIdeal("subset is not a proper ideal");
    }
    auto const&        s = sub.ambient();
    std::vector<Index> seeds(sub.indices().begin(), sub.indices().end());
    for (Index x = 0; x < s.order(); ++x) {
      if (sub.contains(x)) {
        continue;
      }
      seeds.push_back(x);
      bool const everything = generate_ideal(s, seeds).size() == s.order();
      seeds.pop_back();
      if (!everything) {
        return false;
      }
    }
    return true;
  }

  IdealSimplicity is_ideal_simple(FiniteSemiring const& s) {
    IdealSimplicity r;
    r.no_zero   = !find_zero(s).has_value();
    r.absorbing = find_mul_absorbing(s);
    if (s.order() <= 1) {
      r.degenerate = true;
      return r;
    }
    for (Index x = 0; x < s.order(); ++x) {
      auto ideal = generate_ideal(s, {x});
      if (ideal.size() == s.order()) {
        continue;
      }
      if (r.absorbing && ideal.size() == 1 && ideal.front() == *r.absorbing) {
        continue;
      }
      // grow to a maximal proper ideal; an element that fills everything
      // now would fill everything later too, so each is tried once
      Growing g(s);
      g.add(ideal);
      for (Index y = 0; y < s.order(); ++y) {
        if (g.in[y]) {
          continue;
        }
        Growing next = g;
        next.add({y});
        if (next.members.size() < s.order()) {
          g = std::move(next);
        }
      }
      ideal = g.sorted();
      r.simple  = false;
      r.witness = std::move(ideal);
      return r;
    }
    return r;
  }

  Restriction restrict_to(Subset const& sub) {
    auto closed = is_subsemiring(sub);
    if (!closed) {
      throw NotClosed("subset is not closed under the semiring operations");
    }
    auto const&        s = sub.ambient();
    std::size_t const  k = sub.size();
    std::vector<Index> local(s.order(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      local[sub.indices()[i]] = static_cast<Index>(i);
    }
    std::vector<Index>       add, mul;
    std::vector<std::string> labels;
    add.reserve(k * k);
    mul.reserve(k * k);
    labels.reserve(k);
    for (Index x : sub.indices()) {
      labels.push_back(s.label(x));
      for (Index y : sub.indices()) {
        add.push_back(local[s.add(x, y)]);
        mul.push_back(local[s.mul(x, y)]);
      }
    }
    return {FiniteSemiring(k, std::move(add), std::move(mul), std::move(labels)),
            {sub.indices().begin(), sub.indices().end()}};
  }

}  // namespace diamond
