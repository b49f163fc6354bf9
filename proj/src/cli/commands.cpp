#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "diamond/algebra.hpp"
#include "diamond/cli.hpp"
#include "diamond/families.hpp"

namespace diamond {

  namespace {

    std::string describe(FiniteSemiring const& s, ClosureWitness const& w) {
      return s.label(w.x) + (w.op == Op::Add ? " + " : " * ") + s.label(w.y)
             + " = " + s.label(w.result);
    }

    void check_n(int cap, int n) {
      if (n < 4) {
        throw CapExceeded("n must be at least 4, got " + std::to_string(n));
      }
      if (n > cap) {
        throw CapExceeded("n = " + std::to_string(n) + " is above the cap "
                          + std::to_string(cap) + " (raise it with "
                          + kCapVariable + ")");
      }
    }

    // Tables straight from the member list, for orders above the cap.
    Built from_formula(Diamond d, FamilySpec const& spec) {
      auto members = formula_members(d, spec);
      if (!members) {
        throw CapExceeded("n = " + std::to_string(d.order())
                          + " is above the cap and " + spec.name
                          + " has no formula to build it directly");
      }
      if (members->size() > kFormulaOrderLimit) {
        throw CapExceeded(spec.to_string() + " has "
                          + std::to_string(members->size())
                          + " members, above the limit "
                          + std::to_string(kFormulaOrderLimit));
      }
      std::sort(members->begin(), members->end());
      members->erase(std::unique(members->begin(), members->end()),
                     members->end());
      std::unordered_map<std::uint64_t, Index> at;
      std::vector<std::string>                 labels;
      for (std::size_t i = 0; i < members->size(); ++i) {
        at.emplace((*members)[i].encode(), static_cast<Index>(i));
        labels.push_back((*members)[i].to_string());
      }
      auto const         k = members->size();
      std::vector<Index> add(k * k), mul(k * k);
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          Endo const& a = (*members)[x];
          Endo const& b = (*members)[y];
          for (auto [op, r, dst] :
               {std::tuple{'+', a + b, &add}, std::tuple{'*', a * b, &mul}}) {
            auto it = at.find(r.encode());
            if (it == at.end()) {
              throw NotClosed(spec.to_string() + " is not closed: "
                              + a.to_string() + ' ' + op + ' '
                              + b.to_string() + " = " + r.to_string());
            }
            (*dst)[x * k + y] = it->second;
          }
        }
      }
      return {FiniteSemiring(k, std::move(add), std::move(mul), std::move(labels)),
              std::move(*members)};
    }

  }  // namespace

  int cap_from_env(char const* value) {
    if (value == nullptr || *value == '\0') {
      return kDefaultSemiringCap;
    }
    std::string_view s(value);
    int              cap = 0;
    auto             rc  = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (rc.ec != std::errc() || rc.ptr != s.data() + s.size()) {
      throw ParseError(std::string(kCapVariable) + " must be an integer, got '"
                       + std::string(s) + "'");
    }
    if (cap < 4 || cap > kSemiringHardCap) {
      throw CapExceeded(std::string(kCapVariable) + " must lie in [4, "
                        + std::to_string(kSemiringHardCap) + "], got "
                        + std::to_string(cap));
    }
    return cap;
  }

  Built build_for(int cap, int n, std::string const& subset) {
    Diamond const d(n);
    if (subset.empty()) {
      check_n(cap, n);
      auto e = EndoSemiring::build(d, cap);
      return {e.semiring(), e.elements()};
    }
    auto spec = FamilySpec::parse(subset);
    check_spec(d, spec);
    if (n > cap) {
      return from_formula(d, spec);
    }
    auto   e   = EndoSemiring::build(d, cap);
    Subset sub = make_subset(e, spec);
    if (auto c = is_subsemiring(sub); !c) {
      throw NotClosed(subset + " is not closed: "
                      + describe(e.semiring(), *c.witness));
    }
    auto              r = restrict_to(sub);
    std::vector<Endo> elems;
    for (Index x : r.embedding) {
      elems.push_back(e.element(x));
    }
    return {std::move(r.semiring), std::move(elems)};
  }

  std::string cmd_tables(int cap, int n, std::string const& subset, Format f) {
    auto b = build_for(cap, n, subset);
    return render(tables_of(b.semiring, n, subset), f);
  }

  std::string cmd_classify(int cap, int n, std::string const& subset, Format f) {
    auto b = build_for(cap, n, subset);
    return render(catalog_of(b.semiring, b.elements, n, subset), f);
  }

  SubsetReport subset_report(int cap, int n, std::string const& subset) {
    check_n(cap, n);
    Diamond const d(n);
    auto          spec = FamilySpec::parse(subset);
    check_spec(d, spec);
    auto          e   = EndoSemiring::build(d, cap);
    auto const&   s   = e.semiring();
    Subset        sub = make_subset(e, spec);

    SubsetReport r;
    r.n      = n;
    r.subset = subset;
    for (Index x : sub.indices()) {
      r.members.push_back(s.label(x));
    }
    r.ideal_kind = to_string(ideal_kind(sub).kind);
    auto closed  = is_subsemiring(sub);
    r.closed     = closed.closed;
    if (!closed) {
      r.closure_witness = describe(s, *closed.witness);
      return r;
    }
    auto rs   = restrict_to(sub);
    auto lift = [&](std::optional<Index> x) -> std::optional<std::string> {
      if (!x) {
        return std::nullopt;
      }
      return rs.semiring.label(*x);
    };
    r.zero     = lift(find_zero(rs.semiring));
    r.identity = lift(find_identity(rs.semiring));
    r.infinity = lift(find_infinity(rs.semiring));
    auto is    = is_ideal_simple(rs.semiring);
    r.ideal_simple = is.simple;
    for (Index x : is.witness) {
      r.proper_ideal.push_back(rs.semiring.label(x));
    }
    auto cs             = is_congruence_simple(rs.semiring);
    r.congruence_simple = cs.simple;
    if (cs.witness) {
      r.proper_congruence = render_partition(rs.semiring, *cs.witness);
    }
    return r;
  }

  std::string cmd_subset(int cap, int n, std::string const& subset, Format f) {
    return render(subset_report(cap, n, subset), f);
  }

  VerifyOutput cmd_verify(int                             cap,
                          std::vector<int> const&         ns,
                          std::vector<std::string> const& claims,
                          Format                          f,
                          bool                            timings) {
    for (int n : ns) {
      check_n(cap, n);
    }
    Session      session(cap);
    auto         reports = run_all(session, ns, claims);
    VerifyOutput out;
    out.text     = render(reports, f, timings);
    out.any_fail = summarize(reports).fail > 0;
    return out;
  }

}  // namespace diamond
