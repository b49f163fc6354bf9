#include "check.hpp"

#include "diamond/render.hpp"

#include <algorithm>

namespace diamond::detail {

  std::string spec(std::string const& name, std::vector<int> const& params) {
    return FamilySpec{name, params}.to_string();
  }

  std::string join(std::vector<int> const& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += (i ? "," : "") + std::to_string(xs[i]);
    }
    return out;
  }

  std::vector<std::vector<int>> subsets_of_size(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int>              cur;
    auto rec = [&](auto& self, int from) -> void {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (int i = from; i <= m; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    return out;
  }

  Check::Check(Session& session, int n, ClaimReport& report)
      : _session(session), _n(n), _e(session.semiring(n)), _r(report) {}

  Subset Check::fam(std::string const& text) const {
    return make_subset(_e, FamilySpec::parse(text));
  }

  Index Check::el(std::string const& text) const {
    return _e.index_of(make_element(d(), FamilySpec::parse(text)));
  }

  bool Check::expect(bool ok, std::string what, std::vector<std::string> items) {
    if (!ok) {
      if (items.empty()) {
        items.push_back(what);
      }
      _failed.push_back(what);
      _r.witnesses.push_back({"counterexample: " + what, std::move(items)});
      _r.status = Status::Fail;
    }
    return ok;
  }

  void Check::evidence(std::string label, std::vector<std::string> items) {
    _r.witnesses.push_back({std::move(label), std::move(items)});
  }

  void Check::note(std::string finding) {
    _r.findings.push_back(std::move(finding));
  }

  void Check::mismatch(std::string label, std::vector<std::string> items) {
    _r.witnesses.push_back({std::move(label), std::move(items)});
    if (_r.status == Status::Pass) {
      _r.status = Status::MismatchNoted;
    }
  }

  std::vector<std::string> Check::show_all(std::span<Index const> xs) const {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (Index x : xs) {
      out.push_back(show(x));
    }
    return out;
  }

  std::string Check::describe(FiniteSemiring const& s,
                              ClosureWitness const& w) const {
    return s.label(w.x) + (w.op == Op::Add ? " + " : " * ") + s.label(w.y)
           + " = " + s.label(w.result);
  }

  bool Check::closed(Subset const& sub, std::string const& name) {
    auto r = is_subsemiring(sub);
    std::vector<std::string> items;
    if (!r) {
      items.push_back(describe(sub.ambient(), *r.witness));
    }
    return expect(r.closed, name + " is closed under + and *", items);
  }

  std::optional<Restriction> Check::restrict(Subset const& sub,
                                             std::string const& name) {
    if (!closed(sub, name)) {
      return std::nullopt;
    }
    return restrict_to(sub);
  }

  Subset Check::local(Restriction const& amb, Subset const& inner) const {
    std::vector<Index> pos(S().order(), static_cast<Index>(-1));
    for (std::size_t i = 0; i < amb.embedding.size(); ++i) {
      pos[amb.embedding[i]] = static_cast<Index>(i);
    }
    std::vector<Index> out;
    for (Index x : inner.indices()) {
      if (pos[x] == static_cast<Index>(-1)) {
        throw NotClosed(show(x) + " lies outside the ambient subsemiring");
      }
      out.push_back(pos[x]);
    }
    return Subset(amb.semiring, std::move(out));
  }

  bool Check::two_sided(FiniteSemiring const& amb, Subset const& inner,
                        std::string const& what) {
    auto                     rep = ideal_kind(inner);
    std::vector<std::string> items;
    for (auto const* w : {&rep.add_witness, &rep.left_witness,
                          &rep.right_witness}) {
      if (*w) {
        items.push_back(describe(amb, **w));
      }
    }
    return expect(rep.kind == IdealKind::TwoSided,
                  what + " is a two-sided ideal (found "
                      + to_string(rep.kind) + ")",
                  items);
  }

  bool Check::maximal(FiniteSemiring const& amb, Subset const& inner,
                      std::string const& what) {
    if (!two_sided(amb, inner, what)) {
      return false;
    }
    bool proper = !inner.is_full();
    if (!expect(proper, what + " is proper")) {
      return false;
    }
    bool ok = is_maximal_ideal(inner);
    std::vector<std::string> items;
    if (!ok) {
      // some x outside whose generated ideal stays proper
      for (Index x = 0; x < amb.order(); ++x) {
        if (inner.contains(x)) {
          continue;
        }
        std::vector<Index> seeds(inner.indices().begin(),
                                 inner.indices().end());
        seeds.push_back(x);
        auto gen = generate_ideal(amb, seeds);
        if (gen.size() < amb.order()) {
          items.push_back("adding " + amb.label(x)
                          + " generates a proper ideal of size "
                          + std::to_string(gen.size()));
          break;
        }
      }
    }
    return expect(ok, what + " is a maximal ideal", items);
  }

  namespace {

    std::optional<Index> lift(std::optional<Index> local,
                              std::vector<Index> const& emb) {
      if (!local) {
        return std::nullopt;
      }
      return emb.at(*local);
    }

  }  // namespace

  bool Check::zero_is(FiniteSemiring const& s, std::vector<Index> const& emb,
                      std::optional<Index> expected, std::string const& name) {
    auto got = lift(find_zero(s), emb);
    return expect(got == expected,
                  name + (expected ? " has zero " + show(*expected)
                                   : std::string(" has no zero")),
                  {got ? "zero found: " + show(*got) : "no zero found"});
  }

  bool Check::infinity_is(FiniteSemiring const&     s,
                          std::vector<Index> const& emb,
                          std::optional<Index>      expected,
                          std::string const&        name) {
    auto got = lift(find_infinity(s), emb);
    return expect(got == expected,
                  name + (expected ? " has infinity " + show(*expected)
                                   : std::string(" has no infinity")),
                  {got ? "infinity found: " + show(*got)
                       : "no infinity found"});
  }

  bool Check::identity_is(FiniteSemiring const&     s,
                          std::vector<Index> const& emb,
                          std::optional<Index>      expected,
                          std::string const&        name) {
    auto got = lift(find_identity(s), emb);
    return expect(got == expected,
                  name + (expected ? " has identity " + show(*expected)
                                   : std::string(" has no identity")),
                  {got ? "identity found: " + show(*got)
                       : "no identity found"});
  }

  void Check::simple(FiniteSemiring const& s, std::string const& name,
                     bool expected) {
    auto is = is_ideal_simple(s);
    std::vector<std::string> ideal;
    for (Index x : is.witness) {
      ideal.push_back(s.label(x));
    }
    if (expected) {
      expect(is.simple, name + " has no proper nontrivial ideal", ideal);
    } else if (expect(!is.simple, name + " has a proper nontrivial ideal")) {
      evidence("proper ideal of " + name + " (size "
                   + std::to_string(ideal.size()) + ")",
               ideal);
    }

    auto cs = is_congruence_simple(s);
    std::vector<std::string> part;
    if (cs.witness) {
      part.push_back(render_partition(s, *cs.witness));
    }
    if (cs.simple == expected) {
      evidence(name + (cs.simple ? " is congruence-simple"
                                 : " has a proper nontrivial congruence"),
               part);
      return;
    }
    if (cs.simple) {
      note(name + " is congruence-simple: every pair of distinct elements"
                  " generates the full congruence, so it is simple under the"
                  " congruence definition although it has a proper ideal");
    } else {
      note(name + " is not congruence-simple: a proper nontrivial"
                  " congruence exists although there is no proper"
                  " nontrivial ideal");
      evidence("proper congruence of " + name, part);
    }
  }

  void Check::simple_by_congruence(FiniteSemiring const& s,
                                   std::string const&    name) {
    auto cs = is_congruence_simple(s);
    std::vector<std::string> part;
    if (cs.witness) {
      part.push_back(render_partition(s, *cs.witness));
    }
    expect(cs.simple, name + " is congruence-simple", part);
    auto is = is_ideal_simple(s);
    if (is.simple) {
      evidence(name + " has no proper nontrivial ideal", {});
    } else {
      std::vector<std::string> ideal;
      for (Index x : is.witness) {
        ideal.push_back(s.label(x));
      }
      evidence("proper ideal of " + name, ideal);
    }
  }

  bool Check::subset_eq(std::vector<Index> const& got,
                        std::vector<Index> const& want,
                        std::string const&        what) {
    std::vector<Index> a = got, b = want;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<std::string> items;
    std::vector<Index>       extra, missing;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(extra));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(missing));
    for (Index x : extra) {
      items.push_back("only on the left: " + show(x));
    }
    for (Index x : missing) {
      items.push_back("only on the right: " + show(x));
    }
    return expect(a == b, what, items);
  }

  void finish(Check& c) {
    auto& r = c._r;
    std::size_t fails = c._failed.size();
    if (fails == 0) {
      r.summary = r.status == Status::MismatchNoted
                      ? "holds; printed cells differ from the computed ones"
                      : "holds";
    } else {
      r.summary = std::to_string(fails) + " check"
                  + (fails == 1 ? "" : "s") + " failed; first: "
                  + c._failed.front();
    }
    if (!r.findings.empty()) {
      r.summary += " (" + std::to_string(r.findings.size()) + " finding"
                   + (r.findings.size() == 1 ? "" : "s") + ")";
    }
  }

}  // namespace diamond::detail
