#include <algorithm>

#include "check.hpp"

namespace diamond::detail {

  namespace {

    std::vector<Index> all_of(Subset const& s) {
      return {s.indices().begin(), s.indices().end()};
    }

    bool idempotent(Check const& c, Index x) {
      return c.S().mul(x, x) == x;
    }

    std::vector<Index> without(std::vector<Index> xs, Index x) {
      xs.erase(std::remove(xs.begin(), xs.end(), x), xs.end());
      return xs;
    }

  }  // namespace

  void idempotent_closure(Check& c) {
    Index const f  = c.el(phi(c.d(), 1));
    Index const a  = c.el(alpha0(c.d(), 1, 2));
    Index const fa = c.S().mul(f, a);
    c.expect(idempotent(c, f) && idempotent(c, a) && !idempotent(c, fa)
                 && fa == c.el(nilpotent(c.d(), 1)),
             "two idempotents whose product alpha_{0,1} is not idempotent",
             {c.show(f) + " * " + c.show(a) + " = " + c.show(fa)});

    if (c.atoms() < 3) {
      c.evidence("the non-stable example needs a third atom", {});
      return;
    }
    Index const x = a;
    Index const y = c.el(alpha0(c.d(), 2, 3));
    std::vector<Element> img(static_cast<std::size_t>(c.n() - 1),
                             Element::top());
    img[1] = Element::atom(2);
    img[2] = Element::atom(1);
    Index const want_sum  = c.el(Endo(c.d(), img));
    Index const want_prod = c.el(nilpotent(c.d(), 2));
    Index const sum       = c.S().add(x, y);
    Index const prod      = c.S().mul(x, y);
    bool const  unstable  = !c.E().element(x).fixes_top()
                           && !c.E().element(y).fixes_top();
    c.expect(idempotent(c, x) && idempotent(c, y) && unstable,
             "both summands are idempotents that move 1",
             {c.show(x), c.show(y)});
    c.expect(sum == want_sum && !idempotent(c, sum),
             "their sum is the stated non-idempotent",
             {c.show(x) + " + " + c.show(y) + " = " + c.show(sum)});
    c.expect(prod == want_prod && !idempotent(c, prod),
             "their product is the stated non-idempotent",
             {c.show(x) + " * " + c.show(y) + " = " + c.show(prod)});
  }

  void lemma_6_1(Check& c) {
    Subset si   = c.fam("SI");
    Subset star = c.fam("E01*");

    std::vector<Index> stable;
    for (Index x = 0; x < c.S().order(); ++x) {
      if (idempotent(c, x) && c.E().element(x).fixes_top()) {
        stable.push_back(x);
      }
    }
    c.subset_eq(all_of(si), stable,
                "SI equals the idempotents fixing 1 (from the tables)");
    c.expect(std::all_of(star.indices().begin(), star.indices().end(),
                         [&](Index x) { return si.contains(x); }),
             "E01* lies inside SI");

    std::vector<Index> diff, want;
    for (Index x : si.indices()) {
      if (!star.contains(x)) {
        diff.push_back(x);
      }
    }
    for (Index x = 0; x < c.S().order(); ++x) {
      Endo const& e  = c.E().element(x);
      bool        ok = e.fixes_top();
      for (int i = 1; i <= c.atoms() && ok; ++i) {
        Element v = e.at_atom(i);
        ok = v.is_top() || v == Element::atom(i);
      }
      if (ok) {
        want.push_back(x);
      }
    }
    bool const ok = c.subset_eq(diff, want,
                                "SI minus E01* is the set of maps sending "
                                "each atom to itself or 1");
    Index const one = c.E().top_index();
    want.erase(std::remove(want.begin(), want.end(), one), want.end());
    if (!ok && diff == want) {
      c.note("the only exception is the constant 1: it sends every atom to "
             "1 but lies in E01*");
    }
  }

  void prop_6_2(Check& c) {
    Subset si = c.fam("SI");
    auto   r  = c.restrict(si, "SI");
    if (!r) {
      return;
    }
    std::vector<Index> u = all_of(c.fam("IDReg"));
    Subset             star = c.fam("E01*");
    u.insert(u.end(), star.indices().begin(), star.indices().end());
    c.subset_eq(all_of(si), u, "SI equals IDReg together with E01*");
    c.two_sided(r->semiring, c.local(*r, star), "E01* inside SI");
    c.maximal(r->semiring, c.local(*r, c.fam("SIminus")),
              "SI minus the identity");
  }

  void prop_6_3(Check& c) {
    Subset hat = c.fam("IDRegHat");
    auto   r   = c.restrict(hat, "IDRegHat");
    if (!r) {
      return;
    }
    c.zero_is(r->semiring, r->embedding, c.E().zero_index(), "IDRegHat");
    c.two_sided(r->semiring, c.local(*r, c.fam("AC")), "AC inside IDRegHat");
    std::vector<std::string> bad;
    for (Index x : hat.indices()) {
      if (!idempotent(c, x)) {
        bad.push_back(c.show(x));
      }
    }
    c.expect(bad.empty(), "every element of IDRegHat is idempotent", bad);
  }

  void example_6_4(Check& c) {
    std::optional<Restriction> first;
    for (int i = 1; i <= c.atoms(); ++i) {
      std::string const name = "SI(a" + std::to_string(i) + ")";
      Subset            set  = c.fam(spec("SI", {i}));
      auto              r    = c.restrict(set, name);
      if (!r) {
        continue;
      }
      Index const f   = c.el(phi(c.d(), i));
      Index const p   = c.el(psi(c.d(), i, i));
      Index const one = c.E().top_index();
      c.subset_eq(all_of(set), {f, p, one}, name + " is {phi_i, psi_ii, 1}");

      Index const              row[3]  = {f, p, one};
      Index const              add[3][3] = {{f, p, one}, {p, p, one},
                                            {one, one, one}};
      Index const              mul[3][3] = {{f, f, f}, {f, p, one},
                                            {one, one, one}};
      std::vector<std::string> cells;
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
          Index const s = c.S().add(row[x], row[y]);
          Index const m = c.S().mul(row[x], row[y]);
          if (s != add[x][y]) {
            cells.push_back(c.show(row[x]) + " + " + c.show(row[y]) + " = "
                            + c.show(s));
          }
          if (m != mul[x][y]) {
            cells.push_back(c.show(row[x]) + " * " + c.show(row[y]) + " = "
                            + c.show(m));
          }
        }
      }
      c.expect(cells.empty(), name + " reproduces the printed tables", cells);

      c.zero_is(r->semiring, r->embedding, std::nullopt, name);
      c.infinity_is(r->semiring, r->embedding, std::nullopt, name);
      c.identity_is(r->semiring, r->embedding, p, name);
      c.two_sided(r->semiring, c.local(*r, Subset(c.S(), {f, one})),
                  "{phi_i, 1} inside " + name);
      c.simple_by_congruence(r->semiring, name);

      if (!first) {
        first = std::move(r);
      } else {
        c.expect(find_isomorphism(first->semiring, r->semiring).has_value(),
                 name + " is isomorphic to SI(a1)");
      }

      Subset lit = c.fam(spec("SIset", {i}));
      if (lit.size() != 3) {
        c.note("SI meet E(a" + std::to_string(i) + ") has "
               + std::to_string(lit.size())
               + " elements: every phi_j has image {0,1} and lies in it, so "
                 "the three-element set is a proper part of that meet");
        c.evidence("SI meet E(a" + std::to_string(i) + ")",
                   c.show_all(lit.indices()));
      }
    }
  }

  void prop_6_5(Check& c) {
    int const m            = c.atoms();
    int       lit_identity = 0, lit_maximal = 0, total = 0;
    for (int k = 1; k <= m; ++k) {
      for (auto const& a : subsets_of_size(m, k)) {
        ++total;
        std::string const tag = "{" + join(a) + "}";
        Index const       id  = c.el(identity_on(c.d(), a));

        // phi_j for j in A and alpha_B for B inside A
        std::vector<Index> set;
        for (int j : a) {
          set.push_back(c.el(phi(c.d(), j)));
        }
        for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
          std::vector<int> b;
          for (std::size_t t = 0; t < a.size(); ++t) {
            if (mask & (1u << t)) {
              b.push_back(a[t]);
            }
          }
          set.push_back(c.el(identity_on(c.d(), b)));
        }
        std::string const name = "SI(" + tag + ")";
        Subset            sub(c.S(), set);
        if (auto r = c.restrict(sub, name)) {
          c.zero_is(r->semiring, r->embedding, std::nullopt, name);
          c.infinity_is(r->semiring, r->embedding, std::nullopt, name);
          c.identity_is(r->semiring, r->embedding, id, name);
          c.maximal(r->semiring,
                    c.local(*r, Subset(c.S(), without(set, id))),
                    name + " minus i(A)");
        }

        // phi_j + i(A) is psi_jj inside A and 1 outside
        std::vector<std::string> bad;
        for (int j = 1; j <= m; ++j) {
          Index const fj   = c.el(phi(c.d(), j));
          bool const  in   = std::find(a.begin(), a.end(), j) != a.end();
          Index const want = in ? c.el(psi(c.d(), j, j)) : c.E().top_index();
          if (c.S().add(fj, id) != want) {
            bad.push_back(c.show(fj) + " + " + c.show(id) + " = "
                          + c.show(c.S().add(fj, id)));
          }
        }
        c.expect(bad.empty(),
                 "phi_j + i(A) is psi_jj for j in A and 1 otherwise", bad);

        // the literal meet with E(A)
        Subset lit = c.fam(spec("SIset", a));
        if (is_subsemiring(lit)) {
          auto lr = restrict_to(lit);
          auto li = find_identity(lr.semiring);
          if (li && lr.embedding[*li] == id) {
            ++lit_identity;
          }
          Subset j = c.local(lr, c.fam(spec("J", a)));
          if (ideal_kind(j).kind == IdealKind::TwoSided && !j.is_full()
              && is_maximal_ideal(j)) {
            ++lit_maximal;
          }
        }
      }
    }
    if (lit_identity < total) {
      c.note("read literally as SI meet E(A), the set contains phi_j for "
             "atoms outside A; then i(A) is only a right identity (it has "
             "an identity in "
             + std::to_string(lit_identity) + " of "
             + std::to_string(total)
             + " cases); the statement holds for the set of phi_j with j "
               "in A and alpha_B with B inside A");
    }
    c.evidence("literal reading: J maximal in " + std::to_string(lit_maximal)
                   + " of " + std::to_string(total) + " cases",
               {});
  }

}  // namespace diamond::detail
