#include <algorithm>

#include "check.hpp"

namespace diamond::detail {

  namespace {

    std::vector<Index> all_of(Subset const& s) {
      return {s.indices().begin(), s.indices().end()};
    }

    bool inside(Subset const& a, Subset const& b) {
      return std::all_of(a.indices().begin(), a.indices().end(),
                         [&](Index x) { return b.contains(x); });
    }

    std::string ai(int i) {
      return "E(a" + std::to_string(i) + ")";
    }

  }  // namespace

  void prop_5_1(Check& c) {
    for (int i = 1; i <= c.atoms(); ++i) {
      if (auto r = c.restrict(c.fam(spec("Eai", {i})), ai(i))) {
        c.zero_is(r->semiring, r->embedding, c.E().zero_index(), ai(i));
      }
    }
  }

  void order_chain(Check& c) {
    std::vector<std::string> sizes;
    bool                     ok = true;
    for (int i = 1; i <= c.atoms(); ++i) {
      auto sz = c.fam(spec("Eai", {i})).size();
      sizes.push_back(ai(i) + ": " + std::to_string(sz));
      ok = ok && static_cast<int>(sz) == 3 * (c.n() - 1);
    }
    c.expect(ok, "|E(a_i)| = 3(n-1) = " + std::to_string(3 * (c.n() - 1)),
             sizes);
    if (ok) {
      c.evidence("orders", sizes);
    }
  }

  void prop_5_2(Check& c) {
    for (int i = 1; i <= c.atoms(); ++i) {
      std::string const name = "E0i for a" + std::to_string(i);
      Subset            e0i  = c.fam(spec("E0i", {i}));
      c.expect(inside(e0i, c.fam(spec("Eai", {i}))),
               name + " lies inside " + ai(i));
      auto r = c.restrict(e0i, name);
      if (!r) {
        continue;
      }
      c.zero_is(r->semiring, r->embedding, c.E().zero_index(), name);
      Subset z = c.local(*r, c.fam(spec("Z0i", {i})));
      if (c.two_sided(r->semiring, z, "{0, alpha_{0," + std::to_string(i)
                                          + "}} inside " + name)) {
        c.expect(!z.is_full() && z.size() == 2,
                 "{0, alpha_{0,i}} is proper with two elements");
      }
    }
  }

  void prop_5_3(Check& c) {
    for (int i = 1; i <= c.atoms(); ++i) {
      std::string const name = "Ei1 for a" + std::to_string(i);
      Subset            ei1  = c.fam(spec("Ei1", {i}));
      c.expect(inside(ei1, c.fam(spec("Eai", {i}))),
               name + " lies inside " + ai(i));
      auto r = c.restrict(ei1, name);
      if (!r) {
        continue;
      }
      c.zero_is(r->semiring, r->embedding, std::nullopt, name);
      c.maximal(r->semiring, c.local(*r, c.fam(spec("Mi1", {i}))),
                name + " without psi_{i,i}");
    }
  }

  void prop_5_4(Check& c) {
    Subset              e01 = c.fam("E01");
    std::vector<Subset> chains;
    for (int i = 1; i <= c.atoms(); ++i) {
      chains.push_back(c.fam(spec("Eai", {i})));
    }
    std::vector<Index> meet;
    for (Index x = 0; x < c.S().order(); ++x) {
      bool all = std::all_of(chains.begin(), chains.end(),
                             [&](Subset const& s) { return s.contains(x); });
      if (all) {
        meet.push_back(x);
      }
    }
    c.subset_eq(all_of(e01), meet, "E01 equals the intersection of all E(a_i)");
    for (int i = 1; i <= c.atoms(); ++i) {
      if (auto r = c.restrict(c.fam(spec("Eai", {i})), ai(i))) {
        c.closed(c.local(*r, e01), "E01 inside " + ai(i));
      }
    }
  }

  void cor_5_5(Check& c) {
    Subset e01 = c.fam("E01");
    for (int i = 1; i <= c.atoms(); ++i) {
      std::vector<Index> u = all_of(e01);
      for (auto const& name : {"E0i", "Ei1"}) {
        Subset s = c.fam(spec(name, {i}));
        c.closed(s, std::string(name) + " for a" + std::to_string(i));
        u.insert(u.end(), s.indices().begin(), s.indices().end());
      }
      c.subset_eq(all_of(c.fam(spec("Eai", {i}))), u,
                  ai(i) + " equals E0i, Ei1 and E01 together");
    }
  }

  void thm_5_6(Check& c) {
    for (int i = 1; i <= c.atoms(); ++i) {
      if (auto r = c.restrict(c.fam(spec("Eai", {i})), ai(i))) {
        c.simple(r->semiring, ai(i));
      }
    }
  }

  void prop_5_8(Check& c) {
    for (int i = 1; i <= c.atoms(); ++i) {
      std::string const name = "R for a" + std::to_string(i);
      Subset            rset = c.fam(spec("R", {i}));
      c.expect(inside(rset, c.fam(spec("Eai", {i}))),
               name + " lies inside " + ai(i));
      auto r = c.restrict(rset, name);
      if (!r) {
        continue;
      }
      c.two_sided(r->semiring, c.local(*r, c.fam("E01")), "E01 inside " + name);
      c.simple(r->semiring, name, false);
    }
  }

  void prop_5_9(Check& c) {
    for (int k = 1; k <= c.atoms(); ++k) {
      for (auto const& a : subsets_of_size(c.atoms(), k)) {
        std::string const name = "E(" + join(a) + ")";
        if (auto r = c.restrict(c.fam(spec("Eset", a)), name)) {
          c.zero_is(r->semiring, r->embedding, c.E().zero_index(), name);
        }
      }
    }
  }

}  // namespace diamond::detail
