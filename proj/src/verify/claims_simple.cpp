#include <algorithm>
#include <set>

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

    std::string pair_name(int p, int q) {
      return "E(a" + std::to_string(p) + ",a" + std::to_string(q) + ")";
    }

    struct Image {
      std::vector<Index> map;   // E4 index -> E index
      Restriction        rest;
      std::vector<Index> local;   // E4 index -> index inside rest
    };

    std::optional<Image> embed_image(Check& c, EndoSemiring const& e4, int p,
                                     int q) {
      std::string const name = "image of E4 in " + pair_name(p, q);
      auto              map  = phi_embedding(e4, c.E(), p, q);
      std::set<Index>   distinct(map.begin(), map.end());
      c.expect(distinct.size() == map.size(), name + " is injective");
      Subset img(c.S(), map);
      c.expect(inside(img, c.fam(spec("Eset", {p, q}))),
               name + " lies inside " + pair_name(p, q));
      auto r = c.restrict(img, name);
      if (!r) {
        return std::nullopt;
      }
      std::vector<Index> local;
      for (Index x : map) {
        auto it = std::lower_bound(r->embedding.begin(), r->embedding.end(), x);
        local.push_back(static_cast<Index>(it - r->embedding.begin()));
      }
      return Image{std::move(map), std::move(*r), std::move(local)};
    }

  }  // namespace

  void s_chain(Check& c) {
    Index const one = c.E().top_index();
    std::optional<Subset> prev;
    for (int k = 2; k <= c.n() - 1; ++k) {
      std::string const name = "S_" + std::to_string(k);
      Subset            s    = c.fam(spec("S", {k}));
      c.expect(static_cast<int>(s.size()) == k,
               name + " has " + std::to_string(k) + " elements",
               c.show_all(s.indices()));
      if (prev) {
        c.expect(inside(*prev, s),
                 "S_" + std::to_string(k - 1) + " lies inside " + name);
      }
      auto r = c.restrict(s, name);
      if (r) {
        c.zero_is(r->semiring, r->embedding, std::nullopt, name);
        std::vector<std::string> cells;
        for (Index x : s.indices()) {
          for (Index y : s.indices()) {
            Index const sum = x == y ? x : one;
            if (c.S().add(x, y) != sum || c.S().mul(x, y) != x) {
              cells.push_back(c.show(x) + ", " + c.show(y));
            }
          }
        }
        c.expect(cells.empty(),
                 name + " has x + y = 1 for x != y and x * y = x", cells);
        c.simple(r->semiring, name);
      }
      prev = std::move(s);
    }
    c.subset_eq(all_of(*prev), all_of(c.fam("E01*")),
                "the top of the chain is E01*");
  }

  void thm_7_1(Check& c) {
    for (auto const& pq : subsets_of_size(c.atoms(), 2)) {
      std::string const name = pair_name(pq[0], pq[1]);
      Subset            set  = c.fam(spec("Eset", pq));
      auto              r    = c.restrict(set, name);
      if (!r) {
        continue;
      }
      c.zero_is(r->semiring, r->embedding, c.E().zero_index(), name);
      Index const              id = c.el(identity_on(c.d(), pq));
      std::vector<std::string> bad;
      for (Index x : set.indices()) {
        if (c.S().mul(x, id) != x) {
          bad.push_back(c.show(x));
        }
      }
      c.expect(bad.empty(), c.show(id) + " is a right identity of " + name,
               bad);
      c.simple(r->semiring, name);
    }
  }

  void remark_7_2(Check& c) {
    Subset s = c.fam("S7.2");
    c.expect(s.size() == 13, "S has 13 elements", c.show_all(s.indices()));
    c.expect(inside(s, c.fam("Eset:1,2")), "S lies inside E(a1,a2)");
    c.expect(!inside(s, c.fam("Eai:1")) && !inside(s, c.fam("Eai:2")),
             "S lies in neither E(a1) nor E(a2)");
    auto r = c.restrict(s, "S");
    if (!r) {
      return;
    }
    c.two_sided(r->semiring, c.local(*r, c.fam("I7.2")), "I inside S");
    c.simple(r->semiring, "S", false);

    std::vector<Index> idem;
    for (Index x : s.indices()) {
      if (c.S().mul(x, x) == x) {
        idem.push_back(x);
      }
    }
    Subset ids(c.S(), idem);
    auto   ri = c.restrict(ids, "idempotents of S");
    if (!ri) {
      return;
    }
    auto const&              t = ri->semiring;
    std::vector<std::string> bad;
    for (Index x = 0; x < t.order(); ++x) {
      for (Index y = 0; y < t.order(); ++y) {
        if (t.add(x, y) != t.mul(x, y)) {
          bad.push_back(t.label(x) + ", " + t.label(y));
        }
      }
    }
    c.expect(bad.empty(),
             "the idempotents of S have equal + and * tables", bad);
    c.evidence("idempotents of S", c.show_all(ids.indices()));
  }

  void prop_7_3(Check& c) {
    auto const& e4    = c.session().semiring(4);
    bool        first = true;
    for (auto const& pq : subsets_of_size(c.atoms(), 2)) {
      auto img = embed_image(c, e4, pq[0], pq[1]);
      if (!img) {
        continue;
      }
      std::string const name = "Phi into " + pair_name(pq[0], pq[1]);
      c.expect(is_isomorphism(e4.semiring(), img->rest.semiring, img->local),
               name + " preserves + and *");
      if (first) {
        first = false;
        c.expect(find_isomorphism(e4.semiring(), img->rest.semiring)
                     .has_value(),
                 "an unaided search also finds an isomorphism for " + name);
        std::vector<std::string> pairs;
        for (std::size_t i = 0; i < img->map.size(); ++i) {
          pairs.push_back(e4.semiring().label(static_cast<Index>(i)) + " -> "
                          + c.show(img->map[i]));
        }
        c.evidence(name, pairs);
      }
    }
  }

  void cor_7_4(Check& c) {
    auto const& e4 = c.session().semiring(4);
    for (auto const& pq : subsets_of_size(c.atoms(), 2)) {
      auto img = embed_image(c, e4, pq[0], pq[1]);
      if (!img) {
        continue;
      }
      std::string const name = "image of E4 in " + pair_name(pq[0], pq[1]);
      c.expect(img->rest.semiring.order() == 16, name + " has order 16");
      c.simple(img->rest.semiring, name);
    }
  }

  void thm_7_5(Check& c) {
    int const m     = c.atoms();
    int       below = 0;
    for (int k = 3; k <= m; ++k) {
      for (auto const& a : subsets_of_size(m, k)) {
        std::string const name = "E(" + join(a) + ")";
        auto              r    = c.restrict(c.fam(spec("Eset", a)), name);
        if (!r) {
          continue;
        }
        Subset ideal = c.fam(spec("I7.5", a));
        bool   ok    = c.maximal(r->semiring, c.local(*r, ideal),
                                 "the union over A minus one atom inside "
                                     + name);
        if (!ok && k < m) {
          ++below;
        }
        if (k == m) {
          c.subset_eq(all_of(ideal), all_of(c.fam("MAX")),
                      "for k = n-2 the union is MAX");
        }
      }
    }
    if (below > 0) {
      c.note("for 2 < k < n-2 the complement of I in E(A) holds maps with "
             "image covering A that are not permutations of A, and adding "
             "one of them gives a larger proper ideal ("
             + std::to_string(below) + " subsets A)");
    }
  }

}  // namespace diamond::detail
