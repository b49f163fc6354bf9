#include <algorithm>
#include <numeric>

#include "check.hpp"

namespace diamond::detail {

  namespace {

    std::vector<Index> where(std::vector<ElementRecord> const& recs,
                             bool (*pred)(ElementRecord const&)) {
      std::vector<Index> out;
      for (auto const& r : recs) {
        if (pred(r)) {
          out.push_back(r.index);
        }
      }
      return out;
    }

    std::vector<Index> all_of(Subset const& s) {
      return {s.indices().begin(), s.indices().end()};
    }

    // every subset of {1..m} as a sorted index list
    std::vector<std::vector<int>> atom_sets(int m) {
      std::vector<std::vector<int>> out;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> a;
        for (int i = 0; i < m; ++i) {
          if (mask & (1u << i)) {
            a.push_back(i + 1);
          }
        }
        out.push_back(std::move(a));
      }
      return out;
    }

  }  // namespace

  void nilpotent_census(Check& c) {
    auto recs = classify(c.S());
    auto nil  = where(recs, [](ElementRecord const& r) { return r.nilpotent; });
    std::vector<Index> want;
    for (int i = 1; i <= c.atoms(); ++i) {
      want.push_back(c.el(nilpotent(c.d(), i)));
    }
    c.subset_eq(nil, want, "the nilpotents are exactly alpha_{0,i}");
    c.evidence("nilpotents", c.show_all(nil));

    std::vector<std::string> bad;
    for (Index x : want) {
      if (recs[x].nilpotency_index != 2u) {
        bad.push_back(c.show(x));
      }
      for (Index y : want) {
        if (x == y) {
          continue;
        }
        for (Index z : {c.S().add(x, y), c.S().mul(x, y)}) {
          if (recs[z].nilpotent) {
            bad.push_back(c.show(x) + " with " + c.show(y) + " gives "
                          + c.show(z));
          }
        }
      }
    }
    c.expect(bad.empty(),
             "each alpha_{0,i} squares to zero and sums and products of two "
             "distinct ones are not nilpotent",
             bad);

    if (c.atoms() >= 2) {
      Index const a = c.el(alpha0(c.d(), 1, 2));
      Index const f = c.el(phi(c.d(), 1));
      Index const p = c.S().mul(a, f);
      c.expect(p == c.E().zero_index() && !recs[a].nilpotent,
               "a zero-divisor that is not nilpotent",
               {c.show(a) + " * " + c.show(f) + " = " + c.show(p)});
    }

    std::vector<std::string> ac_bad;
    Index const              one = c.E().top_index();
    if (recs[one].zero_divisor()) {
      ac_bad.push_back(c.show(one));
    }
    for (int i = 1; i <= c.atoms(); ++i) {
      Index const ai = c.el(constant_map(c.d(), i));
      Index const ni = c.el(nilpotent(c.d(), i));
      if (!recs[ai].zero_divisor()
          || c.S().mul(ai, ni) != c.E().zero_index()) {
        ac_bad.push_back(c.show(ai));
      }
    }
    c.expect(ac_bad.empty(),
             "the constant 1 is not a zero-divisor; each constant a_i is, "
             "with a_i * alpha_{0,i} = 0",
             ac_bad);
  }

  void prop_4_1(Check& c) {
    auto   recs = classify(c.S());
    Subset ac   = c.fam("AC");
    std::vector<std::string> bad;
    for (Index x = 0; x < c.S().order(); ++x) {
      if (ac.contains(x)) {
        continue;
      }
      auto const img  = c.E().element(x).images();
      bool const hits = std::any_of(img.begin(), img.end(), [](Element e) {
        return e.is_bottom();
      });
      if (recs[x].zero_divisor() != hits) {
        bad.push_back(c.show(x) + (recs[x].zero_divisor()
                                       ? " is a zero-divisor"
                                       : " is not a zero-divisor"));
      }
    }
    c.expect(bad.empty(),
             "outside AC, zero-divisors are exactly the maps sending an atom "
             "to 0",
             bad);
    auto zd = where(recs, [](ElementRecord const& r) {
      return r.zero_divisor();
    });
    c.evidence("zero-divisors: " + std::to_string(zd.size()), {});
  }

  void prop_4_2(Check& c) {
    Subset reg  = c.fam("Reg");
    auto   recs = classify(c.S());
    c.subset_eq(all_of(reg),
                where(recs, [](ElementRecord const& r) { return r.regular; }),
                "Reg equals the elements that are neither zero nor "
                "zero-divisors");
    auto r = c.restrict(reg, "Reg");
    if (!r) {
      return;
    }
    c.zero_is(r->semiring, r->embedding, std::nullopt, "Reg");
    c.identity_is(r->semiring, r->embedding, c.E().identity_index(), "Reg");
    c.infinity_is(r->semiring, r->embedding, c.E().top_index(), "Reg");

    Index const              id = c.E().identity_index();
    std::vector<std::string> bad;
    for (Index x : reg.indices()) {
      Index const s = c.S().add(id, x);
      if (s != x) {
        bad.push_back(c.show(id) + " + " + c.show(x) + " = " + c.show(s));
      }
    }
    c.expect(bad.empty(), "the identity is additively neutral in Reg", bad);
    if (!bad.empty()) {
      c.note("the identity is not the least element of Reg: a regular map "
             "that moves an atom to another atom is incomparable with it");
    }
  }

  void permutation_group(Check& c) {
    Subset p    = c.fam("P");
    auto   recs = classify(c.S());
    c.subset_eq(all_of(p),
                where(recs, [](ElementRecord const& r) { return r.invertible; }),
                "P equals the invertible elements");

    int const m    = c.atoms();
    long long fact = 1;
    for (int k = 2; k <= m; ++k) {
      fact *= k;
    }
    c.expect(static_cast<long long>(p.size()) == fact,
             "P has (n-2)! elements",
             {"|P| = " + std::to_string(p.size())});

    Index const id = c.E().identity_index();
    c.expect(p.contains(id), "P contains the identity");

    std::vector<std::string> bad;
    for (Index x : p.indices()) {
      bool inv = false;
      for (Index y : p.indices()) {
        Index const xy = c.S().mul(x, y);
        if (!p.contains(xy)) {
          bad.push_back(c.show(x) + " * " + c.show(y) + " = " + c.show(xy));
        }
        inv = inv || (xy == id && c.S().mul(y, x) == id);
      }
      if (!inv) {
        bad.push_back("no inverse for " + c.show(x));
      }
    }
    c.expect(bad.empty(), "P is closed and every element has an inverse",
             bad);

    // x -> (atom permutation of x)^-1 turns the product into composition
    auto perm_of = [&](Index x) {
      std::vector<int> s(static_cast<std::size_t>(m));
      for (int i = 1; i <= m; ++i) {
        s[static_cast<std::size_t>(i - 1)] =
            c.E().element(x).at_atom(i).atom_index() - 1;
      }
      return s;
    };
    auto inverse = [](std::vector<int> const& s) {
      std::vector<int> t(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        t[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
      }
      return t;
    };
    auto compose = [](std::vector<int> const& f, std::vector<int> const& g) {
      std::vector<int> h(f.size());   // f after g
      for (std::size_t i = 0; i < f.size(); ++i) {
        h[i] = f[static_cast<std::size_t>(g[i])];
      }
      return h;
    };
    std::vector<std::vector<int>> images;
    std::vector<std::string>      hom_bad;
    for (Index x : p.indices()) {
      images.push_back(inverse(perm_of(x)));
      for (Index y : p.indices()) {
        auto lhs = inverse(perm_of(c.S().mul(x, y)));
        auto rhs = compose(inverse(perm_of(x)), inverse(perm_of(y)));
        if (lhs != rhs) {
          hom_bad.push_back(c.show(x) + " * " + c.show(y));
        }
      }
    }
    std::sort(images.begin(), images.end());
    bool const bijective =
        std::adjacent_find(images.begin(), images.end()) == images.end()
        && static_cast<long long>(images.size()) == fact;
    c.expect(hom_bad.empty() && bijective,
             "the atom permutation map is an isomorphism onto the symmetric "
             "group",
             hom_bad);

    bool abelian = true;
    for (Index x : p.indices()) {
      for (Index y : p.indices()) {
        abelian = abelian && c.S().mul(x, y) == c.S().mul(y, x);
      }
    }
    c.expect(abelian == (m <= 2),
             "P is non-abelian exactly when n-2 >= 3",
             {abelian ? "abelian" : "non-abelian"});
    c.evidence(abelian ? "abelian" : "non-abelian",
               c.show_all(p.indices()));
  }

  void prop_4_3(Check& c) {
    auto r = c.restrict(c.fam("Reg"), "Reg");
    if (!r) {
      return;
    }
    c.maximal(r->semiring, c.local(*r, c.fam("MReg")), "MReg inside Reg");
  }

  void prop_4_4(Check& c) {
    Subset mx = c.fam("MAX");
    if (!c.maximal(c.S(), mx, "MAX")) {
      return;
    }
    std::size_t const want = c.E().order() - c.fam("P").size();
    c.expect(mx.size() == want, "|MAX| = |E| - (n-2)!",
             {"|MAX| = " + std::to_string(mx.size())});
    c.evidence("MAX size " + std::to_string(mx.size()), {});
    c.expect(!is_ideal_simple(c.S()).simple,
             "E therefore has a proper nontrivial ideal");
  }

  void cor_4_5(Check& c) {
    if (c.n() == 4) {
      c.simple(c.S(), "E", true);
      Subset mx = c.fam("MAX");
      auto   r  = ideal_kind(mx);
      if (r.kind != IdealKind::TwoSided) {
        std::vector<std::string> w;
        if (r.add_witness) {
          w.push_back(c.describe(c.S(), *r.add_witness));
        }
        c.evidence("MAX is not an ideal for n = 4", w);
      }
      return;
    }
    c.simple(c.S(), "E", false);
    Subset mx = c.fam("MAX");
    c.two_sided(c.S(), mx, "MAX");
    c.evidence("MAX size " + std::to_string(mx.size()), {});
  }

  void prop_4_6(Check& c) {
    auto reg = c.restrict(c.fam("Reg"), "Reg");
    if (!reg) {
      return;
    }
    Subset idreg = c.fam("IDReg");
    c.closed(c.local(*reg, idreg), "IDReg inside Reg");
    auto r = c.restrict(idreg, "IDReg");
    if (!r) {
      return;
    }

    int const m = c.atoms();
    std::vector<Index> alphas;
    for (auto const& a : atom_sets(m)) {
      alphas.push_back(c.el(identity_on(c.d(), a)));
    }
    c.subset_eq(all_of(idreg), alphas,
                "IDReg is exactly the maps alpha_A over atom sets A");

    auto const&              t = r->semiring;
    std::vector<std::string> bad;
    for (Index x = 0; x < t.order(); ++x) {
      for (Index y = 0; y < t.order(); ++y) {
        if (t.add(x, y) != t.mul(x, y) || t.mul(x, y) != t.mul(y, x)) {
          bad.push_back(t.label(x) + ", " + t.label(y));
        }
      }
    }
    c.expect(bad.empty(), "IDReg is commutative with equal + and * tables",
             bad);

    auto sets = atom_sets(m);
    std::vector<std::string> meet_bad;
    for (auto const& a : sets) {
      for (auto const& b : sets) {
        std::vector<int> ab;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(ab));
        Index const x = c.el(identity_on(c.d(), a));
        Index const y = c.el(identity_on(c.d(), b));
        Index const z = c.el(identity_on(c.d(), ab));
        if (c.S().add(x, y) != z || c.S().mul(x, y) != z
            || c.S().mul(y, x) != z) {
          meet_bad.push_back(c.show(x) + ", " + c.show(y));
        }
      }
    }
    c.expect(meet_bad.empty(),
             "alpha_A + alpha_B = alpha_A alpha_B = alpha_B alpha_A = "
             "alpha_(A meet B)",
             meet_bad);

    c.two_sided(r->semiring, c.local(*r, c.fam("IReg")), "IReg inside IDReg");
    Index const id = c.E().identity_index();
    bool neutral   = true;
    for (Index x : idreg.indices()) {
      neutral = neutral && c.S().add(id, x) == x && c.S().mul(id, x) == x;
    }
    c.expect(neutral, "the identity is additively and multiplicatively "
                      "neutral in IDReg");
  }

}  // namespace diamond::detail
