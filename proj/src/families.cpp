#include "diamond/families.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace diamond {

  //////////////////////////////////////////////////////////////////////////
  // FamilySpec
  //////////////////////////////////////////////////////////////////////////

  FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    auto       colon = text.find(':');
    spec.name        = std::string(text.substr(0, colon));
    if (spec.name.empty()) {
      throw BadFamily("empty family name in '" + std::string(text) + "'");
    }
    if (colon == std::string_view::npos) {
      return spec;
    }
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto             comma = rest.find(',');
      std::string_view tok   = rest.substr(0, comma);
      int              v     = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw BadFamily("bad parameter '" + std::string(tok) + "' in '"
                        + std::string(text) + "'");
      }
      spec.params.push_back(v);
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
      if (rest.empty()) {
        throw BadFamily("trailing comma in '" + std::string(text) + "'");
      }
    }
    return spec;
  }

  std::string FamilySpec::to_string() const {
    std::string out = name;
    for (std::size_t i = 0; i < params.size(); ++i) {
      out += i == 0 ? ':' : ',';
      out += std::to_string(params[i]);
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Named elements
  //////////////////////////////////////////////////////////////////////////

  namespace {

    // images from a rule on atom indices plus the value at 1
    template <typename F>
    Endo build(Diamond d, F&& at_atom, Element at_top) {
      std::vector<Element> img;
      img.reserve(d.order() - 1);
      for (int k = 1; k <= d.atom_count(); ++k) {
        img.push_back(at_atom(k));
      }
      img.push_back(at_top);
      return Endo(d, img);
    }

    void check_atom(Diamond d, int i) {
      if (i < 1 || i > d.atom_count()) {
        throw BadFamily("atom index " + std::to_string(i)
                        + " is out of range 1.." + std::to_string(d.atom_count()));
      }
    }

    bool in(std::vector<int> const& a, int k) {
      return std::find(a.begin(), a.end(), k) != a.end();
    }

  }  // namespace

  Endo zero_map(Diamond d) {
    return build(d, [](int) { return Element::bottom(); }, Element::bottom());
  }

  Endo top_map(Diamond d) {
    return build(d, [](int) { return Element::top(); }, Element::top());
  }

  Endo identity_map(Diamond d) {
    return build(d, [](int k) { return Element::atom(k); }, Element::top());
  }

  Endo constant_map(Diamond d, int i) {
    check_atom(d, i);
    auto ai = Element::atom(i);
    return build(d, [&](int) { return ai; }, ai);
  }

  Endo phi(Diamond d, int i) {
    check_atom(d, i);
    return build(
        d, [&](int k) { return k == i ? Element::bottom() : Element::top(); },
        Element::top());
  }

  Endo psi(Diamond d, int i, int j) {
    check_atom(d, i);
    check_atom(d, j);
    return build(
        d, [&](int k) { return k == i ? Element::atom(j) : Element::top(); },
        Element::top());
  }

  Endo alpha0(Diamond d, int i, int j) {
    check_atom(d, i);
    check_atom(d, j);
    auto ai = Element::atom(i);
    return build(
        d, [&](int k) { return k == j ? Element::bottom() : ai; }, ai);
  }

  Endo nilpotent(Diamond d, int i) {
    return alpha0(d, i, i);
  }

  Endo identity_on(Diamond d, std::vector<int> const& a) {
    for (int i : a) {
      check_atom(d, i);
    }
    return build(
        d, [&](int k) { return in(a, k) ? Element::atom(k) : Element::top(); },
        Element::top());
  }

  //////////////////////////////////////////////////////////////////////////
  // Family tables
  //////////////////////////////////////////////////////////////////////////

  namespace {

    using Params    = std::vector<int>;
    using Predicate = std::function<bool(Endo const&, Params const&)>;
    using Formula   = std::function<std::vector<Endo>(Diamond, Params const&)>;

    struct SubsetDef {
      FamilyInfo info;
      Predicate  pred;
      Formula    formula;   // may be empty
    };

    bool image_within(Endo const& e, std::vector<Element> const& allowed) {
      for (Element x : e.images()) {
        if (std::find(allowed.begin(), allowed.end(), x) == allowed.end()) {
          return false;
        }
      }
      return true;
    }

    std::vector<Element> chain(Params const& atoms) {
      std::vector<Element> out{Element::bottom(), Element::top()};
      for (int i : atoms) {
        out.push_back(Element::atom(i));
      }
      return out;
    }

    bool is_constant(Endo const& e) {
      auto img = e.images();
      return std::all_of(img.begin(), img.end(),
                         [&](Element x) { return x == img.front(); });
    }

    bool idempotent(Endo const& e) {
      return e * e == e;
    }

    bool no_zero_image(Endo const& e) {
      auto img = e.images();
      return std::none_of(img.begin(), img.end(),
                          [](Element x) { return x.is_bottom(); });
    }

    bool regular(Endo const& e) {
      return e.fixes_top() && no_zero_image(e);
    }

    bool some_atom_to_top(Endo const& e) {
      for (int k = 1; k <= e.diamond().atom_count(); ++k) {
        if (e.at_atom(k).is_top()) {
          return true;
        }
      }
      return false;
    }

    bool permutation(Endo const& e) {
      return regular(e) && !some_atom_to_top(e);
    }

    bool is_e01(Endo const& e) {
      return image_within(e, chain({}));
    }

    // psi_{i,j} for some i, j
    bool is_psi(Endo const& e) {
      if (!e.fixes_top()) {
        return false;
      }
      int atoms = 0, tops = 0;
      for (int k = 1; k <= e.diamond().atom_count(); ++k) {
        atoms += e.at_atom(k).is_atom();
        tops += e.at_atom(k).is_top();
      }
      return atoms == 1 && tops == e.diamond().atom_count() - 1;
    }

    bool is_ea1(Endo const& e) {
      return e == zero_map(e.diamond()) || e == top_map(e.diamond())
             || is_psi(e);
    }

    bool is_aa(Endo const& e) {
      return is_e01(e) || is_ea1(e);
    }

    bool stable_idempotent(Endo const& e) {
      return e.fixes_top() && idempotent(e);
    }

    bool within_set(Endo const& e, Params const& a) {
      return image_within(e, chain(a));
    }

    std::vector<Endo> concat(std::vector<std::vector<Endo>> parts) {
      std::vector<Endo> out;
      for (auto& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    std::vector<Endo> f_ac(Diamond d) {
      std::vector<Endo> out{zero_map(d), top_map(d)};
      for (int i = 1; i <= d.atom_count(); ++i) {
        out.push_back(constant_map(d, i));
      }
      return out;
    }

    std::vector<Endo> f_e01(Diamond d) {
      std::vector<Endo> out{zero_map(d), top_map(d)};
      for (int i = 1; i <= d.atom_count(); ++i) {
        out.push_back(phi(d, i));
      }
      return out;
    }

    std::vector<Endo> f_e01_star(Diamond d) {
      auto out = f_e01(d);
      std::erase(out, zero_map(d));
      return out;
    }

    std::vector<Endo> f_ea1(Diamond d) {
      std::vector<Endo> out{zero_map(d), top_map(d)};
      for (int i = 1; i <= d.atom_count(); ++i) {
        for (int j = 1; j <= d.atom_count(); ++j) {
          out.push_back(psi(d, i, j));
        }
      }
      return out;
    }

    std::vector<Endo> f_ireg(Diamond d) {
      std::vector<Endo> out{top_map(d)};
      for (int i = 1; i <= d.atom_count(); ++i) {
        out.push_back(psi(d, i, i));
      }
      return out;
    }

    std::vector<Endo> f_idaa(Diamond d) {
      auto out = f_ireg(d);
      for (int i = 1; i <= d.atom_count(); ++i) {
        out.push_back(phi(d, i));
      }
      return out;
    }

    // every subset of {1..m} as a sorted list
    std::vector<Params> all_subsets(int m) {
      std::vector<Params> out;
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Params a;
        for (int k = 1; k <= m; ++k) {
          if (mask & (1u << (k - 1))) {
            a.push_back(k);
          }
        }
        out.push_back(std::move(a));
      }
      return out;
    }

    std::vector<Endo> f_idreg(Diamond d) {
      std::vector<Endo> out;
      for (auto const& a : all_subsets(d.atom_count())) {
        out.push_back(identity_on(d, a));
      }
      return out;
    }

    // partial injections of atoms into targets, other atoms to 1
    std::vector<Endo> partial_injections(Diamond d, Params const& targets,
                                         bool total) {
      int const            m = d.atom_count();
      std::vector<Element> img(m + 1, Element::top());
      std::vector<bool>    used(targets.size(), false);
      std::vector<Endo>    out;
      auto rec = [&](auto& self, int pos) -> void {
        if (pos == m) {
          out.emplace_back(d, img);
          return;
        }
        if (!total) {
          img[pos] = Element::top();
          self(self, pos + 1);
        }
        for (std::size_t t = 0; t < targets.size(); ++t) {
          if (!used[t]) {
            used[t]  = true;
            img[pos] = Element::atom(targets[t]);
            self(self, pos + 1);
            used[t] = false;
          }
        }
      };
      rec(rec, 0);
      return out;
    }

    Params all_atoms(Diamond d) {
      Params a;
      for (int k = 1; k <= d.atom_count(); ++k) {
        a.push_back(k);
      }
      return a;
    }

    std::vector<Endo> f_reg(Diamond d) {
      return partial_injections(d, all_atoms(d), false);
    }

    std::vector<Endo> f_perm(Diamond d) {
      return partial_injections(d, all_atoms(d), true);
    }

    std::vector<Endo> f_e0i(Diamond d, int i) {
      std::vector<Endo> out{zero_map(d), constant_map(d, i)};
      for (int j = 1; j <= d.atom_count(); ++j) {
        out.push_back(alpha0(d, i, j));
      }
      return out;
    }

    std::vector<Endo> f_ei1(Diamond d, int i) {
      std::vector<Endo> out{constant_map(d, i), top_map(d)};
      for (int j = 1; j <= d.atom_count(); ++j) {
        out.push_back(psi(d, j, i));
      }
      return out;
    }

    std::vector<Endo> f_eset(Diamond d, Params const& a) {
      std::vector<Endo> out{zero_map(d)};
      for (int k : a) {
        out.push_back(constant_map(d, k));
        for (int l = 1; l <= d.atom_count(); ++l) {
          out.push_back(alpha0(d, k, l));
        }
      }
      for (int l = 1; l <= d.atom_count(); ++l) {
        out.push_back(phi(d, l));
      }
      return concat({out, partial_injections(d, a, false)});
    }

    std::vector<Endo> f_siset(Diamond d, Params const& a) {
      std::vector<Endo> out = f_e01_star(d);
      for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
        Params b;
        for (std::size_t t = 0; t < a.size(); ++t) {
          if (mask & (1u << t)) {
            b.push_back(a[t]);
          }
        }
        out.push_back(identity_on(d, b));
      }
      return concat({out});
    }

    std::vector<Endo> f_si(Diamond d) {
      return concat({f_idreg(d), f_e01_star(d)});
    }

    std::vector<Endo> f_s72(Diamond d) {
      // a = a1, b = a2 in a diamond of order 5
      auto const a = Element::atom(1), b = Element::atom(2), t = Element::top();
      std::vector<std::vector<Element>> rows = {
          {t, t, t, t}, {a, t, t, t}, {t, a, t, t}, {t, t, a, t},
          {b, t, t, t}, {t, b, t, t}, {t, t, b, t}, {a, b, t, t},
          {b, a, t, t}, {a, t, b, t}, {b, t, a, t}, {t, a, b, t},
          {t, b, a, t},
      };
      std::vector<Endo> out;
      for (auto const& r : rows) {
        out.emplace_back(d, r);
      }
      return out;
    }

    std::vector<Endo> f_i72(Diamond d) {
      return {top_map(d), psi(d, 3, 1), psi(d, 3, 2)};
    }

    Params without(Params a, int k) {
      std::erase(a, k);
      return a;
    }

    std::vector<SubsetDef> const& subset_defs() {
      using P                                  = ParamKind;
      static std::vector<SubsetDef> const defs = {
          {{"E", P::None, "every endomorphism", true, 0},
           [](Endo const&, Params const&) { return true; },
           [](Diamond d, Params const&) { return enumerate_all(d); }},
          {{"AC", P::None, "almost constant maps", true, 0},
           [](Endo const& e, Params const&) { return is_constant(e); },
           [](Diamond d, Params const&) { return f_ac(d); }},
          {{"E01", P::None, "image inside {0,1}", true, 0},
           [](Endo const& e, Params const&) { return is_e01(e); },
           [](Diamond d, Params const&) { return f_e01(d); }},
          {{"E01*", P::None, "image inside {0,1}, zero map removed", true, 0},
           [](Endo const& e, Params const&) {
             return is_e01(e) && e != zero_map(e.diamond());
           },
           [](Diamond d, Params const&) { return f_e01_star(d); }},
          {{"Ea1", P::None, "psi maps with 0 and 1", true, 0},
           [](Endo const& e, Params const&) { return is_ea1(e); },
           [](Diamond d, Params const&) { return f_ea1(d); }},
          {{"AA", P::None, "almost absorbing maps with 0 and 1", true, 0},
           [](Endo const& e, Params const&) { return is_aa(e); },
           [](Diamond d, Params const&) {
             return concat({f_e01(d), f_ea1(d)});
           }},
          {{"IDAA", P::None, "nonzero idempotents of AA", true, 0},
           [](Endo const& e, Params const&) {
             return is_aa(e) && idempotent(e) && e != zero_map(e.diamond());
           },
           [](Diamond d, Params const&) { return f_idaa(d); }},
          {{"Reg", P::None, "regular maps: 1 fixed, no atom to 0", true, 0},
           [](Endo const& e, Params const&) { return regular(e); },
           [](Diamond d, Params const&) { return f_reg(d); }},
          {{"P", P::None, "permutations of the atoms", true, 0},
           [](Endo const& e, Params const&) { return permutation(e); },
           [](Diamond d, Params const&) { return f_perm(d); }},
          {{"MReg", P::None, "regular maps sending some atom to 1", true, 0},
           [](Endo const& e, Params const&) {
             return regular(e) && some_atom_to_top(e);
           },
           [](Diamond d, Params const&) {
             auto out = f_reg(d);
             std::erase_if(out, [](Endo const& e) { return permutation(e); });
             return out;
           }},
          {{"MAX", P::None, "everything except the permutations", true, 0},
           [](Endo const& e, Params const&) {
             return e == zero_map(e.diamond()) || e.at_top().is_atom()
                    || some_atom_to_top(e);
           },
           [](Diamond d, Params const&) {
             auto out = enumerate_all(d);
             std::erase_if(out, [](Endo const& e) { return permutation(e); });
             return out;
           }},
          {{"IDReg", P::None, "idempotent regular maps", true, 0},
           [](Endo const& e, Params const&) {
             return regular(e) && idempotent(e);
           },
           [](Diamond d, Params const&) { return f_idreg(d); }},
          {{"IDRegHat", P::None, "IDReg together with AC", true, 0},
           [](Endo const& e, Params const&) {
             return (regular(e) && idempotent(e)) || is_constant(e);
           },
           [](Diamond d, Params const&) {
             return concat({f_idreg(d), f_ac(d)});
           }},
          {{"IReg", P::None, "the constant 1 and every psi_{i,i}", true, 0},
           [](Endo const& e, Params const&) {
             if (e == top_map(e.diamond())) {
               return true;
             }
             if (!is_psi(e)) {
               return false;
             }
             for (int k = 1; k <= e.diamond().atom_count(); ++k) {
               if (e.at_atom(k).is_atom()) {
                 return e.at_atom(k) == Element::atom(k);
               }
             }
             return false;
           },
           [](Diamond d, Params const&) { return f_ireg(d); }},
          {{"Eai", P::Index, "image inside the chain {0,a_i,1}", true, 0},
           [](Endo const& e, Params const& p) { return within_set(e, p); },
           [](Diamond d, Params const& p) {
             return concat({f_e0i(d, p[0]), f_ei1(d, p[0]), f_e01(d)});
           }},
          {{"E0i", P::Index, "maps into {0,a_i,1} not fixing 1", true, 0},
           [](Endo const& e, Params const& p) {
             return within_set(e, p) && !e.fixes_top();
           },
           [](Diamond d, Params const& p) { return f_e0i(d, p[0]); }},
          {{"Ei1", P::Index, "maps into {a_i,1} on the atoms", true, 0},
           [](Endo const& e, Params const& p) {
             return within_set(e, p) && no_zero_image(e);
           },
           [](Diamond d, Params const& p) { return f_ei1(d, p[0]); }},
          {{"Z0i", P::Index, "zero map and the nilpotent for a_i", true, 0},
           [](Endo const& e, Params const& p) {
             return e == zero_map(e.diamond())
                    || e == nilpotent(e.diamond(), p[0]);
           },
           [](Diamond d, Params const& p) {
             return std::vector<Endo>{zero_map(d), nilpotent(d, p[0])};
           }},
          {{"Mi1", P::Index, "Ei1 without psi_{i,i}", true, 0},
           [](Endo const& e, Params const& p) {
             return within_set(e, p) && no_zero_image(e)
                    && e != psi(e.diamond(), p[0], p[0]);
           },
           [](Diamond d, Params const& p) {
             auto out = f_ei1(d, p[0]);
             std::erase(out, psi(d, p[0], p[0]));
             return out;
           }},
          {{"Eset", P::IndexSet, "image inside {0,1} and the given atoms",
            true, 0},
           [](Endo const& e, Params const& p) { return within_set(e, p); },
           [](Diamond d, Params const& p) { return f_eset(d, p); }},
          {{"R", P::Index, "E01 together with every psi_{j,i}", true, 0},
           [](Endo const& e, Params const& p) {
             return is_e01(e)
                    || (is_psi(e) && within_set(e, p));
           },
           [](Diamond d, Params const& p) {
             std::vector<Endo> psis;
             for (int j = 1; j <= d.atom_count(); ++j) {
               psis.push_back(psi(d, j, p[0]));
             }
             return concat({f_e01(d), psis});
           }},
          {{"SI", P::None, "stable idempotents", true, 0},
           [](Endo const& e, Params const&) { return stable_idempotent(e); },
           [](Diamond d, Params const&) { return f_si(d); }},
          {{"SI", P::Index, "the three maps phi_i, psi_{i,i}, 1", true, 0},
           [](Endo const& e, Params const& p) {
             Diamond d = e.diamond();
             return e == phi(d, p[0]) || e == psi(d, p[0], p[0])
                    || e == top_map(d);
           },
           [](Diamond d, Params const& p) {
             return std::vector<Endo>{phi(d, p[0]), psi(d, p[0], p[0]),
                                      top_map(d)};
           }},
          {{"SIset", P::IndexSet, "stable idempotents inside Eset", true, 0},
           [](Endo const& e, Params const& p) {
             return stable_idempotent(e) && within_set(e, p);
           },
           [](Diamond d, Params const& p) { return f_siset(d, p); }},
          {{"J", P::IndexSet, "SIset without the identity on the set", true,
            0},
           [](Endo const& e, Params const& p) {
             return stable_idempotent(e) && within_set(e, p)
                    && e != identity_on(e.diamond(), p);
           },
           [](Diamond d, Params const& p) {
             auto out = f_siset(d, p);
             std::erase(out, identity_on(d, p));
             return out;
           }},
          {{"SIminus", P::None, "stable idempotents except the identity",
            true, 0},
           [](Endo const& e, Params const&) {
             return stable_idempotent(e) && e != identity_map(e.diamond());
           },
           [](Diamond d, Params const&) {
             auto out = f_si(d);
             std::erase(out, identity_map(d));
             return out;
           }},
          {{"S", P::Index, "phi_1..phi_{k-1} and the constant 1", true, 0},
           [](Endo const& e, Params const& p) {
             if (e == top_map(e.diamond())) {
               return true;
             }
             for (int i = 1; i < p[0]; ++i) {
               if (e == phi(e.diamond(), i)) {
                 return true;
               }
             }
             return false;
           },
           [](Diamond d, Params const& p) {
             std::vector<Endo> out{top_map(d)};
             for (int i = 1; i < p[0]; ++i) {
               out.push_back(phi(d, i));
             }
             return out;
           }},
          {{"S7.2", P::None, "regular maps into {0,a1,a2,1}, order 5 only",
            true, 5},
           [](Endo const& e, Params const&) {
             return regular(e) && within_set(e, {1, 2});
           },
           [](Diamond d, Params const&) { return f_s72(d); }},
          {{"I7.2", P::None, "the constant 1, psi_{3,1}, psi_{3,2}; order 5",
            true, 5},
           [](Endo const& e, Params const&) {
             Diamond d = e.diamond();
             return e == top_map(d) || e == psi(d, 3, 1) || e == psi(d, 3, 2);
           },
           [](Diamond d, Params const&) { return f_i72(d); }},
          {{"I7.5", P::IndexSet, "union of Eset over A minus one atom", true,
            0},
           [](Endo const& e, Params const& p) {
             for (int j : p) {
               if (within_set(e, without(p, j))) {
                 return true;
               }
             }
             return false;
           },
           [](Diamond d, Params const& p) {
             std::vector<std::vector<Endo>> parts;
             for (int j : p) {
               parts.push_back(f_eset(d, without(p, j)));
             }
             return concat(std::move(parts));
           }},
      };
      return defs;
    }

    std::vector<FamilyInfo> const& element_infos() {
      using P                                   = ParamKind;
      static std::vector<FamilyInfo> const info = {
          {"Zero", P::None, "the zero map", false, 0},
          {"One", P::None, "the constant map to 1", false, 0},
          {"Identity", P::None, "the identity map", false, 0},
          {"Const", P::Index, "every nonzero point to a_i", false, 0},
          {"Phi", P::Index, "a_i to 0, other atoms to 1", false, 0},
          {"Psi", P::Pair, "a_i to a_j, other atoms to 1", false, 0},
          {"Alpha", P::Pair, "a_j to 0, the rest to a_i", false, 0},
          {"Nil", P::Index, "a_i to 0, the rest to a_i", false, 0},
          {"Id", P::IndexSet, "identity on the given atoms, others to 1",
           false, 0},
      };
      return info;
    }

    bool accepts(ParamKind k, Params const& p) {
      switch (k) {
        case ParamKind::None:
          return p.empty();
        case ParamKind::Index:
          return p.size() == 1;
        case ParamKind::Pair:
          return p.size() == 2;
        case ParamKind::IndexSet:
          return true;
      }
      return false;
    }

    SubsetDef const& find_subset(FamilySpec const& spec) {
      bool known = false;
      for (auto const& def : subset_defs()) {
        if (def.info.name == spec.name) {
          known = true;
          if (accepts(def.info.params, spec.params)) {
            return def;
          }
        }
      }
      if (known) {
        throw BadFamily("wrong number of parameters for '" + spec.name
                        + "'");
      }
      throw BadFamily("unknown subset family '" + spec.name + "'");
    }

    void check_params(Diamond d, FamilySpec const& spec, FamilyInfo const& info) {
      if (info.only_order != 0 && d.order() != info.only_order) {
        throw BadFamily("family '" + spec.name + "' is defined only for order "
                        + std::to_string(info.only_order));
      }
      if (spec.name == "S") {
        int k = spec.params.front();
        if (k < 2 || k > d.order() - 1) {
          throw BadFamily("S:k needs 2 <= k <= " + std::to_string(d.order() - 1));
        }
        return;
      }
      for (int i : spec.params) {
        check_atom(d, i);
      }
      if (info.params == ParamKind::IndexSet) {
        Params sorted = spec.params;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          throw BadFamily("repeated atom in '" + spec.to_string() + "'");
        }
      }
      if (spec.name == "I7.5" && spec.params.size() < 3) {
        throw BadFamily("I7.5 needs at least three atoms");
      }
    }

  }  // namespace

  std::span<FamilyInfo const> element_families() {
    return element_infos();
  }

  std::span<FamilyInfo const> subset_families() {
    static std::vector<FamilyInfo> const infos = [] {
      std::vector<FamilyInfo> out;
      for (auto const& def : subset_defs()) {
        out.push_back(def.info);
      }
      return out;
    }();
    return infos;
  }

  Endo make_element(Diamond d, FamilySpec const& spec) {
    auto const& infos = element_infos();
    auto        it    = std::find_if(infos.begin(), infos.end(),
                                     [&](auto const& i) { return i.name == spec.name; });
    if (it == infos.end()) {
      throw BadFamily("unknown element family '" + spec.name + "'");
    }
    if (!accepts(it->params, spec.params)) {
      throw BadFamily("wrong number of parameters for '" + spec.name + "'");
    }
    check_params(d, spec, *it);
    auto const& p = spec.params;
    if (spec.name == "Zero") {
      return zero_map(d);
    }
    if (spec.name == "One") {
      return top_map(d);
    }
    if (spec.name == "Identity") {
      return identity_map(d);
    }
    if (spec.name == "Const") {
      return constant_map(d, p[0]);
    }
    if (spec.name == "Phi") {
      return phi(d, p[0]);
    }
    if (spec.name == "Psi") {
      return psi(d, p[0], p[1]);
    }
    if (spec.name == "Alpha") {
      return alpha0(d, p[0], p[1]);
    }
    if (spec.name == "Nil") {
      return nilpotent(d, p[0]);
    }
    return identity_on(d, p);
  }

  void check_spec(Diamond d, FamilySpec const& spec) {
    check_params(d, spec, find_subset(spec).info);
  }

  Subset make_subset(EndoSemiring const& s, FamilySpec const& spec) {
    auto const& def = find_subset(spec);
    check_params(s.diamond(), spec, def.info);
    std::vector<Index> members;
    for (Index i = 0; i < s.order(); ++i) {
      if (def.pred(s.element(i), spec.params)) {
        members.push_back(i);
      }
    }
    return Subset(s.semiring(), std::move(members));
  }

  std::optional<std::vector<Endo>> formula_members(Diamond           d,
                                                   FamilySpec const& spec) {
    auto const& def = find_subset(spec);
    check_params(d, spec, def.info);
    if (!def.formula) {
      return std::nullopt;
    }
    auto out = def.formula(d, spec.params);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<Subset> formula_subset(EndoSemiring const& s,
                                       FamilySpec const&   spec) {
    auto members = formula_members(s.diamond(), spec);
    if (!members) {
      return std::nullopt;
    }
    std::vector<Index> idx;
    for (auto const& e : *members) {
      idx.push_back(s.index_of(e));
    }
    return Subset(s.semiring(), std::move(idx));
  }

  //////////////////////////////////////////////////////////////////////////
  // Embedding
  //////////////////////////////////////////////////////////////////////////

  Endo embed(Diamond dn, Endo const& alpha4, int p, int q) {
    if (alpha4.diamond().order() != 4) {
      throw BadFamily("the embedded map must act on the order-4 diamond");
    }
    check_atom(dn, p);
    check_atom(dn, q);
    if (p == q) {
      throw BadFamily("the two atoms of the embedding must differ");
    }
    auto rename = [&](Element x) {
      if (x.is_atom()) {
        return Element::atom(x.atom_index() == 1 ? p : q);
      }
      return x;
    };
    Element const at_a   = rename(alpha4.at_atom(1));
    Element const at_b   = rename(alpha4.at_atom(2));
    Element const at_one = rename(alpha4.at_top());
    return build(
        dn,
        [&](int k) { return k == p ? at_a : k == q ? at_b : at_one; },
        at_one);
  }

  std::vector<Index> phi_embedding(EndoSemiring const& s4,
                                   EndoSemiring const& sn,
                                   int                 p,
                                   int                 q) {
    if (s4.diamond().order() != 4) {
      throw BadFamily("the source of the embedding must have order 4");
    }
    std::vector<Index> map;
    map.reserve(s4.order());
    for (auto const& e : s4.elements()) {
      map.push_back(sn.index_of(embed(sn.diamond(), e, p, q)));
    }
    return map;
  }

}  // namespace diamond
