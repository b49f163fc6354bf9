#include <algorithm>
#include <set>

#include "check.hpp"

#include "diamond/render.hpp"

namespace diamond::detail {

  namespace {

    std::vector<Index> minus(Subset const& s, Index x) {
      std::vector<Index> out;
      for (Index y : s.indices()) {
        if (y != x) {
          out.push_back(y);
        }
      }
      return out;
    }

    std::string long_form(Diamond d4, std::string const& t) {
      try {
        return parse_short(d4, t).to_string();
      } catch (Error const&) {
        return t;
      }
    }

  }  // namespace

  void prop_3_1(Check& c) {
    Diamond const d   = c.d();
    auto const    pts = d.elements();
    int const     m   = c.atoms();

    std::vector<std::string> bad_iso, bad_b, bad_c, bad_d;
    for (Endo const& e : c.E().elements()) {
      for (Element x : pts) {
        for (Element y : pts) {
          if (d.leq(x, y) && !d.leq(e(x), e(y))) {
            bad_iso.push_back(e.to_string());
          }
        }
      }
      Element const top = e.at_top();
      for (int i = 1; i <= m; ++i) {
        Element const v = e.at_atom(i);
        if (v.is_bottom() && !top.is_bottom()) {
          for (int j = 1; j <= m; ++j) {
            if (j != i && e.at_atom(j) != top) {
              bad_b.push_back(e.to_string());
            }
          }
        }
        if (v.is_atom() && top.is_atom()) {
          int zeros = 0;
          bool ok   = top == v;
          for (int j = 1; j <= m; ++j) {
            Element w = e.at_atom(j);
            zeros += w.is_bottom() ? 1 : 0;
            ok = ok && (w == v || w.is_bottom());
          }
          if (!ok || zeros > 1) {
            bad_c.push_back(e.to_string());
          }
        }
        if (v.is_atom() && top.is_top()) {
          std::set<int> seen;
          bool          ok = true;
          for (int j = 1; j <= m; ++j) {
            Element w = e.at_atom(j);
            if (w.is_bottom()) {
              ok = false;
            } else if (w.is_atom()) {
              ok = ok && seen.insert(w.atom_index()).second;
            }
          }
          if (!ok) {
            bad_d.push_back(e.to_string());
          }
        }
      }
    }
    c.expect(bad_iso.empty(), "every endomorphism is isotone", bad_iso);
    c.expect(bad_b.empty(),
             "an atom sent to 0 forces every other atom to the value at 1",
             bad_b);
    c.expect(bad_c.empty(),
             "value a_k at an atom and an atom at 1 force a_k at 1 and a_k "
             "or a single 0 elsewhere",
             bad_c);
    c.expect(bad_d.empty(),
             "value 1 at 1 with an atom value makes the atom values "
             "injective and nonzero",
             bad_d);

    // closed-form census
    long long count = 1 + static_cast<long long>(m) * (m + 1) + m;
    for (int k = 0; k <= m; ++k) {
      long long binom = 1, fact = 1;
      for (int t = 1; t <= k; ++t) {
        binom = binom * (m - t + 1) / t;
        fact *= t;
      }
      count += binom * binom * fact;
    }
    c.expect(static_cast<long long>(c.E().order()) == count,
             "order equals 1 + m(m+1) + m + sum C(m,k)^2 k! with m = n-2",
             {"order " + std::to_string(c.E().order()) + ", formula "
              + std::to_string(count)});

    if (c.n() <= kFilterMaxOrder) {
      auto brute = enumerate_by_filter(d);
      std::vector<std::string> diff;
      if (brute != c.E().elements()) {
        std::vector<Endo> a = brute, b = c.E().elements();
        for (auto const& e : a) {
          if (!std::binary_search(b.begin(), b.end(), e)) {
            diff.push_back("missed: " + e.to_string());
          }
        }
        for (auto const& e : b) {
          if (!std::binary_search(a.begin(), a.end(), e)) {
            diff.push_back("spurious: " + e.to_string());
          }
        }
      }
      c.expect(diff.empty(),
               "case-analysis enumeration equals the brute-force filter",
               diff);
      c.evidence("order", {std::to_string(brute.size())});
    }
  }

  void example_3_2(Check& c) {
    auto const& e4  = c.E();
    auto        cmp = compare_with_printed(e4);
    std::vector<std::string> printed;
    for (auto const& t : printed_order4_tables().order) {
      printed.push_back(long_form(c.d(), t));
    }
    if (!c.expect(cmp.same_elements,
                  "the 16 printed tuples are exactly the endomorphisms",
                  printed)) {
      return;
    }
    auto const& laws = e4.laws();
    c.expect(laws.exhaustive && laws.is_semiring()
                 && laws.additively_idempotent,
             "tables satisfy the semiring laws over all triples");

    auto report = [&](std::vector<CellMismatch> const& cells,
                      std::string const&               table) {
      std::vector<std::string> items;
      for (auto const& m : cells) {
        items.push_back("row " + m.row + ", column " + m.col + ": printed "
                        + m.printed + ", computed " + m.computed);
      }
      if (cells.size() > kTypoTolerance) {
        c.expect(false,
                 table + " table differs from the printed one in at most "
                     + std::to_string(kTypoTolerance) + " cells",
                 items);
      } else if (!cells.empty()) {
        c.mismatch("printed " + table + " cells that differ", items);
      }
    };
    report(cmp.add, "addition");
    report(cmp.mul, "multiplication");

    auto const& s  = e4.semiring();
    auto        cs = is_congruence_simple(s);
    std::vector<std::string> part;
    if (cs.witness) {
      part.push_back(render_partition(s, *cs.witness));
    }
    c.expect(cs.simple, "congruence-simple", part);
    auto is = is_ideal_simple(s);
    c.expect(is.simple, "no proper nontrivial ideal",
             c.show_all(is.witness));
    c.evidence(std::string("simplicity: congruence-simple ")
                   + (cs.simple ? "yes" : "no") + ", ideal-simple "
                   + (is.simple ? "yes" : "no"),
               {});
  }

  void prop_3_3(Check& c) {
    Subset ac  = c.fam("AC");
    auto   rep = ideal_kind(ac);
    c.expect(rep.kind == IdealKind::Right,
             "AC is a right ideal and not a left one (found "
                 + to_string(rep.kind) + ")");
    if (rep.left_witness) {
      c.evidence("left absorption fails",
                 {c.describe(c.S(), *rep.left_witness)});
    }
    c.evidence("AC", c.show_all(ac.indices()));
  }

  void lemma_3_5(Check& c) {
    Subset e01 = c.fam("E01");
    c.expect(static_cast<int>(e01.size()) == c.n(), "E01 has n elements",
             c.show_all(e01.indices()));
    if (auto r = c.restrict(e01, "E01")) {
      c.zero_is(r->semiring, r->embedding, c.E().zero_index(), "E01");
    }
    if (auto r = c.restrict(c.fam("E01*"), "E01*")) {
      c.infinity_is(r->semiring, r->embedding, c.E().top_index(), "E01*");
    }
  }

  void cor_3_6(Check& c) {
    if (auto r = c.restrict(c.fam("E01"), "E01")) {
      c.expect(is_viterbi(r->semiring),
               "E01 is additively idempotent with x*x + x = x");
    }
  }

  void lemma_3_7(Check& c) {
    Subset ea1 = c.fam("Ea1");
    if (auto r = c.restrict(ea1, "Ea1")) {
      c.zero_is(r->semiring, r->embedding, c.E().zero_index(), "Ea1");
    }
    Subset star(c.S(), minus(ea1, c.E().zero_index()));
    if (auto r = c.restrict(star, "Ea1 without zero")) {
      c.infinity_is(r->semiring, r->embedding, c.E().top_index(),
                    "Ea1 without zero");
    }
    int const                m   = c.atoms();
    Index const              one = c.E().top_index();
    std::vector<std::string> bad;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        Index const pij = c.el(psi(c.d(), i, j));
        for (int k = 1; k <= m; ++k) {
          for (int l = 1; l <= m; ++l) {
            Index const pkl  = c.el(psi(c.d(), k, l));
            Index const want = j == k ? c.el(psi(c.d(), i, l)) : one;
            if (c.S().mul(pij, pkl) != want) {
              bad.push_back(c.show(pij) + " * " + c.show(pkl) + " = "
                            + c.show(c.S().mul(pij, pkl)));
            }
          }
        }
      }
    }
    c.expect(bad.empty(),
             "psi_{i,j} psi_{j,l} = psi_{i,l} and psi_{i,j} psi_{k,l} = 1 "
             "for j != k",
             bad);
  }

  void thm_3_8(Check& c) {
    Subset aa = c.fam("AA");
    auto   r  = c.restrict(aa, "AA");
    if (r) {
      c.zero_is(r->semiring, r->embedding, c.E().zero_index(), "AA");
      c.two_sided(r->semiring, c.local(*r, c.fam("E01")), "E01 inside AA");
    }
    Subset star(c.S(), minus(aa, c.E().zero_index()));
    if (auto rs = c.restrict(star, "AA without zero")) {
      c.infinity_is(rs->semiring, rs->embedding, c.E().top_index(),
                    "AA without zero");
    }

    // identities quoted in the argument
    int const                m   = c.atoms();
    Index const              one = c.E().top_index();
    std::vector<std::string> sum_off, mul_off;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        Index const pij = c.el(psi(c.d(), i, j));
        for (int k = 1; k <= m; ++k) {
          Index const fk = c.el(phi(c.d(), k));
          if (c.S().add(fk, pij) != pij) {
            sum_off.push_back(c.show(fk) + " + " + c.show(pij) + " = "
                              + c.show(c.S().add(fk, pij)));
          }
          if (c.S().mul(fk, pij) != fk) {
            mul_off.push_back(c.show(fk) + " * " + c.show(pij) + " = "
                              + c.show(c.S().mul(fk, pij)));
          }
          Index const want = k == j ? fk : one;
          if (c.S().mul(pij, fk) != want) {
            mul_off.push_back(c.show(pij) + " * " + c.show(fk) + " = "
                              + c.show(c.S().mul(pij, fk)));
          }
        }
      }
    }
    if (!sum_off.empty()) {
      c.note("phi_k + psi_{i,j} = psi_{i,j} holds only for k = i; otherwise "
             "the sum is the constant 1 (" + std::to_string(sum_off.size())
             + " cases)");
      c.evidence("phi_k + psi_{i,j} differing from psi_{i,j}", sum_off);
    }
    if (!mul_off.empty()) {
      c.note("psi_{i,j} * phi_j equals phi_i, not phi_j, when i != j ("
             + std::to_string(mul_off.size()) + " quoted products differ)");
      c.evidence("quoted products that differ", mul_off);
    }
  }

  void remark_3_9(Check& c) {
    Subset aa  = c.fam("AA");
    auto   rep = ideal_kind(aa);
    std::vector<std::string> items;
    for (auto const* w : {&rep.add_witness, &rep.left_witness,
                          &rep.right_witness}) {
      if (*w) {
        items.push_back(c.describe(c.S(), **w));
      }
    }
    if (c.expect(rep.kind != IdealKind::TwoSided,
                 "AA is not a two-sided ideal of E")) {
      c.evidence("absorption fails", items);
    }
    Index const nil = c.el(nilpotent(c.d(), 1));
    Index const p11 = c.el(psi(c.d(), 1, 1));
    Index const l   = c.S().mul(nil, p11);
    Index const r   = c.S().mul(p11, nil);
    c.expect(l == nil && r == nil && !aa.contains(nil),
             "alpha_{0,1} psi_{1,1} = psi_{1,1} alpha_{0,1} = alpha_{0,1}, "
             "outside AA",
             {c.show(nil) + " * " + c.show(p11) + " = " + c.show(l),
              c.show(p11) + " * " + c.show(nil) + " = " + c.show(r)});
  }

  void prop_3_10(Check& c) {
    Subset aa   = c.fam("AA");
    Subset idaa = c.fam("IDAA");
    auto   r    = c.restrict(aa, "AA");
    if (!r) {
      return;
    }
    c.closed(c.local(*r, idaa), "IDAA inside AA");

    std::vector<Index> idem;
    for (Index x : aa.indices()) {
      if (c.S().mul(x, x) == x && x != c.E().zero_index()) {
        idem.push_back(x);
      }
    }
    c.subset_eq({idaa.indices().begin(), idaa.indices().end()}, idem,
                "IDAA equals the nonzero idempotents of AA");
    c.note("the zero map is an idempotent of AA as well; the set "
           "{phi_i, psi_{i,i}, 1} leaves it out");

    int const                m = c.atoms();
    std::vector<std::string> off;
    for (int i = 1; i <= m; ++i) {
      Index const pii = c.el(psi(c.d(), i, i));
      for (int k = 1; k <= m; ++k) {
        if (k == i) {
          continue;
        }
        Index const fk = c.el(phi(c.d(), k));
        if (c.S().add(fk, pii) != pii) {
          off.push_back(c.show(fk) + " + " + c.show(pii) + " = "
                        + c.show(c.S().add(fk, pii)));
        }
      }
    }
    if (!off.empty()) {
      c.note("phi_k + psi_{i,i} for i != k is the constant 1, not psi_{i,i}");
      c.evidence("phi_k + psi_{i,i}, i != k", off);
    }

    // x psi_{i,j} leaves IDAA
    if (m >= 2) {
      Index const p11 = c.el(psi(c.d(), 1, 1));
      Index const p12 = c.el(psi(c.d(), 1, 2));
      Index const pr  = c.S().mul(p11, p12);
      c.expect(pr == p12 && !idaa.contains(pr),
               "psi_{1,1} psi_{1,2} = psi_{1,2} lies outside IDAA, so IDAA "
               "is not an ideal of AA",
               {c.show(p11) + " * " + c.show(p12) + " = " + c.show(pr)});
    }
  }

}  // namespace diamond::detail
