#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diamond/algebra.hpp"
#include "diamond/families.hpp"
#include "diamond/verify.hpp"

namespace diamond::detail {

  // Accumulates one claim run: each expect() is a check, failed checks set
  // the status and leave a witness behind.
  class Check {
   public:
    Check(Session& session, int n, ClaimReport& report);

    Session& session() {
      return _session;
    }
    int n() const {
      return _n;
    }
    int atoms() const {
      return _n - 2;
    }
    Diamond const& d() const {
      return _e.diamond();
    }
    EndoSemiring const&   E() const {
      return _e;
    }
    FiniteSemiring const& S() const {
      return _e.semiring();
    }

    Subset fam(std::string const& spec) const;
    Index  el(std::string const& spec) const;
    Index  el(Endo const& e) const {
      return _e.index_of(e);
    }
    std::string show(Index x) const {
      return S().label(x);
    }

    bool expect(bool ok, std::string what, std::vector<std::string> items = {});
    void evidence(std::string label, std::vector<std::string> items);
    void note(std::string finding);
    void mismatch(std::string label, std::vector<std::string> items);

    // Subsemiring test with the offending product or sum as witness.
    bool closed(Subset const& sub, std::string const& name);
    std::optional<Restriction> restrict(Subset const& sub,
                                        std::string const& name);

    // Two-sided ideal of the restricted ambient.
    bool two_sided(FiniteSemiring const& amb, Subset const& inner,
                   std::string const& what);
    bool maximal(FiniteSemiring const& amb, Subset const& inner,
                 std::string const& what);

    // Zero / infinity / identity of a restricted semiring, compared against
    // an expected element of E (nullopt: expected absent).
    bool zero_is(FiniteSemiring const& s, std::vector<Index> const& emb,
                 std::optional<Index> expected, std::string const& name);
    bool infinity_is(FiniteSemiring const& s, std::vector<Index> const& emb,
                     std::optional<Index> expected, std::string const& name);
    bool identity_is(FiniteSemiring const& s, std::vector<Index> const& emb,
                     std::optional<Index> expected, std::string const& name);

    // Status follows ideal-simplicity; the congruence outcome is evidence
    // when it agrees and a finding when it does not.
    void simple(FiniteSemiring const& s, std::string const& name,
                bool expected = true);
    // The same with the roles swapped: congruences decide.
    void simple_by_congruence(FiniteSemiring const& s,
                              std::string const&    name);

    bool subset_eq(std::vector<Index> const& got,
                   std::vector<Index> const& want, std::string const& what);

    std::vector<std::string> show_all(std::span<Index const> xs) const;
    std::string describe(FiniteSemiring const& s, ClosureWitness const& w) const;

    // Indices of inner inside the restriction amb (inner must be a subset).
    Subset local(Restriction const& amb, Subset const& inner) const;

   private:
    Session&            _session;
    int                 _n;
    EndoSemiring const& _e;
    ClaimReport&        _r;
    std::vector<std::string> _failed;

    friend void finish(Check&);
  };

  // Writes the summary line once the claim body has run.
  void finish(Check& c);

  // Claim bodies, split by topic.
  void prop_3_1(Check&);
  void example_3_2(Check&);
  void prop_3_3(Check&);
  void lemma_3_5(Check&);
  void cor_3_6(Check&);
  void lemma_3_7(Check&);
  void thm_3_8(Check&);
  void remark_3_9(Check&);
  void prop_3_10(Check&);

  void nilpotent_census(Check&);
  void prop_4_1(Check&);
  void prop_4_2(Check&);
  void permutation_group(Check&);
  void prop_4_3(Check&);
  void prop_4_4(Check&);
  void cor_4_5(Check&);
  void prop_4_6(Check&);

  void prop_5_1(Check&);
  void order_chain(Check&);
  void prop_5_2(Check&);
  void prop_5_3(Check&);
  void prop_5_4(Check&);
  void cor_5_5(Check&);
  void thm_5_6(Check&);
  void prop_5_8(Check&);
  void prop_5_9(Check&);

  void idempotent_closure(Check&);
  void lemma_6_1(Check&);
  void prop_6_2(Check&);
  void prop_6_3(Check&);
  void example_6_4(Check&);
  void prop_6_5(Check&);

  void s_chain(Check&);
  void thm_7_1(Check&);
  void remark_7_2(Check&);
  void prop_7_3(Check&);
  void cor_7_4(Check&);
  void thm_7_5(Check&);

  std::string spec(std::string const& name, std::vector<int> const& params);
  std::string join(std::vector<int> const& xs);   // "1,2,3"
  // Every subset of {1..m} of the given size, in lexicographic order.
  std::vector<std::vector<int>> subsets_of_size(int m, int k);

}  // namespace diamond::detail
