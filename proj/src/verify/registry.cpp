#include <algorithm>
#include <array>
#include <chrono>

#include "check.hpp"

namespace diamond {

  namespace {

    using detail::Check;

    constexpr std::string_view kIdeals =
        "no proper nontrivial ideal; congruence outcome reported alongside";

    struct Entry {
      ClaimInfo info;
      void (*run)(Check&);
    };

    std::vector<Entry> const& entries() {
      using namespace detail;
      static std::vector<Entry> const table = {
          {{"Prop 3.1", "every endomorphism is isotone and falls under the case analysis of zero, almost constant and regular shapes", 4, 0, {"E"}, {}}, prop_3_1},
          {{"Example 3.2", "the order-4 semiring has 16 elements, the printed tables, and is simple", 4, 4, {"E"}, "both predicates, checked directly"}, example_3_2},
          {{"Prop 3.3", "AC is a right ideal", 4, 0, {"AC"}, {}}, prop_3_3},
          {{"Lemma 3.5", "E01 is a subsemiring with zero; the constant 1 is an infinity of E01 without zero", 4, 0, {"E01", "E01*"}, {}}, lemma_3_5},
          {{"Cor 3.6", "E01 is a Viterbi semiring", 4, 0, {"E01"}, {}}, cor_3_6},
          {{"Lemma 3.7", "Ea1 is a subsemiring with zero; psi products compose", 4, 0, {"Ea1"}, {}}, lemma_3_7},
          {{"Thm 3.8", "AA is a subsemiring with zero, infinity on AA without zero, and E01 is an ideal of AA", 4, 0, {"AA", "E01"}, {}}, thm_3_8},
          {{"Remark 3.9", "AA is not an ideal of E", 4, 0, {"AA"}, {}}, remark_3_9},
          {{"Prop 3.10", "the idempotents of AA form a subsemiring", 4, 0, {"AA", "IDAA"}, {}}, prop_3_10},
          {{"Nilpotent census", "the nilpotents are exactly the n-2 maps alpha_{0,i}", 4, 0, {"Nil"}, {}}, nilpotent_census},
          {{"Prop 4.1", "a map that is not almost constant is a zero-divisor iff 0 is in its image", 4, 0, {"AC"}, {}}, prop_4_1},
          {{"Prop 4.2", "Reg is a subsemiring without zero; the identity is additively and multiplicatively neutral", 4, 0, {"Reg"}, {}}, prop_4_2},
          {{"Permutation group", "the invertible elements form a group isomorphic to the symmetric group on n-2 letters", 4, 0, {"P"}, {}}, permutation_group},
          {{"Prop 4.3", "MReg is a maximal ideal of Reg", 4, 0, {"Reg", "MReg"}, {}}, prop_4_3},
          {{"Prop 4.4", "MAX is a maximal ideal of E", 5, 0, {"MAX"}, {}}, prop_4_4},
          {{"Cor 4.5", "E is simple only for n = 4", 4, 0, {"MAX"}, kIdeals}, cor_4_5},
          {{"Prop 4.6", "IDReg is a commutative subsemiring with equal tables; IReg is an ideal of it", 4, 0, {"IDReg", "IReg", "Id"}, {}}, prop_4_6},
          {{"Prop 5.1", "each E(a_i) is a subsemiring with zero", 4, 0, {"Eai"}, {}}, prop_5_1},
          {{"Order 3(n-1)", "each E(a_i) has 3(n-1) elements", 4, 0, {"Eai"}, {}}, order_chain},
          {{"Prop 5.2", "E0i is a subsemiring of E(a_i) with zero; {0, alpha_{0,i}} is a proper ideal of it", 4, 0, {"E0i", "Z0i"}, {}}, prop_5_2},
          {{"Prop 5.3", "Ei1 is a subsemiring without zero; Ei1 minus psi_{i,i} is a maximal ideal of it", 4, 0, {"Ei1", "Mi1"}, {}}, prop_5_3},
          {{"Prop 5.4", "E01 is the intersection of every E(a_i) and a subsemiring of each", 4, 0, {"E01", "Eai"}, {}}, prop_5_4},
          {{"Cor 5.5", "E(a_i) is the union of E0i, Ei1 and E01", 4, 0, {"Eai", "E0i", "Ei1", "E01"}, {}}, cor_5_5},
          {{"Thm 5.6", "each E(a_i) is simple", 4, 0, {"Eai"}, kIdeals}, thm_5_6},
          {{"Prop 5.8", "R is a subsemiring of E(a_i) that is not simple; E01 is an ideal of R", 4, 0, {"R", "E01"}, kIdeals}, prop_5_8},
          {{"Prop 5.9", "E(a_1..a_k) is a subsemiring with zero", 4, 0, {"Eset"}, {}}, prop_5_9},
          {{"Idempotent closure", "idempotents are not closed under products; non-stable idempotents are not closed under + or *", 4, 0, {}, {}}, idempotent_closure},
          {{"Lemma 6.1", "SI minus E01* is the set of maps sending each atom to itself or 1", 4, 0, {"SI", "E01*"}, {}}, lemma_6_1},
          {{"Prop 6.2", "SI is a subsemiring, E01* an ideal of it and SI minus the identity a maximal ideal", 4, 0, {"SI", "E01*", "SIminus"}, {}}, prop_6_2},
          {{"Prop 6.3", "IDRegHat is a subsemiring with zero and AC is an ideal of it", 4, 0, {"IDRegHat", "AC"}, {}}, prop_6_3},
          {{"Example 6.4", "{phi_i, psi_{i,i}, 1} is a simple semiring of order 3 with the printed tables", 4, 0, {"SI", "SIset"}, "congruence; the set has the proper ideal {phi_i, 1}"}, example_6_4},
          {{"Prop 6.5", "SI(A) has an identity i(A), no zero, no infinity, and SI(A) minus i(A) is a maximal ideal", 4, 0, {"SIset", "J", "Id"}, {}}, prop_6_5},
          {{"S_k chain", "S_2 < S_3 < ... is a chain of simple semirings without zero", 4, 0, {"S"}, kIdeals}, s_chain},
          {{"Thm 7.1", "each E(a,b) is a simple subsemiring", 5, 0, {"Eset"}, kIdeals}, thm_7_1},
          {{"Remark 7.2", "the 13-element S inside E(a1,a2) is a subsemiring with ideal I and is not simple", 5, 5, {"S7.2", "I7.2", "Eset"}, kIdeals}, remark_7_2},
          {{"Prop 7.3", "E(a,b) contains a copy of the order-4 semiring", 5, 0, {"Eset"}, {}}, prop_7_3},
          {{"Cor 7.4", "E(a,b) has a simple subsemiring of order 16", 5, 0, {"Eset"}, kIdeals}, cor_7_4},
          {{"Thm 7.5", "for 2 < k <= n-2 the union of E(A_j) is a maximal ideal of E(A)", 5, 0, {"I7.5", "Eset", "MAX"}, {}}, thm_7_5},
      };
      return table;
    }

    Entry const& lookup(std::string_view id) {
      auto const& t = entries();
      auto it = std::find_if(t.begin(), t.end(),
                             [&](Entry const& e) { return e.info.id == id; });
      if (it == t.end()) {
        throw UnknownClaim("unknown claim '" + std::string(id) + "'");
      }
      return *it;
    }

    constexpr std::array<std::string_view, 35> kNumbered = {
        "Prop 3.1",   "Example 3.2", "Prop 3.3",  "Remark 3.4", "Lemma 3.5",
        "Cor 3.6",    "Lemma 3.7",   "Thm 3.8",   "Remark 3.9", "Prop 3.10",
        "Prop 4.1",   "Prop 4.2",    "Prop 4.3",  "Prop 4.4",   "Cor 4.5",
        "Prop 4.6",   "Prop 5.1",    "Prop 5.2",  "Prop 5.3",   "Prop 5.4",
        "Cor 5.5",    "Thm 5.6",     "Remark 5.7", "Prop 5.8",  "Prop 5.9",
        "Lemma 6.1",  "Prop 6.2",    "Prop 6.3",  "Example 6.4", "Prop 6.5",
        "Thm 7.1",    "Remark 7.2",  "Prop 7.3",  "Cor 7.4",    "Thm 7.5",
    };

    // comparisons with outside results, nothing to compute
    constexpr std::array<std::string_view, 2> kOutOfScope = {"Remark 3.4",
                                                             "Remark 5.7"};

  }  // namespace

  std::string to_string(Status s) {
    switch (s) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail";
      case Status::MismatchNoted: return "mismatch-noted";
      case Status::Skip: return "skip";
    }
    return "?";
  }

  bool ClaimReport::same_outcome(ClaimReport const& that) const {
    return id == that.id && n == that.n && status == that.status
           && summary == that.summary && witnesses == that.witnesses
           && findings == that.findings;
  }

  std::span<ClaimInfo const> registry() {
    static std::vector<ClaimInfo> const infos = [] {
      std::vector<ClaimInfo> out;
      for (auto const& e : entries()) {
        out.push_back(e.info);
      }
      return out;
    }();
    return infos;
  }

  std::span<std::string_view const> numbered_statements() {
    return kNumbered;
  }

  std::span<std::string_view const> out_of_scope() {
    return kOutOfScope;
  }

  EndoSemiring const& Session::semiring(int n) {
    auto it = _cache.find(n);
    if (it == _cache.end()) {
      auto built = std::make_unique<EndoSemiring>(
          EndoSemiring::build(Diamond(n), _cap));
      it = _cache.emplace(n, std::move(built)).first;
    }
    return *it->second;
  }

  ClaimReport run_claim(Session& session, std::string_view id, int n) {
    Entry const& e = lookup(id);
    ClaimReport  r;
    r.id = std::string(e.info.id);
    r.n  = n;
    if (n < e.info.min_n || (e.info.max_n != 0 && n > e.info.max_n)) {
      r.status  = Status::Skip;
      r.summary = "not stated for n = " + std::to_string(n);
      return r;
    }
    int const limit = std::min(session.cap(), kSemiringHardCap);
    if (n > limit) {
      throw CapExceeded("n = " + std::to_string(n) + " is above the cap "
                        + std::to_string(limit));
    }
    auto  t0 = std::chrono::steady_clock::now();
    Check c(session, n, r);
    e.run(c);
    detail::finish(c);
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
  }

  std::vector<ClaimReport> run_all(Session&                        session,
                                   std::vector<int> const&         ns,
                                   std::vector<std::string> const& filter) {
    for (auto const& id : filter) {
      lookup(id);
    }
    std::vector<int> sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<ClaimReport> out;
    for (auto const& e : entries()) {
      if (!filter.empty()
          && std::find(filter.begin(), filter.end(), e.info.id)
                 == filter.end()) {
        continue;
      }
      for (int n : sorted) {
        out.push_back(run_claim(session, e.info.id, n));
      }
    }
    return out;
  }

  Summary summarize(std::vector<ClaimReport> const& reports) {
    Summary s;
    for (auto const& r : reports) {
      switch (r.status) {
        case Status::Pass: ++s.pass; break;
        case Status::Fail: ++s.fail; break;
        case Status::MismatchNoted: ++s.mismatch; break;
        case Status::Skip: ++s.skip; break;
      }
    }
    return s;
  }

}  // namespace diamond
