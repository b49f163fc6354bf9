#include <doctest.h>

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "../oracle.hpp"
#include "diamond/render.hpp"
#include "diamond/verify.hpp"

using namespace diamond;

namespace {

  Session& shared() {
    static Session s;
    return s;
  }

  std::string where(ClaimReport const& r) {
    return r.id + " @ n=" + std::to_string(r.n) + ": " + r.summary;
  }

  oracle::Map as_map(Endo const& f) {
    oracle::Map m{0};
    for (Element x : f.images()) {
      m.push_back(static_cast<int>(f.diamond().index_of(x)));
    }
    return m;
  }

}  // namespace

TEST_CASE("registry covers every numbered statement exactly once") {
  std::multiset<std::string> ids;
  for (auto const& c : registry()) {
    ids.insert(std::string(c.id));
    CHECK(c.min_n >= 4);
    CHECK((c.max_n == 0 || c.max_n >= c.min_n));
    CHECK_FALSE(c.statement.empty());
  }
  for (auto const& id : ids) {
    CAPTURE(id);
    CHECK(ids.count(id) == 1);
  }

  std::set<std::string> expected;
  for (auto s : numbered_statements()) expected.insert(std::string(s));
  std::set<std::string> skipped;
  for (auto s : out_of_scope()) skipped.insert(std::string(s));
  CHECK(skipped == std::set<std::string>{"Remark 3.4", "Remark 5.7"});
  for (auto const& s : skipped) {
    CHECK(expected.count(s) == 1);
    expected.erase(s);
  }
  std::set<std::string> numbered, descriptive;
  for (auto const& id : ids) {
    bool num = std::regex_match(id, std::regex("(Prop|Lemma|Cor|Thm|Remark|Example) [0-9]+\\.[0-9]+"));
    (num ? numbered : descriptive).insert(id);
  }
  CHECK(numbered == expected);
  CHECK(descriptive
        == std::set<std::string>{"Idempotent closure", "Nilpotent census", "Order 3(n-1)",
                                 "Permutation group", "S_k chain"});
}

TEST_CASE("registry includes the required minimum") {
  std::set<std::string> ids;
  for (auto const& c : registry()) ids.insert(std::string(c.id));
  for (char const* id :
       {"Prop 3.1", "Example 3.2", "Prop 3.3", "Lemma 3.5", "Cor 3.6", "Lemma 3.7",
        "Thm 3.8", "Remark 3.9", "Prop 3.10", "Nilpotent census", "Prop 4.1",
        "Prop 4.2", "Permutation group", "Prop 4.3", "Prop 4.4", "Cor 4.5",
        "Prop 4.6", "Prop 5.1", "Order 3(n-1)", "Prop 5.2", "Prop 5.3", "Prop 5.4",
        "Cor 5.5", "Thm 5.6", "Prop 5.8", "Prop 5.9", "Idempotent closure",
        "Lemma 6.1", "Prop 6.2", "Prop 6.3", "Example 6.4", "Prop 6.5", "S_k chain",
        "Thm 7.1", "Remark 7.2", "Prop 7.3", "Cor 7.4", "Thm 7.5"}) {
    CAPTURE(id);
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("single claims") {
  CHECK(run_claim(shared(), "Cor 4.5", 4).status == Status::Pass);
  CHECK(run_claim(shared(), "Thm 7.1", 5).status == Status::Pass);
  auto p31 = run_claim(shared(), "Prop 3.1", 4);
  CHECK(p31.status == Status::Pass);
  CHECK(p31.id == "Prop 3.1");
  CHECK(p31.n == 4);
}

TEST_CASE("orders outside a claim's range are skipped") {
  CHECK(run_claim(shared(), "Prop 4.4", 4).status == Status::Skip);
  CHECK(run_claim(shared(), "Thm 7.1", 4).status == Status::Skip);
  CHECK(run_claim(shared(), "Remark 7.2", 6).status == Status::Skip);
  CHECK(run_claim(shared(), "Example 3.2", 5).status == Status::Skip);
}

TEST_CASE("bad requests throw") {
  CHECK_THROWS_AS(run_claim(shared(), "bogus", 5), UnknownClaim);
  CHECK_THROWS_AS(run_all(shared(), {5}, {"Prop 4.4", "bogus"}), UnknownClaim);
  Session small(5);
  CHECK_THROWS_AS(run_claim(small, "Prop 3.1", 6), CapExceeded);
}

TEST_CASE("empty order list gives an empty report") {
  CHECK(run_all(shared(), {}).empty());
}

TEST_CASE("the MAX ideal at order 5 has 50 - 3! elements") {
  auto r = run_all(shared(), {5}, {"Prop 4.4"});
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::Pass);
  std::size_t const want = oracle::endomorphisms(5).size() - oracle::factorial(3);
  bool              seen = false;
  for (auto const& w : r[0].witnesses) {
    seen = seen || w.label == "MAX size " + std::to_string(want);
  }
  CHECK(seen);
}

TEST_CASE("every claim at orders 4 and 5 passes or is mismatch-noted") {
  auto reports = run_all(shared(), {4, 5});
  for (auto const& r : reports) {
    if (r.status == Status::Skip) {
      continue;
    }
    INFO(where(r));
    CHECK((r.status == Status::Pass || r.status == Status::MismatchNoted));
  }
}

TEST_CASE("report order, witnesses on failure, summary") {
  auto reports = run_all(shared(), {5, 4});
  auto reg     = registry();
  REQUIRE(reports.size() == 2 * reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reports[2 * i].id == reg[i].id);
    CHECK(reports[2 * i].n == 4);
    CHECK(reports[2 * i + 1].id == reg[i].id);
    CHECK(reports[2 * i + 1].n == 5);
  }
  Summary want;
  for (auto const& r : reports) {
    if (r.status == Status::Fail) {
      CHECK_FALSE(r.witnesses.empty());
    }
    switch (r.status) {
      case Status::Pass: ++want.pass; break;
      case Status::Fail: ++want.fail; break;
      case Status::MismatchNoted: ++want.mismatch; break;
      case Status::Skip: ++want.skip; break;
    }
  }
  auto got = summarize(reports);
  CHECK(got.pass == want.pass);
  CHECK(got.fail == want.fail);
  CHECK(got.mismatch == want.mismatch);
  CHECK(got.skip == want.skip);
  CHECK(to_string(Status::MismatchNoted) == "mismatch-noted");
}

TEST_CASE("re-running is deterministic") {
  Session a, b;
  auto    x = run_all(a, {4, 5, 6});
  auto    y = run_all(b, {4, 5, 6});
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].same_outcome(y[i]));
  }
  CHECK(render(x, Format::Json) == render(y, Format::Json));
}

TEST_CASE("printed order-4 tables") {
  auto const& t = printed_order4_tables();
  REQUIRE(t.order.size() == 16);
  CHECK(t.add.size() == 16);
  CHECK(t.mul.size() == 16);
  Diamond d4(4);
  for (auto const& s : t.order) {
    CHECK(to_short(parse_short(d4, s)) == s);
  }
  CHECK_THROWS(parse_short(d4, "0a"));
  CHECK_THROWS(parse_short(d4, "aa0"));
}

TEST_CASE("printed tables differ from the computed ones in few cells") {
  auto e4  = EndoSemiring::build(Diamond(4));
  auto cmp = compare_with_printed(e4);
  CHECK(cmp.same_elements);
  CHECK(cmp.add.size() <= kTypoTolerance);
  CHECK(cmp.mul.size() <= kTypoTolerance);
  // the computed side of every listed cell is what the oracle says
  Diamond d4(4);
  for (auto const* cells : {&cmp.add, &cmp.mul}) {
    bool const is_add = cells == &cmp.add;
    for (auto const& c : *cells) {
      auto f = as_map(parse_short(d4, c.row));
      auto g = as_map(parse_short(d4, c.col));
      auto h = is_add ? oracle::add(4, f, g) : oracle::mul(f, g);
      CHECK(parse_short(d4, c.computed).to_string() == oracle::show(4, h));
      CHECK(c.printed != c.computed);
    }
  }
}

TEST_CASE("same_outcome ignores wall time only") {
  ClaimReport a{"X", 4, Status::Pass, "holds", {}, {}, 1.0};
  ClaimReport b = a;
  b.seconds     = 9.0;
  CHECK(a.same_outcome(b));
  b.findings.push_back("f");
  CHECK_FALSE(a.same_outcome(b));
}
