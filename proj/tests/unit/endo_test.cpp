#include <doctest.h>

#include <numeric>
#include <set>

#include "../oracle.hpp"
#include "diamond/endo.hpp"
#include "diamond/verify.hpp"

using namespace diamond;

namespace {
  Element const Z = Element::bottom();
  Element const T = Element::top();
  Element a(int i) {
    return Element::atom(i);
  }

  Endo s4(char const* text) {
    return parse_short(Diamond(4), text);
  }

  oracle::Map as_map(Endo const& f) {
    Diamond const& d = f.diamond();
    oracle::Map    m{0};
    for (Element x : f.images()) {
      m.push_back(static_cast<int>(d.index_of(x)));
    }
    return m;
  }

  std::set<std::string> shown(std::vector<Endo> const& v) {
    std::set<std::string> s;
    for (auto const& e : v) {
      s.insert(e.to_string());
    }
    return s;
  }
}  // namespace

TEST_CASE("validate accepts the identity and rejects a non-homomorphism") {
  Diamond d(4);
  Endo    id(d, {a(1), a(2), T});
  CHECK(id.to_string() == "(a1,a2,1)");
  CHECK_NOTHROW(Endo(d, {Z, T, T}));

  try {
    Endo bad(d, {a(1), a(2), a(1)});
    FAIL("expected NotAHomomorphism");
  } catch (NotAHomomorphism const& e) {
    auto [x, y] = e.witness();
    CHECK(((x == a(1) && y == a(2)) || (x == a(2) && y == a(1))));
  }
}

TEST_CASE("validate rejects bad lengths and foreign points") {
  Diamond d(4);
  CHECK_THROWS_AS(Endo(d, {a(1), T}), InvalidElement);
  CHECK_THROWS_AS(Endo(d, {a(3), T, T}), InvalidElement);
  CHECK_THROWS_AS(Endo::parse(d, "(a1,a2)"), Error);
  CHECK_THROWS_AS(Endo::parse(d, "(a1,q,1)"), Error);
}

TEST_CASE("parse and to_string round trip") {
  for (int n = 4; n <= 6; ++n) {
    Diamond d(n);
    for (auto const& f : enumerate_all(d)) {
      CHECK(Endo::parse(d, f.to_string()) == f);
    }
  }
  Diamond d(5);
  CHECK(Endo::parse(d, " a1 , 0 ,a1, a1 ") == Endo(d, {a(1), Z, a(1), a(1)}));
}

TEST_CASE("addition examples on the order-4 diamond") {
  CHECK(s4("0aa") + s4("a0a") == s4("aaa"));
  CHECK(s4("0bb") + s4("a0a") == s4("ab1"));
  for (auto const& f : enumerate_all(Diamond(4))) {
    CHECK(f + s4("000") == f);
  }
}

TEST_CASE("multiplication applies the left factor first") {
  CHECK(s4("0aa") * s4("b0b") == s4("0bb"));
  CHECK(s4("a0a") * s4("0aa") == s4("000"));
  Endo id = s4("ab1");
  for (auto const& f : enumerate_all(Diamond(4))) {
    CHECK(id * f == f);
    CHECK(f * id == f);
  }
}

TEST_CASE("operands over different diamonds are refused") {
  Endo f(Diamond(4), {Z, Z, Z});
  Endo g(Diamond(5), {Z, Z, Z, Z});
  CHECK_THROWS_AS(f + g, DiamondMismatch);
  CHECK_THROWS_AS(f * g, DiamondMismatch);
}

TEST_CASE("the order-4 semiring has exactly the sixteen listed maps") {
  std::vector<Endo> listed;
  for (char const* t : {"000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1",
                        "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111"}) {
    listed.push_back(s4(t));
  }
  auto all = enumerate_all(Diamond(4));
  CHECK(all.size() == 16);
  CHECK(shown(all) == shown(listed));
}

TEST_CASE("fast enumeration equals the brute-force oracle, orders 4 to 7") {
  std::size_t const expected[] = {16, 50, 234, 1582};
  for (int n = 4; n <= 7; ++n) {
    CAPTURE(n);
    Diamond d(n);
    auto    fast = enumerate_all(d);
    auto    ref  = oracle::endomorphisms(n);
    CHECK(fast.size() == expected[n - 4]);
    REQUIRE(fast.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(fast[i].to_string() == oracle::show(n, ref[i]));
    }
    if (n <= 6) {
      CHECK(enumerate_by_filter(d) == fast);
    }
  }
}

TEST_CASE("enumeration is sorted and holds both constants") {
  for (int n = 4; n <= 7; ++n) {
    Diamond d(n);
    auto    all = enumerate_all(d);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::vector<Element> zeros(n - 1, Z), ones(n - 1, T);
    CHECK(std::binary_search(all.begin(), all.end(), Endo(d, zeros)));
    CHECK(std::binary_search(all.begin(), all.end(), Endo(d, ones)));
    std::set<std::uint64_t> codes;
    for (auto const& f : all) {
      codes.insert(f.encode());
    }
    CHECK(codes.size() == all.size());
  }
}

TEST_CASE("order-4 tables agree with the oracle cell by cell") {
  auto        e = EndoSemiring::build(Diamond(4));
  auto const& s = e.semiring();
  for (Index x = 0; x < 16; ++x) {
    for (Index y = 0; y < 16; ++y) {
      auto fx = as_map(e.element(x)), fy = as_map(e.element(y));
      CHECK(s.label(s.add(x, y)) == oracle::show(4, oracle::add(4, fx, fy)));
      CHECK(s.label(s.mul(x, y)) == oracle::show(4, oracle::mul(fx, fy)));
      CHECK(s.add(x, y) == s.add(y, x));
    }
  }
}

TEST_CASE("special indices and exhaustive laws at orders 4 and 5") {
  for (int n = 4; n <= 5; ++n) {
    auto e = EndoSemiring::build(Diamond(n));
    CHECK(e.laws().is_semiring());
    CHECK(e.laws().exhaustive);
    CHECK(e.laws().additively_idempotent);
    CHECK(e.laws().zero == e.zero_index());
    CHECK(e.laws().identity == e.identity_index());
    CHECK(e.element(e.zero_index()).image().size() == 1);
    oracle::Map id(n);
    std::iota(id.begin(), id.end(), 0);
    CHECK(e.element(e.identity_index()).to_string() == oracle::show(n, id));
    CHECK(e.element(e.top_index()).at_top() == T);
  }
}

TEST_CASE("sampled laws at orders 6 and 7 use at least a million triples") {
  for (int n = 6; n <= 7; ++n) {
    auto e = EndoSemiring::build(Diamond(n));
    CHECK(e.laws().is_semiring());
    CHECK_FALSE(e.laws().exhaustive);
    CHECK(e.laws().triples_checked >= 1000000);
  }
}

TEST_CASE("closure, idempotency, zero and absorbing top over every pair") {
  for (int n = 4; n <= 6; ++n) {
    Diamond d(n);
    auto    all = enumerate_all(d);
    Endo    zero(d, std::vector<Element>(n - 1, Z));
    Endo    one(d, std::vector<Element>(n - 1, T));
    for (auto const& f : all) {
      CHECK(f + f == f);
      CHECK(zero * f == zero);
      CHECK(f * zero == zero);
      CHECK(zero + f == f);
      CHECK(one + f == one);
      for (auto const& g : all) {
        CHECK(f + g == g + f);
        CHECK_NOTHROW(validate(d, (f + g).images()));
        CHECK_NOTHROW(validate(d, (f * g).images()));
      }
    }
  }
}

TEST_CASE("isotone, and the shape of maps sending an atom to 0") {
  for (int n = 4; n <= 7; ++n) {
    Diamond d(n);
    for (auto const& f : enumerate_all(d)) {
      for (auto x : d.elements()) {
        for (auto y : d.elements()) {
          if (d.leq(x, y)) {
            CHECK(d.leq(f(x), f(y)));
          }
        }
      }
      bool zero_map = f.image().size() == 1;
      for (int i = 1; i <= n - 2 && !zero_map; ++i) {
        if (f.at_atom(i) != Z) {
          continue;
        }
        for (int j = 1; j <= n - 2; ++j) {
          if (j != i) {
            CHECK(f.at_atom(j) == f.at_top());
          }
        }
      }
    }
  }
}

TEST_CASE("maps fixing 1 are injective on atoms sent to atoms") {
  for (int n = 4; n <= 7; ++n) {
    Diamond d(n);
    for (auto const& f : enumerate_all(d)) {
      if (!f.fixes_top()) {
        continue;
      }
      std::set<Element> seen;
      int               inner = 0;
      for (int i = 1; i <= n - 2; ++i) {
        if (f.at_atom(i).is_atom()) {
          ++inner;
          seen.insert(f.at_atom(i));
        }
      }
      CHECK(static_cast<int>(seen.size()) == inner);
    }
  }
}

TEST_CASE("build refuses orders above the cap") {
  CHECK_THROWS_AS(EndoSemiring::build(Diamond(8)), CapExceeded);
  CHECK_THROWS_AS(EndoSemiring::build(Diamond(9), 9), CapExceeded);
  CHECK_THROWS_AS(EndoSemiring::build(Diamond(5), 4), CapExceeded);
}

TEST_CASE("index lookup") {
  auto e = EndoSemiring::build(Diamond(5));
  for (Index i = 0; i < e.order(); ++i) {
    CHECK(e.index_of(e.element(i)) == i);
  }
  Endo foreign(Diamond(4), {Z, Z, Z});
  CHECK_FALSE(e.find(foreign).has_value());
  CHECK_THROWS_AS(e.index_of(foreign), InvalidElement);
}
