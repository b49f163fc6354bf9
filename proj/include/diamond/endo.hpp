#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diamond/algebra.hpp"
#include "diamond/errors.hpp"
#include "diamond/finite_semiring.hpp"
#include "diamond/lattice.hpp"

namespace diamond {

  // A tuple that is not join-preserving. witness() is a pair (x, y) with
  // f(x v y) != f(x) v f(y).
  class NotAHomomorphism : public Error {
   public:
    NotAHomomorphism(std::string const& what, Element x, Element y)
        : Error(what), _x(x), _y(y) {}

    std::pair<Element, Element> witness() const noexcept {
      return {_x, _y};
    }

   private:
    Element _x;
    Element _y;
  };

  // A join-endomorphism of the diamond fixing 0, stored as the images of
  // (a1, ..., a{n-2}, 1). Multiplication applies the left factor first:
  // (f * g)(x) = g(f(x)).
  class Endo {
   public:
    static constexpr std::size_t kMaxImages = kMaxOrder - 1;

    // Throws InvalidElement for bad entries or length, NotAHomomorphism if
    // join is not preserved.
    Endo(Diamond d, std::span<Element const> images);
    Endo(Diamond d, std::initializer_list<Element> images)
        : Endo(d, std::span<Element const>(images.begin(), images.size())) {}

    // "(0,a1,1)"; parentheses optional, whitespace ignored.
    static Endo parse(Diamond d, std::string_view text);

    Diamond const& diamond() const noexcept {
      return _d;
    }
    std::span<Element const> images() const noexcept {
      return {_img.data(), static_cast<std::size_t>(_d.order() - 1)};
    }
    Element at_top() const noexcept {
      return _img[static_cast<std::size_t>(_d.order() - 2)];
    }
    Element at_atom(int i) const;

    Element operator()(Element x) const;

    // Distinct values of f over the whole diamond, in canonical order; 0 is
    // always present.
    std::vector<Element> image() const;
    bool                 fixes_top() const noexcept {
      return at_top().is_top();
    }

    // Throw DiamondMismatch when the diamonds differ.
    Endo operator+(Endo const& g) const;
    Endo operator*(Endo const& g) const;

    std::string to_string() const;

    // Base-n digits of the image tuple; injective for a fixed diamond.
    std::uint64_t encode() const noexcept;

    bool operator==(Endo const& that) const noexcept;
    // Lexicographic on image tuples under the canonical element order.
    std::strong_ordering operator<=>(Endo const& that) const noexcept;

   private:
    struct Trusted {};
    Endo(Trusted, Diamond d) : _d(d) {}

    friend std::vector<Endo> enumerate_all(Diamond d);

    Diamond                           _d;
    std::array<Element, kMaxImages>   _img{};
  };

  // Throws NotAHomomorphism or InvalidElement; returns the endomorphism.
  Endo validate(Diamond d, std::span<Element const> images);

  // Generated from the case analysis of the possible value at 1 and sorted.
  std::vector<Endo> enumerate_all(Diamond d);

  // Oracle: every tuple in n^(n-1) pushed through validate. Slow; refuses
  // orders above kFilterMaxOrder.
  inline constexpr int kFilterMaxOrder = 8;
  std::vector<Endo>    enumerate_by_filter(Diamond d);

  // Full semirings above this order are refused unless the cap is raised.
  inline constexpr int kDefaultSemiringCap = 7;
  // Tables grow with the square of the element count; this is the ceiling
  // any override may reach.
  inline constexpr int kSemiringHardCap = 8;

  class EndoSemiring {
   public:
    // Throws CapExceeded above cap (or above kSemiringHardCap) and
    // LawViolation if the built tables fail a law.
    static EndoSemiring build(Diamond d, int cap = kDefaultSemiringCap);

    Diamond const& diamond() const noexcept {
      return _d;
    }
    std::vector<Endo> const& elements() const noexcept {
      return _elems;
    }
    Endo const& element(Index i) const {
      return _elems.at(i);
    }
    std::size_t order() const noexcept {
      return _elems.size();
    }
    FiniteSemiring const& semiring() const noexcept {
      return _s;
    }
    LawReport const& laws() const noexcept {
      return _laws;
    }

    std::optional<Index> find(Endo const& e) const;
    // Throws InvalidElement when e is not an element (wrong diamond).
    Index index_of(Endo const& e) const;

    Index zero_index() const noexcept {
      return _zero;
    }
    Index identity_index() const noexcept {
      return _identity;
    }
    Index top_index() const noexcept {   // the constant map to 1
      return _top;
    }

   private:
    EndoSemiring(Diamond d, std::vector<Endo> elems, FiniteSemiring s);

    Diamond                                  _d;
    std::vector<Endo>                        _elems;
    std::unordered_map<std::uint64_t, Index> _lookup;
    FiniteSemiring                           _s;
    LawReport                                _laws;
    Index                                    _zero     = 0;
    Index                                    _identity = 0;
    Index                                    _top      = 0;
  };

}  // namespace diamond
