#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diamond {

  inline constexpr int kMinOrder = 4;
  // Endomorphisms keep their images in a fixed array, so this bound is
  // structural and cannot be raised at run time.
  inline constexpr int kMaxOrder = 10;

  // A point of the diamond: the bottom, one of the atoms a1..a{n-2}, or the
  // top. The defaulted ordering is the canonical one: 0 < a1 < ... < 1.
  class Element {
   public:
    enum class Kind : std::uint8_t { Bottom = 0, Atom = 1, Top = 2 };

    constexpr Element() = default;

    static constexpr Element bottom() noexcept {
      return Element(Kind::Bottom, 0);
    }
    static constexpr Element top() noexcept {
      return Element(Kind::Top, 0);
    }
    // Atoms are numbered from 1. Range against a particular diamond is
    // checked by Diamond::contains.
    static constexpr Element atom(int index) noexcept {
      return Element(Kind::Atom, static_cast<std::uint8_t>(index));
    }

    constexpr Kind kind() const noexcept {
      return _kind;
    }
    constexpr int atom_index() const noexcept {
      return _atom;
    }
    constexpr bool is_bottom() const noexcept {
      return _kind == Kind::Bottom;
    }
    constexpr bool is_top() const noexcept {
      return _kind == Kind::Top;
    }
    constexpr bool is_atom() const noexcept {
      return _kind == Kind::Atom;
    }

    constexpr auto operator<=>(Element const&) const = default;

   private:
    constexpr Element(Kind k, std::uint8_t a) noexcept : _kind(k), _atom(a) {}

    Kind         _kind = Kind::Bottom;
    std::uint8_t _atom = 0;
  };

  // The join-semilattice with bottom 0, top 1 and an antichain of n - 2
  // atoms in between. Only the order n is stored; values are cheap to copy.
  class Diamond {
   public:
    // Throws CapExceeded when n is outside [4, max_order].
    explicit Diamond(int n, int max_order = kMaxOrder);

    int order() const noexcept {
      return _n;
    }
    int atom_count() const noexcept {
      return _n - 2;
    }

    bool contains(Element x) const noexcept;

    // Throws InvalidElement if either argument is not a point of this diamond.
    Element join(Element x, Element y) const;
    bool    leq(Element x, Element y) const;

    // [0, a1, ..., a{n-2}, 1]
    std::vector<Element> elements() const;
    std::vector<Element> atoms() const;

    // Position of x in the canonical order, and its inverse.
    std::size_t index_of(Element x) const;
    Element     element_at(std::size_t i) const;

    // "0", "a1".."a{n-2}", "1"
    std::string render(Element x) const;
    Element     parse(std::string_view text) const;

    bool operator==(Diamond const&) const = default;

   private:
    void check(Element x) const;

    int _n;
  };

  // Join without a diamond at hand; the caller guarantees validity.
  constexpr Element join_unchecked(Element x, Element y) noexcept {
    if (x.is_bottom()) {
      return y;
    }
    if (y.is_bottom() || x == y) {
      return x;
    }
    return Element::top();
  }

}  // namespace diamond
