#include "diamond/lattice.hpp"

#include <charconv>

#include "diamond/errors.hpp"

namespace diamond {

  Diamond::Diamond(int n, int max_order) : _n(n) {
    int const cap = max_order < kMaxOrder ? max_order : kMaxOrder;
    if (n < kMinOrder) {
      throw CapExceeded("diamond order must be at least 4, got "
                        + std::to_string(n));
    }
    if (n > cap) {
      throw CapExceeded("diamond order " + std::to_string(n)
                        + " exceeds the configured limit "
                        + std::to_string(cap));
    }
  }

  bool Diamond::contains(Element x) const noexcept {
    if (x.is_atom()) {
      return x.atom_index() >= 1 && x.atom_index() <= atom_count();
    }
    return x.atom_index() == 0;
  }

  void Diamond::check(Element x) const {
    if (!contains(x)) {
      throw InvalidElement("atom index " + std::to_string(x.atom_index())
                           + " is out of range for a diamond of order "
                           + std::to_string(_n));
    }
  }

  Element Diamond::join(Element x, Element y) const {
    check(x);
    check(y);
    return join_unchecked(x, y);
  }

  bool Diamond::leq(Element x, Element y) const {
    return join(x, y) == y;
  }

  std::vector<Element> Diamond::elements() const {
    std::vector<Element> out;
    out.reserve(_n);
    out.push_back(Element::bottom());
    for (int i = 1; i <= atom_count(); ++i) {
      out.push_back(Element::atom(i));
    }
    out.push_back(Element::top());
    return out;
  }

  std::vector<Element> Diamond::atoms() const {
    std::vector<Element> out;
    out.reserve(atom_count());
    for (int i = 1; i <= atom_count(); ++i) {
      out.push_back(Element::atom(i));
    }
    return out;
  }

  std::size_t Diamond::index_of(Element x) const {
    check(x);
    switch (x.kind()) {
      case Element::Kind::Bottom:
        return 0;
      case Element::Kind::Atom:
        return static_cast<std::size_t>(x.atom_index());
      case Element::Kind::Top:
        break;
    }
    return static_cast<std::size_t>(_n - 1);
  }

  Element Diamond::element_at(std::size_t i) const {
    if (i >= static_cast<std::size_t>(_n)) {
      throw InvalidElement("element position " + std::to_string(i)
                           + " is out of range");
    }
    if (i == 0) {
      return Element::bottom();
    }
    if (i == static_cast<std::size_t>(_n - 1)) {
      return Element::top();
    }
    return Element::atom(static_cast<int>(i));
  }

  std::string Diamond::render(Element x) const {
    check(x);
    switch (x.kind()) {
      case Element::Kind::Bottom:
        return "0";
      case Element::Kind::Top:
        return "1";
      case Element::Kind::Atom:
        break;
    }
    return "a" + std::to_string(x.atom_index());
  }

  Element Diamond::parse(std::string_view text) const {
    if (text == "0") {
      return Element::bottom();
    }
    if (text == "1") {
      return Element::top();
    }
    if (text.size() >= 2 && text.front() == 'a') {
      int         idx   = 0;
      auto const* first = text.data() + 1;
      auto const* last  = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(first, last, idx);
      if (ec == std::errc() && ptr == last) {
        Element x = Element::atom(idx);
        if (idx < 1 || idx > atom_count()) {
          throw InvalidElement("atom '" + std::string(text)
                               + "' is out of range for a diamond of order "
                               + std::to_string(_n));
        }
        return x;
      }
    }
    throw ParseError("cannot parse lattice element '" + std::string(text)
                     + "'");
  }

}  // namespace diamond
