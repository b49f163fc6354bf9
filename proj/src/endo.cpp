#include "diamond/endo.hpp"

#include <algorithm>
#include <cctype>

namespace diamond {

  namespace {

    void same_diamond(Diamond const& a, Diamond const& b) {
      if (!(a == b)) {
        throw DiamondMismatch("endomorphisms of diamonds of order "
                              + std::to_string(a.order()) + " and "
                              + std::to_string(b.order()));
      }
    }

    std::size_t slot(Diamond const& d, Element x) {
      // images are stored for (a1..a{n-2}, 1); bottom has no slot
      return x.is_top() ? static_cast<std::size_t>(d.order() - 2)
                        : static_cast<std::size_t>(x.atom_index() - 1);
    }

  }  // namespace

  Endo validate(Diamond d, std::span<Element const> images) {
    return Endo(d, images);
  }

  Endo::Endo(Diamond d, std::span<Element const> images) : _d(d) {
    auto const len = static_cast<std::size_t>(d.order() - 1);
    if (images.size() != len) {
      throw InvalidElement("an endomorphism of a diamond of order "
                           + std::to_string(d.order()) + " needs "
                           + std::to_string(len) + " images, got "
                           + std::to_string(images.size()));
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (!d.contains(images[i])) {
        throw InvalidElement("image " + std::to_string(i + 1)
                             + " is not a point of the diamond");
      }
      _img[i] = images[i];
    }
    auto const pts = d.elements();
    for (Element x : pts) {
      for (Element y : pts) {
        if ((*this)(d.join(x, y)) != d.join((*this)(x), (*this)(y))) {
          throw NotAHomomorphism("tuple " + to_string()
                                     + " does not preserve the join of "
                                     + d.render(x) + " and " + d.render(y),
                                 x,
                                 y);
        }
      }
    }
    // isotone follows from the above; kept as a cheap second check
    for (Element x : pts) {
      for (Element y : pts) {
        if (d.leq(x, y) && !d.leq((*this)(x), (*this)(y))) {
          throw NotAHomomorphism("tuple " + to_string() + " is not isotone",
                                 x, y);
        }
      }
    }
  }

  Endo Endo::parse(Diamond d, std::string_view text) {
    std::string compact;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        compact.push_back(c);
      }
    }
    std::string_view body = compact;
    if (!body.empty() && body.front() == '(') {
      if (body.back() != ')') {
        throw ParseError("unbalanced parenthesis in '" + std::string(text)
                         + "'");
      }
      body = body.substr(1, body.size() - 2);
    }
    std::vector<Element> images;
    while (true) {
      auto        comma = body.find(',');
      std::string_view tok = body.substr(0, comma);
      if (tok.empty()) {
        throw ParseError("empty entry in '" + std::string(text) + "'");
      }
      images.push_back(d.parse(tok));
      if (comma == std::string_view::npos) {
        break;
      }
      body.remove_prefix(comma + 1);
    }
    return Endo(d, images);
  }

  Element Endo::at_atom(int i) const {
    if (i < 1 || i > _d.atom_count()) {
      throw InvalidElement("atom index " + std::to_string(i)
                           + " is out of range");
    }
    return _img[static_cast<std::size_t>(i - 1)];
  }

  Element Endo::operator()(Element x) const {
    if (!_d.contains(x)) {
      throw InvalidElement("argument is not a point of the diamond");
    }
    return x.is_bottom() ? Element::bottom() : _img[slot(_d, x)];
  }

  std::vector<Element> Endo::image() const {
    std::vector<Element> out(images().begin(), images().end());
    out.push_back(Element::bottom());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Endo Endo::operator+(Endo const& g) const {
    same_diamond(_d, g._d);
    Endo h(Trusted{}, _d);
    for (std::size_t i = 0; i < images().size(); ++i) {
      h._img[i] = join_unchecked(_img[i], g._img[i]);
    }
    return h;
  }

  Endo Endo::operator*(Endo const& g) const {
    same_diamond(_d, g._d);
    Endo h(Trusted{}, _d);
    for (std::size_t i = 0; i < images().size(); ++i) {
      h._img[i] = g(_img[i]);
    }
    return h;
  }

  std::string Endo::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < images().size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += _d.render(_img[i]);
    }
    out += ')';
    return out;
  }

  std::uint64_t Endo::encode() const noexcept {
    std::uint64_t key = 0;
    auto const    n   = static_cast<std::uint64_t>(_d.order());
    for (Element x : images()) {
      std::uint64_t digit = x.is_bottom() ? 0
                            : x.is_top()  ? n - 1
                                          : static_cast<std::uint64_t>(
                                              x.atom_index());
      key = key * n + digit;
    }
    return key;
  }

  bool Endo::operator==(Endo const& that) const noexcept {
    return _d == that._d
           && std::equal(images().begin(), images().end(),
                         that.images().begin());
  }

  std::strong_ordering Endo::operator<=>(Endo const& that) const noexcept {
    if (auto c = _d.order() <=> that._d.order(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        images().begin(), images().end(), that.images().begin(),
        that.images().end());
  }

  std::vector<Endo> enumerate_all(Diamond d) {
    int const         m   = d.atom_count();
    auto const        top = static_cast<std::size_t>(m);
    std::vector<Endo> out;
    auto              blank = [&] { return Endo(Endo::Trusted{}, d); };

    out.push_back(blank());  // zero

    // value a_k at 1: every atom to a_k, or one atom to 0 and the rest a_k
    for (int k = 1; k <= m; ++k) {
      Element const ak = Element::atom(k);
      Endo          e  = blank();
      std::fill_n(e._img.begin(), m + 1, ak);
      out.push_back(e);
      for (int l = 0; l < m; ++l) {
        Endo f            = e;
        f._img[l]         = Element::bottom();
        out.push_back(f);
      }
    }

    // value 1 at 1, one atom to 0: the rest go to 1
    for (int l = 0; l < m; ++l) {
      Endo e = blank();
      std::fill_n(e._img.begin(), m + 1, Element::top());
      e._img[l] = Element::bottom();
      out.push_back(e);
    }

    // value 1 at 1, no atom to 0: partial injections of atoms into atoms,
    // everything else to 1
    Endo              cur  = blank();
    std::vector<bool> used(m + 1, false);
    cur._img[top]          = Element::top();
    auto rec               = [&](auto& self, int pos) -> void {
      if (pos == m) {
        out.push_back(cur);
        return;
      }
      cur._img[pos] = Element::top();
      self(self, pos + 1);
      for (int j = 1; j <= m; ++j) {
        if (!used[j]) {
          used[j]       = true;
          cur._img[pos] = Element::atom(j);
          self(self, pos + 1);
          used[j] = false;
        }
      }
    };
    rec(rec, 0);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Endo> enumerate_by_filter(Diamond d) {
    if (d.order() > kFilterMaxOrder) {
      throw CapExceeded("brute-force enumeration limited to order "
                        + std::to_string(kFilterMaxOrder));
    }
    auto const           pts = d.elements();
    auto const           len = static_cast<std::size_t>(d.order() - 1);
    std::vector<std::size_t> digit(len, 0);
    std::vector<Element>     tuple(len, Element::bottom());
    std::vector<Endo>        out;
    while (true) {
      for (std::size_t i = 0; i < len; ++i) {
        tuple[i] = pts[digit[i]];
      }
      try {
        out.push_back(validate(d, tuple));
      } catch (NotAHomomorphism const&) {
      }
      std::size_t i = len;
      while (i > 0 && ++digit[i - 1] == pts.size()) {
        digit[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  EndoSemiring::EndoSemiring(Diamond d, std::vector<Endo> elems,
                             FiniteSemiring s)
      : _d(d), _elems(std::move(elems)), _s(std::move(s)) {}

  EndoSemiring EndoSemiring::build(Diamond d, int cap) {
    int const limit = std::min(cap, kSemiringHardCap);
    if (d.order() > limit) {
      throw CapExceeded("full endomorphism semiring limited to order "
                        + std::to_string(limit) + ", requested "
                        + std::to_string(d.order()));
    }
    auto        elems = enumerate_all(d);
    std::size_t n     = elems.size();

    std::unordered_map<std::uint64_t, Index> lookup;
    lookup.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      lookup.emplace(elems[i].encode(), static_cast<Index>(i));
    }
    auto index = [&](Endo const& e) {
      auto it = lookup.find(e.encode());
      if (it == lookup.end()) {
        throw LawViolation("operation result " + e.to_string()
                           + " is not an enumerated endomorphism");
      }
      return it->second;
    };

    std::vector<Index>       add(n * n), mul(n * n);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(elems[i].to_string());
      for (std::size_t j = 0; j < n; ++j) {
        add[i * n + j] = index(elems[i] + elems[j]);
        mul[i * n + j] = index(elems[i] * elems[j]);
      }
    }

    EndoSemiring out(d, std::move(elems),
                     FiniteSemiring(n, std::move(add), std::move(mul),
                                    std::move(labels)));
    out._lookup = std::move(lookup);
    out._laws   = check_laws(out._s);
    if (!out._laws.is_semiring() || !out._laws.additively_idempotent) {
      auto const& f = out._laws.failures.front();
      throw LawViolation("endomorphism tables fail " + f.law);
    }

    std::vector<Element> zero(d.order() - 1, Element::bottom());
    std::vector<Element> ones(d.order() - 1, Element::top());
    std::vector<Element> id;
    for (Element a : d.atoms()) {
      id.push_back(a);
    }
    id.push_back(Element::top());
    out._zero     = out.index_of(Endo(d, zero));
    out._identity = out.index_of(Endo(d, id));
    out._top      = out.index_of(Endo(d, ones));
    if (out._laws.zero != out._zero || out._laws.identity != out._identity) {
      throw LawViolation("zero or identity not where expected");
    }
    return out;
  }

  std::optional<Index> EndoSemiring::find(Endo const& e) const {
    if (!(e.diamond() == _d)) {
      return std::nullopt;
    }
    auto it = _lookup.find(e.encode());
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Index EndoSemiring::index_of(Endo const& e) const {
    auto i = find(e);
    if (!i) {
      throw InvalidElement(e.to_string()
                           + " is not an element of this semiring");
    }
    return *i;
  }

}  // namespace diamond
