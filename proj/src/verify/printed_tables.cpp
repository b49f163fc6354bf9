#include <algorithm>

#include "diamond/verify.hpp"

namespace diamond {

  // Transcribed cell by cell, typos included. Row = left operand.
  ReferenceTables const& printed_order4_tables() {
    static ReferenceTables const t = {
        {"000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1", "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111"},
        {
          {"000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1", "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111"},
          {"0aa", "0aa", "aaa", "aaa", "011", "ba1", "b11", "a11", "ba1", "011", "1a1", "a11", "1a1", "b11", "111", "111"},
          {"a0a", "aaa", "a0a", "aaa", "ab1", "101", "1b1", "ab1", "1a1", "a11", "101", "a11", "1a1", "111", "1b1", "111"},
          {"aaa", "aaa", "aaa", "aaa", "a11", "1a1", "111", "a11", "1a1", "a11", "1a1", "a11", "1a1", "111", "111", "111"},
          {"0bb", "011", "ab1", "a11", "0bb", "bbb", "bbb", "ab1", "b11", "011", "1b1", "a11", "111", "b11", "1b1", "111"},
          {"b0b", "ba1", "101", "1a1", "bbb", "b0b", "bbb", "1b1", "ba1", "b11", "101", "111", "1a1", "b11", "1b1", "111"},
          {"bbb", "b11", "1b1", "111", "bbb", "bbb", "bbb", "1b1", "b11", "b11", "1b1", "111", "111", "b11", "1b1", "111"},
          {"ab1", "a11", "ab1", "a11", "ab1", "1b1", "1b1", "ab1", "111", "a11", "1b1", "a11", "111", "111", "1b1", "111"},
          {"ba1", "ba1", "1a1", "1a1", "b11", "ba1", "b11", "111", "ba1", "b11", "1a1", "111", "1a1", "b11", "111", "111"},
          {"011", "011", "a11", "a11", "011", "b11", "b11", "a11", "b11", "011", "111", "a11", "111", "b11", "111", "111"},
          {"101", "1a1", "101", "1a1", "1b1", "101", "1b1", "1b1", "1a1", "111", "101", "111", "1a1", "111", "1b1", "111"},
          {"a11", "a11", "a11", "a11", "a11", "111", "111", "a11", "111", "a11", "111", "a11", "111", "111", "111", "111"},
          {"1a1", "1a1", "1a1", "1a1", "111", "1a1", "111", "111", "1a1", "111", "1a1", "111", "1a1", "111", "111", "111"},
          {"b11", "b11", "111", "111", "b11", "b11", "b11", "111", "b11", "b11", "111", "111", "111", "b11", "111", "111"},
          {"1b1", "111", "1b1", "111", "1b1", "1b1", "1b1", "1b1", "111", "111", "1b1", "111", "111", "111", "1b1", "111"},
          {"111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111", "111"},
        },
        {
          {"000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000", "000"},
          {"000", "000", "0aa", "0aa", "000", "0bb", "0bb", "0aa", "0aa", "000", "011", "0aa", "011", "0bb", "011", "011"},
          {"000", "000", "a0a", "a0a", "000", "b0b", "b0b", "a0a", "b0b", "000", "101", "a0a", "101", "b0b", "101", "101"},
          {"000", "000", "aaa", "aaa", "000", "bbb", "bbb", "aaa", "bbb", "000", "111", "aaa", "111", "bbb", "111", "111"},
          {"000", "0aa", "000", "0aa", "0bb", "000", "0bb", "0bb", "0aa", "011", "000", "011", "0aa", "011", "0bb", "011"},
          {"000", "a0a", "000", "a0a", "b0b", "000", "b0b", "b0b", "a0a", "101", "000", "101", "a0a", "101", "b0b", "101"},
          {"000", "aaa", "000", "aaa", "bbb", "000", "bbb", "bbb", "aaa", "111", "000", "111", "aaa", "111", "bbb", "111"},
          {"000", "0aa", "a0a", "aaa", "0bb", "b0b", "bbb", "ab1", "ba1", "011", "101", "a11", "1a1", "b11", "1b1", "111"},
          {"000", "a0a", "0aa", "aaa", "b0b", "0bb", "bbb", "ba1", "ab1", "101", "011", "1a1", "a11", "1b1", "b11", "111"},
          {"000", "0aa", "0aa", "0aa", "0bb", "0bb", "011", "011", "011", "011", "011", "011", "011", "011", "011", "011"},
          {"000", "a0a", "a0a", "a0a", "b0b", "b0b", "b0b", "101", "101", "101", "101", "101", "101", "101", "101", "101"},
          {"000", "0aa", "aaa", "aaa", "0bb", "bbb", "bbb", "a11", "b11", "011", "111", "a11", "111", "b11", "111", "111"},
          {"000", "a0a", "aaa", "aaa", "b0b", "bbb", "bbb", "1a1", "1b1", "101", "111", "1a1", "111", "1b1", "111", "111"},
          {"000", "aaa", "0aa", "aaa", "bbb", "0bb", "bbb", "b11", "a11", "111", "011", "111", "a11", "111", "b11", "111"},
          {"000", "aaa", "a0a", "aaa", "bbb", "b0b", "bbb", "1b1", "1a1", "111", "101", "111", "1a1", "111", "1b1", "111"},
          {"000", "aaa", "aaa", "aaa", "bbb", "bbb", "bbb", "111", "111", "111", "111", "111", "111", "111", "111", "111"},
        },
    };
    return t;
  }

}  // namespace diamond

namespace diamond {

  Endo parse_short(Diamond d4, std::string_view text) {
    if (d4.order() != 4) {
      throw ParseError("short tuples only describe the order-4 diamond");
    }
    if (text.size() != 3) {
      throw ParseError("short tuple '" + std::string(text)
                       + "' must have three letters");
    }
    std::vector<Element> images;
    for (char c : text) {
      switch (c) {
        case '0': images.push_back(Element::bottom()); break;
        case 'a': images.push_back(Element::atom(1)); break;
        case 'b': images.push_back(Element::atom(2)); break;
        case '1': images.push_back(Element::top()); break;
        default:
          throw ParseError("unexpected letter '" + std::string(1, c)
                           + "' in short tuple");
      }
    }
    return Endo(d4, images);
  }

  std::string to_short(Endo const& e) {
    if (e.diamond().order() != 4) {
      throw ParseError("short tuples only describe the order-4 diamond");
    }
    std::string out;
    for (Element x : e.images()) {
      out += x.is_bottom() ? '0'
             : x.is_top()  ? '1'
                           : (x.atom_index() == 1 ? 'a' : 'b');
    }
    return out;
  }

  TableComparison compare_with_printed(EndoSemiring const& e4) {
    auto const&     ref = printed_order4_tables();
    TableComparison out;

    std::vector<std::string> have;
    for (auto const& e : e4.elements()) {
      have.push_back(to_short(e));
    }
    std::vector<std::string> a = have, b = ref.order;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.same_elements = a == b;
    if (!out.same_elements) {
      return out;
    }

    std::vector<Index> idx;
    for (auto const& t : ref.order) {
      idx.push_back(e4.index_of(parse_short(e4.diamond(), t)));
    }
    auto const& s = e4.semiring();
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        std::string sum  = have[s.add(idx[r], idx[c])];
        std::string prod = have[s.mul(idx[r], idx[c])];
        if (ref.add[r][c] != sum) {
          out.add.push_back({ref.order[r], ref.order[c], ref.add[r][c], sum});
        }
        if (ref.mul[r][c] != prod) {
          out.mul.push_back({ref.order[r], ref.order[c], ref.mul[r][c], prod});
        }
      }
    }
    return out;
  }

}  // namespace diamond
