#include <algorithm>
#include <map>

#include "io.hpp"

#include "diamond/algebra.hpp"

namespace diamond {

  using namespace detail;

  namespace {

    std::string subset_text(std::string const& s) {
      return s.empty() ? "all" : s;
    }
    std::string subset_from(std::string const& s) {
      return s == "all" ? std::string() : s;
    }

    std::string padded(std::string const& s, std::size_t w) {
      return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    }

    Index lookup(std::map<std::string, Index> const& at, std::string const& s) {
      auto it = at.find(s);
      if (it == at.end()) {
        bad("unknown element '" + s + "' in table");
      }
      return it->second;
    }

    std::map<std::string, Index> positions(std::vector<std::string> const& xs) {
      std::map<std::string, Index> at;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        at.emplace(xs[i], static_cast<Index>(i));
      }
      return at;
    }

    void check_square(Tables const& t) {
      auto n = t.elements.size();
      auto ok = [&](auto const& m) {
        return m.size() == n
               && std::all_of(m.begin(), m.end(), [&](auto const& r) {
                    return r.size() == n;
                  });
      };
      if (!ok(t.add) || !ok(t.mul)) {
        bad("tables are not square over the element list");
      }
    }

    void text_grid(std::string&                           out,
                   char                                   op,
                   std::vector<std::string> const&        el,
                   std::vector<std::vector<Index>> const& m) {
      std::size_t w = 1;
      for (auto const& e : el) {
        w = std::max(w, e.size());
      }
      auto line = [&](std::string const& head, auto cell) {
        std::string l = padded(head, w) + " |";
        for (std::size_t c = 0; c < el.size(); ++c) {
          l += ' ' + padded(cell(c), w);
        }
        out += l.substr(0, l.find_last_not_of(' ') + 1) + '\n';
      };
      line(std::string(1, op), [&](std::size_t c) { return el[c]; });
      for (std::size_t i = 0; i < el.size(); ++i) {
        line(el[i], [&](std::size_t c) { return el[m[i][c]]; });
      }
    }

  }  // namespace

  std::string render_partition(FiniteSemiring const& s, Partition const& p) {
    std::string out;
    std::size_t singles = 0;
    for (auto const& block : p.blocks()) {
      if (block.size() == 1) {
        ++singles;
        continue;
      }
      if (!out.empty()) {
        out += " | ";
      }
      out += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        out += (i ? "," : "") + s.label(block[i]);
      }
      out += '}';
    }
    if (singles > 0) {
      out += (out.empty() ? "" : " | ") + std::to_string(singles)
             + " singleton blocks";
    }
    return out;
  }

  Tables tables_of(FiniteSemiring const& s, int n, std::string subset) {
    Tables t;
    t.n        = n;
    t.subset   = std::move(subset);
    t.elements = s.labels();
    auto const k = static_cast<Index>(s.order());
    t.add.assign(k, std::vector<Index>(k));
    t.mul.assign(k, std::vector<Index>(k));
    for (Index x = 0; x < k; ++x) {
      for (Index y = 0; y < k; ++y) {
        t.add[x][y] = s.add(x, y);
        t.mul[x][y] = s.mul(x, y);
      }
    }
    return t;
  }

  std::string render(Tables const& t, Format f) {
    switch (f) {
      case Format::Json: {
        Json j        = json_head("tables");
        j["n"]        = t.n;
        j["subset"]   = t.subset.empty() ? Json() : Json(t.subset);
        j["elements"] = t.elements;
        j["add"]      = t.add;
        j["mul"]      = t.mul;
        return j.dump(2) + "\n";
      }
      case Format::Csv: {
        Row head{"n", "subset", "table", "left"};
        head.insert(head.end(), t.elements.begin(), t.elements.end());
        std::string out = csv_line(head);
        for (auto [name, m] : {std::pair{"add", &t.add}, {"mul", &t.mul}}) {
          for (std::size_t i = 0; i < t.elements.size(); ++i) {
            Row r{std::to_string(t.n), t.subset, name, t.elements[i]};
            for (Index v : (*m)[i]) {
              r.push_back(t.elements[v]);
            }
            out += csv_line(r);
          }
        }
        return out;
      }
      case Format::Text: {
        std::string out = "n: " + std::to_string(t.n) + "\n";
        out += "subset: " + subset_text(t.subset) + "\n";
        out += "order: " + std::to_string(t.elements.size()) + "\n";
        out += "addition (row + column):\n";
        text_grid(out, '+', t.elements, t.add);
        out += "multiplication (row * column):\n";
        text_grid(out, '*', t.elements, t.mul);
        return out;
      }
    }
    return {};
  }

  Tables parse_tables(std::string_view text, Format f) {
    Tables t;
    if (f == Format::Json) {
      Json j = json_doc(text, "tables");
      try {
        t.n        = j.at("n").get<int>();
        t.subset   = j.at("subset").is_null() ? "" : j.at("subset").get<std::string>();
        t.elements = j.at("elements").get<std::vector<std::string>>();
        t.add      = j.at("add").get<std::vector<std::vector<Index>>>();
        t.mul      = j.at("mul").get<std::vector<std::vector<Index>>>();
      } catch (nlohmann::json::exception const& e) {
        bad(std::string("malformed tables document: ") + e.what());
      }
      check_square(t);
      for (auto const* m : {&t.add, &t.mul}) {
        for (auto const& r : *m) {
          for (Index v : r) {
            if (v >= t.elements.size()) {
              bad("table entry out of range");
            }
          }
        }
      }
      return t;
    }

    if (f == Format::Csv) {
      auto rows = csv_rows(text);
      if (rows.empty() || rows[0].size() < 4 || rows[0][0] != "n") {
        bad("missing CSV header");
      }
      t.elements.assign(rows[0].begin() + 4, rows[0].end());
      auto at = positions(t.elements);
      for (std::size_t i = 1; i < rows.size(); ++i) {
        auto const& r = rows[i];
        if (r.size() != rows[0].size()) {
          bad("ragged CSV row " + std::to_string(i));
        }
        t.n      = to_int(r[0]);
        t.subset = r[1];
        if (r[2] != "add" && r[2] != "mul") {
          bad("unknown table '" + r[2] + "'");
        }
        auto& m = r[2] == "add" ? t.add : t.mul;
        if (lookup(at, r[3]) != m.size()) {
          bad("rows out of order in CSV");
        }
        std::vector<Index> row;
        for (std::size_t c = 4; c < r.size(); ++c) {
          row.push_back(lookup(at, r[c]));
        }
        m.push_back(std::move(row));
      }
      check_square(t);
      return t;
    }

    auto ls = lines_of(text);
    if (ls.size() < 4) {
      bad("truncated table text");
    }
    t.n        = to_int(value_after(ls[0], "n"));
    t.subset   = subset_from(value_after(ls[1], "subset"));
    auto order = static_cast<std::size_t>(to_int(value_after(ls[2], "order")));
    std::size_t i = 3;
    auto grid = [&](std::vector<std::vector<Index>>& m, std::string_view title) {
      if (i >= ls.size() || !starts_with(ls[i], title)) {
        bad("expected '" + std::string(title) + "'");
      }
      ++i;
      if (i >= ls.size()) {
        bad("missing table header");
      }
      auto head = words(ls[i++]);
      if (head.size() != order + 2 || head[1] != "|") {
        bad("bad table header");
      }
      std::vector<std::string> el(head.begin() + 2, head.end());
      if (t.elements.empty()) {
        t.elements = el;
      } else if (el != t.elements) {
        bad("the two tables disagree on the elements");
      }
      auto at = positions(t.elements);
      for (std::size_t r = 0; r < order; ++r, ++i) {
        if (i >= ls.size()) {
          bad("truncated table");
        }
        auto w = words(ls[i]);
        if (w.size() != order + 2 || w[1] != "|" || w[0] != t.elements[r]) {
          bad("bad table row: " + ls[i]);
        }
        std::vector<Index> row;
        for (std::size_t c = 2; c < w.size(); ++c) {
          row.push_back(lookup(at, w[c]));
        }
        m.push_back(std::move(row));
      }
    };
    grid(t.add, "addition");
    grid(t.mul, "multiplication");
    return t;
  }

  //////////////////////////////////////////////////////////////////////////

  Catalog catalog_of(FiniteSemiring const&    s,
                     std::vector<Endo> const& elems,
                     int                      n,
                     std::string              subset) {
    Catalog c;
    c.n      = n;
    c.subset = std::move(subset);
    auto const identity = find_identity(s);
    auto const infinity = find_infinity(s);
    auto const d        = elems.empty() ? Diamond(4) : elems.front().diamond();
    for (auto const& r : classify(s)) {
      CatalogEntry e;
      e.index = r.index;
      e.tuple = elems.at(r.index).to_string();
      for (Element x : elems[r.index].image()) {
        e.image.push_back(d.render(x));
      }
      auto flag = [&](bool on, char const* name) {
        if (on) {
          e.flags.emplace_back(name);
        }
      };
      flag(r.is_zero, "zero");
      flag(identity == r.index, "identity");
      flag(infinity == r.index, "infinity");
      flag(r.nilpotent, "nilpotent");
      flag(r.left_zero_divisor, "left-zero-divisor");
      flag(r.right_zero_divisor, "right-zero-divisor");
      flag(r.regular, "regular");
      flag(r.invertible, "invertible");
      flag(r.add_idempotent, "add-idempotent");
      flag(r.mul_idempotent, "mul-idempotent");
      e.nilpotency_index = r.nilpotency_index;
      for (Index p : r.powers) {
        e.powers.push_back(elems.at(p).to_string());
      }
      e.orbit_index  = r.orbit_index;
      e.orbit_period = r.orbit_period;
      c.entries.push_back(std::move(e));
    }
    return c;
  }

  namespace {

    std::string list_or_dash(std::vector<std::string> const& xs) {
      return xs.empty() ? "-" : joined(xs);
    }
    std::vector<std::string> list_from(std::string const& s) {
      return s == "-" ? std::vector<std::string>{} : words(s);
    }

    Row catalog_row(CatalogEntry const& e) {
      return {std::to_string(e.index),
              e.tuple,
              joined(e.image),
              list_or_dash(e.flags),
              e.nilpotency_index ? std::to_string(*e.nilpotency_index) : "-",
              std::to_string(e.orbit_index),
              std::to_string(e.orbit_period),
              joined(e.powers)};
    }

    CatalogEntry catalog_entry(Row const& r) {
      if (r.size() != 8) {
        bad("catalog rows have 8 fields");
      }
      CatalogEntry e;
      e.index = static_cast<Index>(to_int(r[0]));
      e.tuple = r[1];
      e.image = words(r[2]);
      e.flags = list_from(r[3]);
      if (r[4] != "-") {
        e.nilpotency_index = static_cast<unsigned>(to_int(r[4]));
      }
      e.orbit_index  = static_cast<unsigned>(to_int(r[5]));
      e.orbit_period = static_cast<unsigned>(to_int(r[6]));
      e.powers       = words(r[7]);
      return e;
    }

    Row const kCatalogHead = {"index", "tuple", "image", "flags",
                              "nilpotency", "orbit_index", "orbit_period",
                              "powers"};

  }  // namespace

  std::string render(Catalog const& c, Format f) {
    switch (f) {
      case Format::Json: {
        Json j      = json_head("catalog");
        j["n"]      = c.n;
        j["subset"] = c.subset.empty() ? Json() : Json(c.subset);
        Json list   = Json::array();
        for (auto const& e : c.entries) {
          Json x;
          x["index"]            = e.index;
          x["tuple"]            = e.tuple;
          x["image"]            = e.image;
          x["flags"]            = e.flags;
          x["nilpotency_index"] = e.nilpotency_index ? Json(*e.nilpotency_index)
                                                     : Json();
          x["powers"]           = e.powers;
          x["orbit_index"]      = e.orbit_index;
          x["orbit_period"]     = e.orbit_period;
          list.push_back(std::move(x));
        }
        j["elements"] = std::move(list);
        return j.dump(2) + "\n";
      }
      case Format::Csv: {
        Row head{"n", "subset"};
        head.insert(head.end(), kCatalogHead.begin(), kCatalogHead.end());
        std::string out = csv_line(head);
        for (auto const& e : c.entries) {
          Row r{std::to_string(c.n), c.subset};
          auto body = catalog_row(e);
          r.insert(r.end(), body.begin(), body.end());
          out += csv_line(r);
        }
        return out;
      }
      case Format::Text: {
        std::vector<Row> rows{kCatalogHead};
        for (auto const& e : c.entries) {
          rows.push_back(catalog_row(e));
        }
        std::vector<std::size_t> w(kCatalogHead.size(), 0);
        for (auto const& r : rows) {
          for (std::size_t i = 0; i < r.size(); ++i) {
            w[i] = std::max(w[i], r[i].size());
          }
        }
        std::string out = "n: " + std::to_string(c.n) + "\n";
        out += "subset: " + subset_text(c.subset) + "\n";
        out += "elements: " + std::to_string(c.entries.size()) + "\n";
        for (auto const& r : rows) {
          std::string line;
          for (std::size_t i = 0; i < r.size(); ++i) {
            line += i == 0 ? "" : " | ";
            line += i + 1 == r.size() ? r[i] : padded(r[i], w[i]);
          }
          out += line + "\n";
        }
        return out;
      }
    }
    return {};
  }

  Catalog parse_catalog(std::string_view text, Format f) {
    Catalog c;
    if (f == Format::Json) {
      Json j = json_doc(text, "catalog");
      try {
        c.n      = j.at("n").get<int>();
        c.subset = j.at("subset").is_null() ? "" : j.at("subset").get<std::string>();
        for (auto const& x : j.at("elements")) {
          CatalogEntry e;
          e.index  = x.at("index").get<Index>();
          e.tuple  = x.at("tuple").get<std::string>();
          e.image  = x.at("image").get<std::vector<std::string>>();
          e.flags  = x.at("flags").get<std::vector<std::string>>();
          if (!x.at("nilpotency_index").is_null()) {
            e.nilpotency_index = x.at("nilpotency_index").get<unsigned>();
          }
          e.powers       = x.at("powers").get<std::vector<std::string>>();
          e.orbit_index  = x.at("orbit_index").get<unsigned>();
          e.orbit_period = x.at("orbit_period").get<unsigned>();
          c.entries.push_back(std::move(e));
        }
      } catch (nlohmann::json::exception const& e) {
        bad(std::string("malformed catalog document: ") + e.what());
      }
      return c;
    }
    if (f == Format::Csv) {
      auto rows = csv_rows(text);
      if (rows.empty() || rows[0].size() != 10 || rows[0][0] != "n") {
        bad("missing CSV header");
      }
      for (std::size_t i = 1; i < rows.size(); ++i) {
        auto const& r = rows[i];
        if (r.size() != 10) {
          bad("ragged CSV row " + std::to_string(i));
        }
        c.n      = to_int(r[0]);
        c.subset = r[1];
        c.entries.push_back(catalog_entry(Row(r.begin() + 2, r.end())));
      }
      return c;
    }
    auto ls = lines_of(text);
    if (ls.size() < 4) {
      bad("truncated catalog text");
    }
    c.n        = to_int(value_after(ls[0], "n"));
    c.subset   = subset_from(value_after(ls[1], "subset"));
    auto count = static_cast<std::size_t>(to_int(value_after(ls[2], "elements")));
    if (ls.size() != count + 4) {
      bad("catalog text has the wrong number of rows");
    }
    for (std::size_t i = 4; i < ls.size(); ++i) {
      Row         r;
      std::size_t start = 0;
      while (true) {
        auto bar = ls[i].find(" | ", start);
        r.push_back(trim(std::string_view(ls[i]).substr(
            start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) {
          break;
        }
        start = bar + 3;
      }
      c.entries.push_back(catalog_entry(r));
    }
    return c;
  }

}  // namespace diamond
