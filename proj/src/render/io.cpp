#include "io.hpp"

#include <charconv>

#include "diamond/errors.hpp"

namespace diamond {

  Format parse_format(std::string_view text) {
    if (text == "text") {
      return Format::Text;
    }
    if (text == "csv") {
      return Format::Csv;
    }
    if (text == "json") {
      return Format::Json;
    }
    throw ParseError("unknown format '" + std::string(text)
                     + "' (expected text, csv or json)");
  }

  std::string to_string(Format f) {
    switch (f) {
      case Format::Text: return "text";
      case Format::Csv: return "csv";
      case Format::Json: return "json";
    }
    return "?";
  }

}  // namespace diamond

namespace diamond::detail {

  void bad(std::string const& what) {
    throw ParseError(what);
  }

  namespace {

    bool plain(std::string_view s) {
      if (s.empty()) {
        return true;
      }
      for (char ch : s) {
        bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z')
                  || (ch >= '0' && ch <= '9') || ch == '_' || ch == '-'
                  || ch == '.';
        if (!ok) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::string csv_line(Row const& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      auto const& f = fields[i];
      if (plain(f)) {
        out += f;
        continue;
      }
      out += '"';
      for (char ch : f) {
        if (ch == '"') {
          out += '"';
        }
        out += ch;
      }
      out += '"';
    }
    out += '\n';
    return out;
  }

  std::vector<Row> csv_rows(std::string_view text) {
    std::vector<Row> rows;
    Row              row;
    std::string      field;
    bool             quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (quoted) {
        if (ch == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += ch;
        }
        continue;
      }
      if (ch == '"') {
        quoted = true;
        any    = true;
      } else if (ch == ',') {
        row.push_back(std::move(field));
        field.clear();
        any = true;
      } else if (ch == '\n') {
        if (any || !field.empty()) {
          row.push_back(std::move(field));
          rows.push_back(std::move(row));
        }
        row.clear();
        field.clear();
        any = false;
      } else if (ch != '\r') {
        field += ch;
        any = true;
      }
    }
    if (quoted) {
      bad("unterminated quote in CSV");
    }
    if (any || !field.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::size_t              start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        if (start < text.size()) {
          out.emplace_back(text.substr(start));
        }
        break;
      }
      out.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
    return out;
  }

  std::vector<std::string> words(std::string_view text) {
    std::vector<std::string> out;
    std::size_t              i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ') {
        ++j;
      }
      if (j > i) {
        out.emplace_back(text.substr(i, j - i));
      }
      i = j;
    }
    return out;
  }

  std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
      return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
  }

  std::string joined(std::vector<std::string> const& xs, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) {
        out += sep;
      }
      out += xs[i];
    }
    return out;
  }

  bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
  }

  std::string value_after(std::string const& line, std::string_view key) {
    std::string const head = std::string(key) + ":";
    if (!starts_with(line, head)) {
      bad("expected '" + head + "' but found '" + line + "'");
    }
    return trim(std::string_view(line).substr(head.size()));
  }

  int to_int(std::string_view s) {
    int  v  = 0;
    auto rc = std::from_chars(s.data(), s.data() + s.size(), v);
    if (rc.ec != std::errc() || rc.ptr != s.data() + s.size()) {
      bad("expected an integer, found '" + std::string(s) + "'");
    }
    return v;
  }

  Json json_head(std::string_view kind) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"]           = kind;
    return j;
  }

  Json json_doc(std::string_view text, std::string_view kind) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("schema_version", 0) != kSchemaVersion) {
      bad("unsupported schema_version");
    }
    if (j.value("kind", std::string()) != kind) {
      bad("expected a '" + std::string(kind) + "' document");
    }
    return j;
  }

}  // namespace diamond::detail
