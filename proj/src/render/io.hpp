#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diamond/render.hpp"

namespace diamond::detail {

  using Json = nlohmann::ordered_json;
  using Row  = std::vector<std::string>;

  std::string      csv_line(Row const& fields);
  std::vector<Row> csv_rows(std::string_view text);

  std::vector<std::string> lines_of(std::string_view text);
  std::vector<std::string> words(std::string_view text);
  std::string              trim(std::string_view s);
  std::string              joined(std::vector<std::string> const& xs,
                                  std::string_view                sep = " ");
  // "key: value" with the key checked; throws ParseError.
  std::string value_after(std::string const& line, std::string_view key);
  bool        starts_with(std::string_view s, std::string_view prefix);
  int         to_int(std::string_view s);

  // Parses and checks schema_version and kind.
  Json json_doc(std::string_view text, std::string_view kind);
  Json json_head(std::string_view kind);

  [[noreturn]] void bad(std::string const& what);

}  // namespace diamond::detail
