#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diamond/endo.hpp"
#include "diamond/verify.hpp"

namespace diamond {

  enum class Format : std::uint8_t { Text, Csv, Json };

  // Throws ParseError for anything but "text", "csv", "json".
  Format      parse_format(std::string_view text);
  std::string to_string(Format f);

  // Bumped whenever a field changes meaning or disappears.
  inline constexpr int kSchemaVersion = 1;

  //////////////////////////////////////////////////////////////////////////
  // Cayley tables
  //////////////////////////////////////////////////////////////////////////

  struct Tables {
    int                             n = 0;
    std::string                     subset;   // empty for the whole semiring
    std::vector<std::string>        elements;
    std::vector<std::vector<Index>> add;   // row is the left operand
    std::vector<std::vector<Index>> mul;

    bool operator==(Tables const&) const = default;
  };

  Tables tables_of(FiniteSemiring const& s, int n, std::string subset = {});

  // Non-singleton blocks as "{x,y} | {z,w}", then a count of singletons.
  std::string render_partition(FiniteSemiring const& s, Partition const& p);

  //////////////////////////////////////////////////////////////////////////
  // Element catalog
  //////////////////////////////////////////////////////////////////////////

  struct CatalogEntry {
    Index                    index = 0;
    std::string              tuple;
    std::vector<std::string> image;
    std::vector<std::string> flags;   // fixed vocabulary, see catalog_of
    std::optional<unsigned>  nilpotency_index;
    std::vector<std::string> powers;   // x, x^2, ... until the cycle closes
    unsigned                 orbit_index  = 0;
    unsigned                 orbit_period = 0;

    bool operator==(CatalogEntry const&) const = default;
  };

  struct Catalog {
    int                       n = 0;
    std::string               subset;
    std::vector<CatalogEntry> entries;

    bool operator==(Catalog const&) const = default;
  };

  // elems[i] is element i of s. Flags, in this order when present: zero,
  // identity, infinity, nilpotent, left-zero-divisor, right-zero-divisor,
  // regular, invertible, add-idempotent, mul-idempotent.
  Catalog catalog_of(FiniteSemiring const&    s,
                     std::vector<Endo> const& elems,
                     int                      n,
                     std::string              subset = {});

  //////////////////////////////////////////////////////////////////////////
  // Subset query
  //////////////////////////////////////////////////////////////////////////

  // Properties of a named subset. Fields after `closed` describe the
  // restricted semiring and are empty when the subset is not closed.
  struct SubsetReport {
    int                        n = 0;
    std::string                subset;
    std::vector<std::string>   members;
    bool                       closed = false;
    std::string                closure_witness;   // "x + y = r" when open
    std::string                ideal_kind;        // inside the ambient
    std::optional<std::string> zero;
    std::optional<std::string> identity;
    std::optional<std::string> infinity;
    std::optional<bool>        ideal_simple;
    std::optional<bool>        congruence_simple;
    std::vector<std::string>   proper_ideal;       // witness, if any
    std::string                proper_congruence;  // rendered blocks, if any

    bool operator==(SubsetReport const&) const = default;
  };

  //////////////////////////////////////////////////////////////////////////
  // Rendering and parsing back
  //////////////////////////////////////////////////////////////////////////

  std::string render(Tables const& t, Format f);
  std::string render(Catalog const& c, Format f);
  std::string render(SubsetReport const& r, Format f);
  // Wall times appear only with timings set; without them the output is
  // identical across runs.
  std::string render(std::vector<ClaimReport> const& reports,
                     Format                          f,
                     bool                            timings = false);

  // Inverses of render. Throw ParseError on malformed input.
  Tables                   parse_tables(std::string_view text, Format f);
  Catalog                  parse_catalog(std::string_view text, Format f);
  SubsetReport             parse_subset_report(std::string_view text, Format f);
  std::vector<ClaimReport> parse_reports(std::string_view text, Format f);

}  // namespace diamond
