#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diamond/endo.hpp"

namespace diamond {

  enum class Status : std::uint8_t { Pass, Fail, MismatchNoted, Skip };

  std::string to_string(Status s);

  // Rendered evidence: element tuples, partition blocks, table cells.
  struct Witness {
    std::string              label;
    std::vector<std::string> items;

    bool operator==(Witness const&) const = default;
  };

  struct ClaimReport {
    std::string          id;
    int                  n      = 0;
    Status               status = Status::Pass;
    std::string          summary;
    std::vector<Witness> witnesses;
    // Observations that do not decide the status, such as a statement that
    // holds for ideals but not for congruences.
    std::vector<std::string> findings;
    double                   seconds = 0.0;   // not part of equality

    // Equality ignores wall time.
    bool same_outcome(ClaimReport const& that) const;
  };

  struct ClaimInfo {
    std::string_view id;
    std::string_view statement;
    int              min_n;
    int              max_n;   // 0 means unbounded
    std::vector<std::string_view> needs;   // family names used
    // For statements about simplicity: the predicate that decides the
    // status. Empty otherwise.
    std::string_view decided_by;
  };

  // Registry order is the report order.
  std::span<ClaimInfo const> registry();

  // Every numbered statement the registry is expected to cover, plus the
  // entries deliberately left out.
  std::span<std::string_view const> numbered_statements();
  std::span<std::string_view const> out_of_scope();

  // Caches the full semiring for each order. Not thread-safe.
  class Session {
   public:
    explicit Session(int cap = kDefaultSemiringCap) : _cap(cap) {}

    EndoSemiring const& semiring(int n);
    int                 cap() const noexcept {
      return _cap;
    }

   private:
    int                                          _cap;
    std::map<int, std::unique_ptr<EndoSemiring>> _cache;
  };

  // Throws UnknownClaim. Orders outside the claim's range give Skip; orders
  // above the session cap throw CapExceeded.
  ClaimReport run_claim(Session& session, std::string_view id, int n);

  // Registry order, then n ascending. An empty filter means every claim;
  // unknown ids in the filter throw UnknownClaim.
  std::vector<ClaimReport> run_all(Session&                        session,
                                   std::vector<int> const&         ns,
                                   std::vector<std::string> const& filter = {});

  struct Summary {
    std::size_t pass     = 0;
    std::size_t fail     = 0;
    std::size_t mismatch = 0;
    std::size_t skip     = 0;
  };

  Summary summarize(std::vector<ClaimReport> const& reports);

  //////////////////////////////////////////////////////////////////////////
  // Printed order-4 tables
  //////////////////////////////////////////////////////////////////////////

  // Tuples as printed, three characters over {0,a,b,1}, e.g. "0aa".
  struct ReferenceTables {
    std::vector<std::string>              order;   // header row
    std::vector<std::vector<std::string>> add;
    std::vector<std::vector<std::string>> mul;
  };

  ReferenceTables const& printed_order4_tables();

  // "0aa" to an endomorphism of the order-4 diamond; a, b are a1, a2.
  Endo parse_short(Diamond d4, std::string_view text);
  std::string to_short(Endo const& e);

  struct CellMismatch {
    std::string row, col, printed, computed;
  };

  struct TableComparison {
    std::vector<CellMismatch> add;
    std::vector<CellMismatch> mul;
    bool                      same_elements = true;
  };

  TableComparison compare_with_printed(EndoSemiring const& e4);

  inline constexpr std::size_t kTypoTolerance = 5;

}  // namespace diamond
