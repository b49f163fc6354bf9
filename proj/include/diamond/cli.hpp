#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diamond/render.hpp"

namespace diamond {

  enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

  inline constexpr char const* kCapVariable = "DIAMOND_MAX_N";

  // Families above the cap are built from their formulas; this bounds how
  // many members such a family may have.
  inline constexpr std::size_t kFormulaOrderLimit = 2000;

  // Cap from the environment value; nullptr means the default. Throws
  // CapExceeded or ParseError for values outside [4, kSemiringHardCap].
  int cap_from_env(char const* value);

  // A semiring together with the endomorphism behind each element.
  struct Built {
    FiniteSemiring    semiring;
    std::vector<Endo> elements;
  };

  // The whole semiring for an empty subset, else the named family restricted
  // to itself. Throws CapExceeded, BadFamily or NotClosed.
  Built build_for(int cap, int n, std::string const& subset);

  std::string cmd_tables(int cap, int n, std::string const& subset, Format f);
  std::string cmd_classify(int cap, int n, std::string const& subset, Format f);
  std::string cmd_subset(int cap, int n, std::string const& subset, Format f);
  SubsetReport subset_report(int cap, int n, std::string const& subset);

  struct VerifyOutput {
    std::string text;
    bool        any_fail = false;
  };

  VerifyOutput cmd_verify(int                             cap,
                          std::vector<int> const&         ns,
                          std::vector<std::string> const& claims,
                          Format                          f,
                          bool                            timings = false);

  // Whole command line, including argument parsing. cap_env is the value of
  // DIAMOND_MAX_N or nullptr.
  int run_cli(int          argc,
              char const*  argv[],
              std::ostream& out,
              std::ostream& err,
              char const*   cap_env);

}  // namespace diamond
