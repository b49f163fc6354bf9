#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "diamond/cli.hpp"
#include "diamond/families.hpp"

namespace diamond {

  namespace {

    struct Options {
      int                      n = 4;
      std::vector<int>         ns;
      std::string              subset;
      std::vector<std::string> claims;
      std::string              format = "text";
      std::string              out_path;
      bool                     timings = false;
      std::string              what;
    };

    void add_common(CLI::App* cmd, Options& o) {
      cmd->add_option("--format", o.format, "Output format")
          ->check(CLI::IsMember({"text", "csv", "json"}));
      cmd->add_option("--out", o.out_path, "Write to this file instead of stdout");
    }

    std::string range_text(ClaimInfo const& c) {
      std::string r = "n >= " + std::to_string(c.min_n);
      if (c.max_n != 0) {
        r = c.min_n == c.max_n ? "n = " + std::to_string(c.min_n)
                               : std::to_string(c.min_n)
                                     + " <= n <= " + std::to_string(c.max_n);
      }
      return r;
    }

    std::string listing(std::string const& what) {
      std::string out;
      if (what == "claims") {
        for (auto const& c : registry()) {
          out += std::string(c.id) + "  [" + range_text(c) + "]  "
                 + std::string(c.statement) + "\n";
        }
        return out;
      }
      auto params = [](ParamKind k) {
        switch (k) {
          case ParamKind::None: return "";
          case ParamKind::Index: return ":i";
          case ParamKind::Pair: return ":i,j";
          case ParamKind::IndexSet: return ":i,j,...";
        }
        return "";
      };
      out += "subsets:\n";
      for (auto const& f : subset_families()) {
        out += "  " + std::string(f.name) + params(f.params) + "  "
               + std::string(f.summary) + "\n";
      }
      out += "elements:\n";
      for (auto const& f : element_families()) {
        out += "  " + std::string(f.name) + params(f.params) + "  "
               + std::string(f.summary) + "\n";
      }
      return out;
    }

  }  // namespace

  int run_cli(int          argc,
              char const*  argv[],
              std::ostream& out,
              std::ostream& err,
              char const*   cap_env) {
    CLI::App app{"Endomorphism semirings of the diamond semilattice"};
    app.require_subcommand(1);
    Options o;

    auto* tables = app.add_subcommand("tables", "Addition and multiplication tables");
    tables->add_option("--n", o.n, "Order of the diamond")->required();
    tables->add_option("--subset", o.subset, "Named family, e.g. SI:1 or Eset:1,2");
    add_common(tables, o);

    auto* verify = app.add_subcommand("verify", "Run the claim suite");
    verify->add_option("--n", o.ns, "Orders, comma separated")
        ->required()
        ->delimiter(',');
    verify->add_option("--claims", o.claims, "Claim ids, comma separated")
        ->delimiter(',');
    verify->add_flag("--timings", o.timings, "Include wall times");
    add_common(verify, o);

    auto* classify = app.add_subcommand("classify", "Per-element catalog");
    classify->add_option("--n", o.n, "Order of the diamond")->required();
    classify->add_option("--subset", o.subset, "Restrict to a named family");
    add_common(classify, o);

    auto* subset = app.add_subcommand("subset", "Properties of a named subset");
    subset->add_option("--n", o.n, "Order of the diamond")->required();
    subset->add_option("--subset", o.subset, "Named family")->required();
    add_common(subset, o);

    auto* list = app.add_subcommand("list", "List claims or families");
    list->add_option("what", o.what, "claims or families")
        ->required()
        ->check(CLI::IsMember({"claims", "families"}));

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    try {
      int const    cap  = cap_from_env(cap_env);
      Format const f    = parse_format(o.format);
      std::string  text;
      int          code = kExitOk;
      if (*tables) {
        text = cmd_tables(cap, o.n, o.subset, f);
      } else if (*verify) {
        auto v = cmd_verify(cap, o.ns, o.claims, f, o.timings);
        text   = std::move(v.text);
        code   = v.any_fail ? kExitFail : kExitOk;
      } else if (*classify) {
        text = cmd_classify(cap, o.n, o.subset, f);
      } else if (*subset) {
        text = cmd_subset(cap, o.n, o.subset, f);
      } else {
        text = listing(o.what);
      }

      if (o.out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(o.out_path);
        if (!(file << text)) {
          err << "error: cannot write " << o.out_path << "\n";
          return kExitUsage;
        }
      }
      return code;
    } catch (LawViolation const& e) {
      err << "error: " << e.what() << "\n";
      return kExitFail;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

}  // namespace diamond
