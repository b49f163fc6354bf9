#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diamond/cli.hpp"
#include "diamond/families.hpp"

using namespace diamond;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run cli(std::vector<std::string> args, char const* cap = nullptr) {
    args.insert(args.begin(), "diamond");
    std::vector<char const*> argv;
    for (auto const& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, cap);
    return {code, out.str(), err.str()};
  }

  // The installed binary, through the shell.
  int shell(std::string const& args, std::string const& env = "") {
    std::string cmd = env + " " + DIAMOND_BIN + " " + args + " >/dev/null 2>&1";
    int         rc  = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  std::filesystem::path temp(char const* name) {
    return std::filesystem::temp_directory_path() / name;
  }

}  // namespace

TEST_CASE("order-4 tables in text") {
  auto r = cli({"tables", "--n", "4"});
  REQUIRE(r.code == kExitOk);
  auto t = parse_tables(r.out, Format::Text);
  CHECK(t.elements.size() == 16);
  CHECK(t == tables_of(EndoSemiring::build(Diamond(4)).semiring(), 4));
}

TEST_CASE("SI(a1) tables at order 5") {
  auto r = cli({"tables", "--n", "5", "--subset", "SI:1"});
  REQUIRE(r.code == kExitOk);
  auto t = parse_tables(r.out, Format::Text);
  CHECK(t.elements
        == std::vector<std::string>{"(0,1,1,1)", "(a1,1,1,1)", "(1,1,1,1)"});
  CHECK(t.add == std::vector<std::vector<Index>>{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  CHECK(t.mul == std::vector<std::vector<Index>>{{0, 0, 0}, {0, 1, 2}, {2, 2, 2}});
}

TEST_CASE("E01 as json has four elements at order 4") {
  auto r = cli({"tables", "--n", "4", "--subset", "E01", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse_tables(r.out, Format::Json).elements.size() == 4);
}

TEST_CASE("restricted families above the cap come from formulas") {
  auto r = cli({"tables", "--n", "10", "--subset", "SI:1", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(parse_tables(r.out, Format::Csv).elements.size() == 3);
  CHECK(cli({"tables", "--n", "10"}).code == kExitUsage);
  CHECK(cli({"tables", "--n", "9", "--subset", "MAX"}).code == kExitUsage);
}

TEST_CASE("classify at order 4") {
  auto r = cli({"classify", "--n", "4", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto c   = parse_catalog(r.out, Format::Json);
  int  nil = 0, inv = 0;
  for (auto const& e : c.entries) {
    auto has = [&](char const* f) {
      return std::find(e.flags.begin(), e.flags.end(), f) != e.flags.end();
    };
    nil += has("nilpotent");
    inv += has("invertible");
    if (e.tuple == "(0,0,0)") {
      CHECK(has("zero"));
      CHECK_FALSE((has("left-zero-divisor") || has("right-zero-divisor")));
    }
  }
  CHECK(c.entries.size() == 16);
  CHECK(nil == 2);
  CHECK(inv == 2);
}

TEST_CASE("Example 3.2 through verify") {
  auto r = cli({"verify", "--n", "4", "--claims", "Example 3.2"});
  CHECK(r.code == kExitOk);
  auto reps = parse_reports(r.out, Format::Text);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].status == Status::MismatchNoted);
  CHECK(r.out.find("congruence-simple yes, ideal-simple yes") != std::string::npos);
  CHECK(r.out.find("mul") != std::string::npos);
}

TEST_CASE("full suite as json") {
  auto r    = cli({"verify", "--n", "4,5,6", "--format", "json"});
  auto reps = parse_reports(r.out, Format::Json);
  CHECK(reps.size() == 3 * registry().size());
  bool any_fail = summarize(reps).fail > 0;
  CHECK(r.code == (any_fail ? kExitFail : kExitOk));
}

TEST_CASE("verify exit status follows the outcome") {
  CHECK(cli({"verify", "--n", "5", "--claims", "Prop 4.4"}).code == kExitOk);
  CHECK(cli({"verify", "--n", "4", "--claims", "Lemma 3.5"}).code == kExitFail);
  auto bogus = cli({"verify", "--n", "5", "--claims", "bogus"});
  CHECK(bogus.code == kExitUsage);
  CHECK(bogus.err.find("bogus") != std::string::npos);
}

TEST_CASE("subset command") {
  auto r = cli({"subset", "--n", "5", "--subset", "MAX", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto rep = parse_subset_report(r.out, Format::Json);
  CHECK(rep.members.size() == 44);
  CHECK(rep.ideal_kind == "two_sided");
  CHECK(rep.closed);

  auto open = parse_subset_report(cli({"subset", "--n", "5", "--subset", "P"}).out,
                                  Format::Text);
  CHECK_FALSE(open.closed);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"tables"}).code == kExitUsage);
  CHECK(cli({"tables", "--n", "3"}).code == kExitUsage);
  CHECK(cli({"tables", "--n", "4", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"tables", "--n", "4", "--subset", "Nope"}).code == kExitUsage);
  CHECK(cli({"tables", "--n", "5", "--subset", "P"}).code == kExitUsage);
  CHECK(cli({"list", "things"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cap from the environment") {
  CHECK(cap_from_env(nullptr) == kDefaultSemiringCap);
  CHECK(cap_from_env("") == kDefaultSemiringCap);
  CHECK(cap_from_env("5") == 5);
  CHECK_THROWS_AS(cap_from_env("9"), CapExceeded);
  CHECK_THROWS_AS(cap_from_env("3"), CapExceeded);
  CHECK_THROWS_AS(cap_from_env("7x"), ParseError);
  CHECK(cli({"tables", "--n", "6"}, "5").code == kExitUsage);
  CHECK(cli({"tables", "--n", "5"}, "5").code == kExitOk);
  CHECK(cli({"tables", "--n", "4"}, "junk").code == kExitUsage);
}

TEST_CASE("--out writes the file") {
  auto path = temp("diamond_cli_out.csv");
  std::filesystem::remove(path);
  auto r = cli({"classify", "--n", "4", "--format", "csv", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream     in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_catalog(buf.str(), Format::Csv).entries.size() == 16);
  std::filesystem::remove(path);
  CHECK(cli({"tables", "--n", "4", "--out", "/nonexistent/dir/x"}).code == kExitUsage);
}

TEST_CASE("list") {
  auto claims = cli({"list", "claims"});
  CHECK(claims.code == kExitOk);
  CHECK(claims.out.find("Thm 7.5") != std::string::npos);
  auto fams = cli({"list", "families"});
  CHECK(fams.out.find("SI:i") != std::string::npos);
}

TEST_CASE("exit codes of the binary") {
  CHECK(shell("tables --n 4") == 0);
  CHECK(shell("verify --n 5 --claims 'Prop 4.4'") == 0);
  CHECK(shell("verify --n 4 --claims 'Lemma 3.5'") == 1);
  CHECK(shell("verify --n 5 --claims bogus") == 2);
  CHECK(shell("tables --n 8") == 2);
  CHECK(shell("tables --n 8", "DIAMOND_MAX_N=9") == 2);
  CHECK(shell("frobnicate") == 2);
}
