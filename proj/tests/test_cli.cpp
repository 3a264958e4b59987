#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "keane/cli.hpp"
#include "keane/params_json.hpp"
#include "keane/rules.hpp"

using namespace keane;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult result;
  result.code = cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() /
         (stem + "-" + std::to_string(::getpid()) + ".tmp");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path);
  file << text;
  REQUIRE(file.good());
}

}  // namespace

TEST_CASE("params emits JSON that round-trips through the parser") {
  const RunResult direct = run_cli({"params", "--rule", "appendix", "--K", "3"});
  CHECK(direct.code == 0);
  const ParamSeq parsed = params_from_json(direct.out);
  CHECK(parsed.pairs == rule_appendix(3).pairs);
  CHECK(parsed.rule == "appendix");

  // Feeding the emitted file back reproduces it byte for byte.
  const auto file = temp_file("keane-params");
  write_file(file, direct.out);
  const RunResult relayed = run_cli({"params", "--params", file.string()});
  CHECK(relayed.code == 0);
  CHECK(relayed.out == direct.out);
  std::filesystem::remove(file);
}

TEST_CASE("usage problems exit with code 2 and a message") {
  const std::vector<std::vector<std::string>> bad_invocations = {
      {},                                                       // no subcommand
      {"frobnicate"},                                           // unknown subcommand
      {"params"},                                               // no parameter source
      {"params", "--rule", "generic"},                          // missing --K
      {"params", "--rule", "generic", "--K", "0"},              // K out of range
      {"params", "--rule", "no-such-rule", "--K", "3"},         // unknown rule
      {"params", "--rule", "alpha2", "--K", "3"},               // alpha missing
      {"params", "--rule", "alpha2", "--K", "3", "--alpha", "3/2"},  // alpha > 1
      {"params", "--rule", "generic", "--K", "abc"},            // unparsable int
      {"params", "--params", "/no/such/file.json"},             // unreadable file
      {"params", "--params", "a.json", "--rule", "generic", "--K", "2"},  // two sources
      {"verify", "--rule", "generic", "--K", "4", "--bogus"},   // unknown option
      {"dimension", "--rule", "generic", "--K", "4"},           // missing --direction
      {"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat"},  // no --y
      {"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat", "--y", "1/3"},
      // sampling without a seed ^, fixed point with samples v
      {"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat", "--y", "1/3",
       "--x", "1/7", "--samples", "2"},
      {"recurrence", "--rule", "appendix", "--K", "4", "--check", "bogus", "--y", "1/3"},
  };
  for (const auto& args : bad_invocations) {
    CAPTURE(args.empty() ? std::string("<empty>") : args[0]);
    const RunResult result = run_cli(args);
    CHECK(result.code == 2);
    CHECK(!result.err.empty());
  }
}

TEST_CASE("a certified negative verdict exits with code 1") {
  // Threshold zero can never be undercut, so the statistic check must fail.
  const RunResult result =
      run_cli({"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat", "--level",
               "1", "--y", "1/3", "--x", "1/7", "--N", "5", "--threshold", "0"});
  CHECK(result.code == 1);
  CHECK(result.out.find("verdict=FAIL") != std::string::npos);
}

TEST_CASE("exhausted budgets exit with code 3") {
  ::setenv("KEANE_STEP_BUDGET", "10", 1);
  const RunResult starved =
      run_cli({"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat", "--level",
               "2", "--y", "1/3", "--x", "1/7", "--N", "5"});
  ::unsetenv("KEANE_STEP_BUDGET");
  CHECK(starved.code == 3);
  CHECK(starved.err.find("error:") != std::string::npos);

  ::setenv("KEANE_STEP_BUDGET", "not-a-number", 1);
  const RunResult garbled =
      run_cli({"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat", "--level",
               "1", "--y", "1/3", "--x", "1/7", "--N", "5"});
  ::unsetenv("KEANE_STEP_BUDGET");
  CHECK(garbled.code == 2);
}

TEST_CASE("verification summarizes verdict counts on the diagnostic stream") {
  const RunResult result =
      run_cli({"verify", "--rule", "minimal-admissible", "--K", "7", "--k-hi", "1"});
  CHECK(result.code == 0);
  CHECK(result.out.rfind("lemma_id,k,verdict,bound", 0) == 0);
  CHECK(result.err.find("32 rows, 30 pass, 2 inconclusive, 0 fail") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::vector<std::string>> invocations = {
      {"params", "--rule", "alpha3", "--K", "3", "--alpha", "1/2"},
      {"verify", "--rule", "minimal-admissible", "--K", "7", "--k-hi", "1"},
      {"dimension", "--rule", "power-m", "--K", "6", "--direction", "3", "--k-max", "2",
       "--depth", "2"},
      {"generic", "--rule", "generic", "--K", "3", "--k-hi", "2"},
      {"recurrence", "--rule", "appendix", "--K", "4", "--check", "stat", "--level", "1",
       "--y", "1/3", "--seed", "11", "--samples", "2", "--N", "8"},
  };
  for (const auto& args : invocations) {
    CAPTURE(args[0]);
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(second.code == first.code);
    CHECK(second.out == first.out);
    CHECK(!first.out.empty());
  }
}

TEST_CASE("config files expand to the equivalent command line") {
  const auto file = temp_file("keane-config");
  write_file(file, "{\"command\": \"verify\", \"rule\": \"minimal-admissible\", \"K\": 7, "
                   "\"k-hi\": 1, \"no-cones\": false}\n");
  const RunResult via_config = run_cli({"--config", file.string()});
  const RunResult direct =
      run_cli({"verify", "--rule", "minimal-admissible", "--K", "7", "--k-hi", "1"});
  CHECK(via_config.code == direct.code);
  CHECK(via_config.out == direct.out);
  std::filesystem::remove(file);

  // Config problems are usage errors.
  const auto bad = temp_file("keane-config-bad");
  write_file(bad, "{\"command\": \"verify\", \"levels\": [1, 2]}\n");
  CHECK(run_cli({"--config", bad.string()}).code == 2);
  write_file(bad, "{\"rule\": \"generic\"}\n");
  CHECK(run_cli({"--config", bad.string()}).code == 2);
  write_file(bad, "{\"command\": \"verify\", \"config\": \"x\"}\n");
  CHECK(run_cli({"--config", bad.string()}).code == 2);
  write_file(bad, "not json\n");
  CHECK(run_cli({"--config", bad.string()}).code == 2);
  std::filesystem::remove(bad);

  CHECK(run_cli({"--config"}).code == 2);
  CHECK(run_cli({"--config", "a.json", "extra"}).code == 2);
  CHECK(run_cli({"verify", "--config", "a.json"}).code == 2);
  CHECK(run_cli({"--config", "/no/such/config.json"}).code == 2);
}

TEST_CASE("csv output can be redirected to a file") {
  const auto file = temp_file("keane-csv");
  const RunResult redirected = run_cli({"verify", "--rule", "minimal-admissible", "--K", "7",
                                        "--k-hi", "0", "--csv", file.string()});
  CHECK(redirected.code == 0);
  CHECK(redirected.out.empty());
  const RunResult inline_out =
      run_cli({"verify", "--rule", "minimal-admissible", "--K", "7", "--k-hi", "0"});
  std::ifstream in(file);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == inline_out.out);
  std::filesystem::remove(file);
}

TEST_CASE("help is available and exits cleanly") {
  const RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("params") != std::string::npos);
  CHECK(help.out.find("recurrence") != std::string::npos);
}
