#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "braidcert/cli.hpp"

namespace cli = braidcert::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "braidcert");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "braidcert_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = invoke({"floor", "3: 1 2 1 1 2 1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "floor: 1\n"));

  r = invoke({"classify3", "3: 1 -2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "normal_form: PseudoAnosov d=0 a=[1]\n"));

  r = invoke({"certify-genus1", "--word", "3: -1 -2", "--n", "6", "--assert-irreducible"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: Excellent\n"));
  CHECK(has(r.out, "justification: genus1-periodic\n"));
}

TEST_CASE("exit codes") {
  CHECK(invoke({"certify-genus1", "--word", "3: -1 -2", "--n", "6"}).code == cli::kExitUnknownOnly);
  CHECK(invoke({"certify-cover", "--word", "3: 1 -2", "--t", "2"}).code == cli::kExitUnknownOnly);
  CHECK(invoke({"floor", "3: 1 0"}).code == cli::kExitError);
  CHECK(invoke({"nonsense"}).code == cli::kExitError);
  CHECK(invoke({"order", "3: 1", "4: 1"}).code == cli::kExitError);

  const auto r = invoke({"certify-genus1", "--word", "3: 2 2", "--n", "2", "--assert-irreducible"});
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.out, "SplitBinding"));
  CHECK(has(r.err, "SplitBinding"));
}

TEST_CASE("parse errors carry a column") {
  const auto r = invoke({"--report", "json", "floor", "3: 1 x"});
  CHECK(r.code == cli::kExitError);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"] == "ParseError");
  CHECK(has(j["message"].get<std::string>(), "column 6"));
}

TEST_CASE("json output keeps rationals exact") {
  auto r = invoke({"--report", "json", "fdtc", "4: 1 2 3", "--tol", "1/6"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["fdtc"]["kind"] == "interval");
  CHECK(j["fdtc"]["lo"] == "1/6");
  CHECK(j["fdtc"]["hi"] == "1/3");

  r = invoke({"--report", "json", "certify-surgery", "--c", "1/3", "--n", "2", "--q", "0",
           "--assert-hyperbolic"});
  CHECK(r.code == cli::kExitUnknownOnly);
  j = nlohmann::json::parse(r.out);
  CHECK(j["excluded_q"] == nlohmann::json::array({"0", "1"}));
  CHECK(j["certificate"]["verdict"] == "Unknown");

  r = invoke({"--report", "json", "order", "3: 1 -2"});
  CHECK(nlohmann::json::parse(r.out)["sign"] == "Positive");
}

TEST_CASE("surgery variants") {
  auto r = invoke({"certify-surgery", "--c-lo", "2/5", "--c-hi", "3/5", "--n", "5", "--q", "0",
                "--assert-hyperbolic"});
  CHECK(r.code == 0);
  r = invoke({"certify-surgery", "--c", "1/3", "--p", "1", "--q", "0", "--m", "3", "--assert-hyperbolic"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "orbifold-cover"));
  r = invoke({"certify-surgery", "--c", "0", "--n", "6", "--q", "0", "--genus", "2", "--assert-hyperbolic",
           "--assert-nonzero"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "fibred-cover-genus-bound"));
}

TEST_CASE("satellite and lspace2") {
  auto r = invoke({"certify-satellite", "--pattern", "3: 1 -2", "--companion-zero", "--n", "2",
                "--assert-hyperbolic"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "assumption: companion c(h) is exactly 0"));
  r = invoke({"lspace2", "3: 1 -2"});
  CHECK(has(r.out, "double_cover: LSpace"));
  r = invoke({"lspace2", "3: 2 2 2 2 2"});
  CHECK(has(r.out, "double_cover: NotLSpace"));
}

TEST_CASE("corpus") {
  const auto path = write_temp("corpus.tsv",
                               "# sample\n"
                               "a\tfloor\t-\t3: 1 2 1 1 2 1\n"
                               "b\tgenus1\tn=6,irreducible=1\t3: -1 -2\n"
                               "c\tclassify3\t-\t3: 1 -2\n");
  auto r = invoke({"--report", "json", "corpus", path, "--jobs", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> ids;
  for (std::string line; std::getline(lines, line);) ids.push_back(nlohmann::json::parse(line)["id"]);
  CHECK(ids == std::vector<std::string>{"a", "b", "c"});

  // Deterministic regardless of worker count.
  CHECK(invoke({"--report", "json", "corpus", path, "--jobs", "1"}).out == r.out);

  const auto unknown = write_temp("unknown.tsv", "u\tgenus1\tn=6\t3: -1 -2\nv\tcover\tt=2\t3: 1 -2\n");
  CHECK(invoke({"corpus", unknown}).code == cli::kExitUnknownOnly);

  const auto dup = write_temp("dup.tsv", "a\tfloor\t-\t3: 1\na\tfloor\t-\t3: 2\n");
  r = invoke({"corpus", dup});
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.err, "line 2"));

  const auto missing = write_temp("missing.tsv", "a\tcover\t-\t3: 1\n");
  CHECK(has(invoke({"corpus", missing}).err, "needs parameter 't'"));
  CHECK(invoke({"corpus", "no_such_file.tsv"}).code == cli::kExitError);
  for (const auto& p : {path, unknown, dup, missing}) std::remove(p.c_str());
}

TEST_CASE("reduction budget from the environment") {
  setenv(cli::kBudgetEnv, "20", 1);
  const auto r = invoke({"floor", "5: 1 2 3 4 1 2 3 1 2 1 1 2 3 4 1 2 3 1 2 1 1 2 3 4 1 2 3 1 2 1"});
  unsetenv(cli::kBudgetEnv);
  CHECK(r.code == cli::kExitError);
  CHECK(has(r.out, "ReductionBudgetExceeded"));
}
