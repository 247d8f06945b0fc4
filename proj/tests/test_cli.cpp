#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pstamp/cli.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = pstamp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("check") {
  const RunResult ok = run_cli({"check", "1,5,9,10"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "compact, N(4) = 41\n");

  const RunResult no = run_cli({"check", "1,8,15,16"});
  CHECK(no.code == 0);  // a verdict is a computed result, not an error
  CHECK(no.out == "not compact, witness 5\n");

  const RunResult spaced = run_cli({"check", "1", "3", "5", "6"});
  CHECK(spaced.code == 0);
  CHECK(spaced.out == "compact, N(4) = 25\n");
}

TEST_CASE("check --json record shape") {
  const RunResult r = run_cli({"--json", "check", "1,5,9,10"});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  const auto& rec = recs[0];
  CHECK(rec["command"] == "check");
  CHECK(rec["input"] == "1,5,9,10");
  CHECK(rec["result"] == "compact");
  CHECK(rec["n_range"] == 41);
  CHECK(rec["witness"].is_null());
  CHECK(rec.contains("elapsed_ms"));
}

TEST_CASE("nrange") {
  const RunResult r = run_cli({"nrange", "--h", "3", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  CHECK(run_cli({"nrange", "--h", "2", "1,2"}).out == "5\n");
}

TEST_CASE("represent: constructive route") {
  const RunResult r = run_cli({"represent", "--n", "23", "1,3,5,6"});
  CHECK(r.code == 0);
  CHECK(r.out == "23 = 6+6+6+5 (4 stamps)\n");

  const RunResult traced = run_cli({"represent", "--n", "19", "--trace", "1,3,5,7,8"});
  CHECK(traced.code == 0);
  CHECK(traced.out.find("19 = 8+8+3 (3 stamps)\n") == 0);
  CHECK(traced.out.find("balance: q_hat=2 q=3 rem=0") != std::string::npos);

  const RunResult zero = run_cli({"represent", "--n", "0", "1,3,5,6"});
  CHECK(zero.out == "0 = (empty) (0 stamps)\n");
}

TEST_CASE("represent: --dp is required off the ratio-3 region") {
  const RunResult refused = run_cli({"represent", "--n", "17", "1,5,9,10"});
  CHECK(refused.code == 3);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("error:") == 0);

  const RunResult dp = run_cli({"represent", "--n", "17", "--dp", "1,5,9,10"});
  CHECK(dp.code == 0);
  CHECK(dp.out == "17 = 10+5+1+1 (4 stamps)\n");

  // --dp also serves arbitrary non-symmetric bases
  const RunResult any = run_cli({"represent", "--n", "5", "--dp", "1,8,15,16"});
  CHECK(any.code == 0);
  CHECK(any.out == "5 = 1+1+1+1+1 (5 stamps)\n");

  const RunResult asym = run_cli({"represent", "--n", "5", "1,4,6"});
  CHECK(asym.code == 3);
}

TEST_CASE("classify") {
  CHECK(run_cli({"classify", "1,3,5,6"}).out ==
        "proven compact via ratio-lower, N(4) = 25\n");
  CHECK(run_cli({"classify", "1,8,15,16"}).out ==
        "proven not compact via ratio-upper, witness 5\n");
  CHECK(run_cli({"classify", "1,5,9,10"}).out == "compact (checked), N(4) = 41\n");
  CHECK(run_cli({"classify", "1,4,6"}).code == 3);  // not symmetric
}

TEST_CASE("search") {
  const RunResult r = run_cli({"search", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=3: max a_k = 5, N(3) = 16\n  1,4,5\n") == 0);

  const RunResult all = run_cli({"search", "--k", "4", "--all"});
  CHECK(all.out.find("all 4 compact symmetric bases:") != std::string::npos);
  CHECK(all.out.find("1,2,3,4") != std::string::npos);

  const RunResult budget = run_cli({"search", "--k", "6", "--budget", "2"});
  CHECK(budget.code == 4);
}

TEST_CASE("search --json round-trips through check") {
  const RunResult r = run_cli({"--json", "search", "--k", "5"});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  const auto& payload = recs[0]["result"];
  CHECK(payload["max_a_k"] == 19);
  REQUIRE(payload["extremal"].size() == 2);
  for (const auto& text : payload["extremal"]) {
    const RunResult back = run_cli({"--json", "check", text.get<std::string>()});
    REQUIRE(back.code == 0);
    CHECK(records(back.out)[0]["result"] == "compact");
  }
}

TEST_CASE("bounds") {
  const RunResult r = run_cli({"bounds", "--m", "2", "--parity", "even"});
  CHECK(r.code == 0);
  CHECK(r.out.find("counting limit: C(5,1) = 5\n") != std::string::npos);
  CHECK(r.out.find("-> holds") != std::string::npos);

  const RunResult odd2 = run_cli({"bounds", "--m", "2", "--parity", "odd"});
  CHECK(odd2.out.find("counting limit: C(6,1) = 6\n") != std::string::npos);
  CHECK(odd2.out.find("-> fails") != std::string::npos);

  CHECK(run_cli({"bounds", "--m", "2", "--parity", "sideways"}).code == 2);
}

TEST_CASE("exit codes for malformed input") {
  CHECK(run_cli({"frobnicate"}).code == 2);          // unknown subcommand
  CHECK(run_cli({"check", "1,x,5"}).code == 2);      // parse error
  CHECK(run_cli({"check", "5,3,1"}).code == 2);      // not ascending
  CHECK(run_cli({"check", "2,3"}).code == 3);        // missing element 1
  CHECK(run_cli({"check"}).code == 2);               // no base at all
  CHECK(run_cli({"nrange", "1,2"}).code == 2);       // missing --h
}

TEST_CASE("--file runs each line") {
  const std::string path = "pstamp_cli_test_bases.txt";
  {
    std::ofstream f(path);
    f << "1,3,5,6\n\n1,8,15,16\n";
  }
  const RunResult r = run_cli({"check", "--file", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1,3,5,6: compact, N(4) = 25\n"
        "1,8,15,16: not compact, witness 5\n");
  CHECK(run_cli({"check", "--file", "does_not_exist.txt"}).code == 2);
}

TEST_CASE("identical inputs give identical bytes") {
  const RunResult a = run_cli({"search", "--k", "5", "--threads", "3"});
  const RunResult b = run_cli({"search", "--k", "5"});
  CHECK(a.out == b.out);

  auto strip_elapsed = [](const std::string& text) {
    auto recs = records(text);
    for (auto& r : recs) r.erase("elapsed_ms");
    return recs;
  };
  const RunResult ja = run_cli({"--json", "search", "--k", "4", "--all", "--threads", "2"});
  const RunResult jb = run_cli({"--json", "search", "--k", "4", "--all"});
  CHECK(strip_elapsed(ja.out) == strip_elapsed(jb.out));
}
