#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "multirel/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = multirel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_model(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mrel_cli_" + name + ".mrel");
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

const std::string kBase1 =
    "carrier X = a\n"
    "mrel alpha : X -> P(X)\na -> {}\n"
    "mrel beta : X -> P(X)\na -> {a}\n"
    "mrel gamma : X -> P(X)\na -> {}\na -> {a}\n";

const std::string kPelegCounterexample =
    "carrier X = a b\n"
    "mrel alpha : X -> P(X)\na -> {a,b}\na -> {a}\nb -> {a}\n"
    "mrel beta : X -> P(X)\na -> {a}\na -> {b}\n";

}  // namespace

TEST_CASE("table parikh base 1") {
  const auto r = run({"table", "--kind", "parikh", "--base", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "◇ | 0 α β γ\n"
        "--+--------\n"
        "0 | 0 0 0 0\n"
        "α | γ γ γ γ\n"
        "β | 0 α β γ\n"
        "γ | γ γ γ γ\n");
}

TEST_CASE("table over model operands") {
  const auto path = write_model("fs_table", kPelegCounterexample);
  const auto r = run({"table", "--kind", "peleg", "--model", path});
  CHECK(r.code == 0);
  CHECK(r.out == "∗     | alpha beta\n------+------------\nalpha | -     -\nbeta  | -     beta\n");
  CHECK(r.out.find("-") != std::string::npos);
  CHECK(run({"table", "--kind", "peleg", "--base", "2"}).code == 2);
}

TEST_CASE("lift") {
  const auto path = write_model("base1", kBase1);
  const auto r = run({"lift", "--kind", "peleg", "--model", path, "--rel", "gamma"});
  CHECK(r.code == 0);
  CHECK(r.out == "{} -> {}\n{a} -> {}\n{a} -> {a}\n");
  const auto p = run({"lift", "--kind", "parikh", "--model", path, "--rel", "beta"});
  CHECK(p.out == "{} -> {}\n{} -> {a}\n{a} -> {a}\n");
  CHECK(run({"lift", "--kind", "peleg", "--model", path, "--rel", "delta"}).code == 2);
}

TEST_CASE("compose") {
  const auto path = write_model("fs", kPelegCounterexample);
  const auto r = run({"compose", "--kind", "peleg", "--model", path, "--lhs", "alpha", "--rhs", "beta"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("mrel alpha_peleg_beta : X -> P(X)\n", 0) == 0);
}

TEST_CASE("check and sweep") {
  const auto ok = run({"check", "--law", "peleg-assoc-union-closed", "--base", "1", "--mode", "exhaustive"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "law=peleg-assoc-union-closed universe=1 mode=exhaustive verdict=holds\n");

  const auto bad = run({"sweep", "--law", "peleg-assoc", "--base", "2", "--mode", "sampled", "--samples", "100",
                        "--seed", "42"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("verdict=fails witness=") != std::string::npos);
  CHECK(bad.out.find("sampled(100,42)") != std::string::npos);

  const auto path = write_model("fs_check", kPelegCounterexample);
  const auto inst = run({"check", "--law", "peleg-assoc", "--model", path, "--lhs", "alpha", "--rel", "alpha",
                         "--rhs", "beta"});
  CHECK(inst.code == 1);
  CHECK(inst.out == "law=peleg-assoc instance=alpha,alpha,beta verdict=fails\n");
  const auto weak = run({"check", "--law", "weak-peleg-assoc", "--model", path, "--lhs", "alpha", "--rel",
                         "alpha", "--rhs", "beta"});
  CHECK(weak.code == 0);
}

TEST_CASE("trace emits one JSON record per instance") {
  const auto r = run({"sweep", "--law", "kleisli-assoc", "--base", "1", "--trace"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int records = 0;
  std::string last;
  while (std::getline(lines, line)) {
    if (line.rfind("law=", 0) == 0) {
      last = line;
      continue;
    }
    const auto j = nlohmann::json::parse(line);
    CHECK(j["law"] == "kleisli-assoc");
    CHECK(j["verdict"] == "holds");
    CHECK(j["args"].contains("alpha"));
    ++records;
  }
  CHECK(records == 64);
  CHECK(last == "law=kleisli-assoc universe=1 mode=exhaustive verdict=holds");
}

TEST_CASE("closure and pfns") {
  const auto path = write_model("fs_closure", kPelegCounterexample);
  const auto u = run({"closure", "union", "--model", path, "--rel", "beta"});
  CHECK(u.code == 0);
  CHECK(u.out == "mrel beta_union : X -> P(X)\na -> {a}\na -> {b}\na -> {a,b}\n");
  const auto up = run({"closure", "up", "--model", path, "--rel", "beta"});
  CHECK(up.out == "mrel beta_up : X -> P(X)\na -> {a}\na -> {b}\na -> {a,b}\n");
  const auto p = run({"pfns", "--model", path, "--rel", "alpha"});
  CHECK(p.code == 0);
  CHECK(p.out ==
        "mrel alpha_f0 : X -> P(X)\na -> {a}\nb -> {a}\n\n"
        "mrel alpha_f1 : X -> P(X)\na -> {a,b}\nb -> {a}\n");
  CHECK(run({"pfns", "--model", path, "--rel", "alpha", "--cap", "1"}).code == 2);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"lift", "--kind", "hoare"}).code == 2);
  CHECK(run({"sweep", "--law", "no-such-law", "--base", "1"}).code == 2);
  CHECK(run({"sweep", "--law", "kleisli-assoc", "--base", "2"}).code == 2);
  CHECK(run({"sweep", "--law", "kleisli-assoc", "--base", "1", "--mode", "random"}).code == 2);
  CHECK(run({"lift", "--kind", "peleg", "--model", "/nonexistent/file.mrel", "--rel", "a"}).code == 2);
  const auto path = write_model("broken", "carrier X = a\nmrel b : X -> P(X)\na -> {d}\n");
  const auto r = run({"lift", "--kind", "peleg", "--model", path, "--rel", "b"});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnknownElement") != std::string::npos);
  CHECK(r.err.find("line 3") != std::string::npos);
}
