#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "greedylab/error.hpp"
#include "greedylab/io.hpp"
#include "greedylab/sparse_block.hpp"

using namespace greedylab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path p = fs::temp_directory_path() / ("greedylab_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

std::string write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

struct Captured {
  int code;
  std::string out;
};

Captured invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "greedylab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  const int code = cli::main_with_args(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("space specs round trip through JSON") {
  const auto half_n = WeightFunction::power(-1).scaled(0.5);
  const auto f = WeightFunction::geometric(0.5);
  const std::vector<SpaceSpec> spaces{
      SpaceSpec::lp(1.5),
      SpaceSpec::c0_sup(),
      SpaceSpec::schreier(),
      SpaceSpec::signed_subsequence(),
      SpaceSpec::weighted_mixed(),
      SpaceSpec::alternating_tail_l1_sum({1, 2, 3}),
      build_sparse_block_space(f, half_n, 2, SparseBlockMode::certified_mode()),
      build_sparse_block_space(f, half_n, 0, SparseBlockMode::surrogate({6, 20, 50})),
      SpaceSpec::generic_block_sum(BlockSumMode::c0, {3, 4}, {SpaceSpec::lp(2), SpaceSpec::schreier()})};
  for (const auto& s : spaces) {
    CAPTURE(s.describe());
    CHECK(space_from_json(space_to_json(s)) == s);
  }
  CHECK(parse_space(R"({"kind": "Lp", "params": {"p": 3}})") == SpaceSpec::lp(3));
  CHECK_THROWS_AS(parse_space(R"({"kind": "Nope"})"), Error);
  CHECK_THROWS_AS(parse_space(R"({"kind": "Lp", "params": {"p": "x"}})"), Error);
  CHECK_THROWS_AS(parse_space("{"), Error);
}

TEST_CASE("vectors load from JSON, block triples and CSV") {
  const auto X = SpaceSpec::alternating_tail_l1_sum({2, 3});
  const auto a = vector_from_json(nlohmann::json::parse(R"({"entries": [[1, 0.5], [4, -2]]})"), X);
  const auto b = vector_from_json(nlohmann::json::parse(R"([[1, 1, 0.5], [2, 2, -2]])"), X);
  const auto c = vector_from_csv("index,value\n1,0.5\n4,-2\n\n", X);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.ambient_dim() == 5);
  CHECK_THROWS_AS(vector_from_json(nlohmann::json::parse(R"([[3, 1, 1.0]])"), X), Error);
  CHECK_THROWS_AS(vector_from_csv("1,2\nx,y\n", X), Error);
  const auto l = vector_from_json(nlohmann::json::parse(R"({"entries": [[7, 1]]})"), SpaceSpec::lp(2));
  CHECK(l.ambient_dim() == 7);
}

TEST_CASE("atomic writes replace the target in one step") {
  const auto dir = scratch_dir();
  const auto path = (dir / "r.json").string();
  write_atomic(path, "first");
  write_atomic(path, "second");
  CHECK(read_file(path) == "second");
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().string().find(".tmp") == std::string::npos);
  CHECK_THROWS_AS(write_atomic((dir / "missing" / "r.json").string(), "x"), Error);
}

TEST_CASE("norm command prints the Schreier value") {
  const auto dir = scratch_dir();
  const auto x = write_text(dir / "x.json", R"({"entries": [[1,1],[2,1],[3,1],[4,1]]})");
  const auto out = (dir / "norm.json").string();
  const auto r = invoke({"norm", "--space-json", R"({"kind":"Schreier"})", "--input", x, "--out", out});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  const auto report = nlohmann::json::parse(read_file(out));
  CHECK(report["result"]["norm"] == 2.0);
  CHECK(report["config"]["seed"] == 0);
}

TEST_CASE("malformed input gives exit status 2") {
  const auto dir = scratch_dir();
  const auto x = write_text(dir / "x.json", R"({"entries": [[1,1]]})");
  CHECK(invoke({"norm", "--space-json", R"({"kind":"Lp","params":)", "--input", x}).code == 2);
  CHECK(invoke({"norm", "--space-json", R"({"kind":"Lp","params":{"p":2}})", "--input", "/nonexistent.json"}).code ==
        2);
  CHECK(invoke({"norm", "--bogus-flag"}).code == 2);
  const auto capped = invoke({"greedy", "weak", "--space-json", R"({"kind":"Lp","params":{"p":2}})", "--input",
                              write_text(dir / "e.json", R"({"entries": [[1,1]], "ambient_dim": 60})"), "--m", "20",
                              "--t", "0", "--cap", "100"});
  CHECK(capped.code == 2);
  CHECK(capped.out.find("enumeration_cap") != std::string::npos);
}

TEST_CASE("suite command exit codes and config replay") {
  const auto dir = scratch_dir();
  const auto out = (dir / "di.json").string();
  CHECK(invoke({"suite", "disjoint_democracy", "--space-json", R"({"kind":"Lp","params":{"p":2}})", "--out", out})
            .code == 0);
  CHECK(fs::exists(dir / "di.csv"));
  const auto first = nlohmann::json::parse(read_file(out));
  const auto replay = (dir / "replay.json").string();
  CHECK(invoke({"--config", out, "--out", replay}).code == 0);
  auto second = nlohmann::json::parse(read_file(replay));
  CHECK(second["result"] == first["result"]);
  second["config"]["out"] = first["config"]["out"];
  CHECK(second["config"] == first["config"]);

  const auto failing = invoke({"suite", "greedy_inequality", "--space-json", R"({"kind":"SignedSubsequence"})",
                               "--bound", "1", "--m", "2", "--samples", "5", "--sample-last", "8", "--out",
                               (dir / "gi.json").string()});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("gi.json") != std::string::npos);
}

TEST_CASE("config run through the library entry point") {
  cli::ExperimentConfig c;
  c.command = "functional";
  c.name = "sigma";
  c.space = nlohmann::json::parse(R"({"kind":"Lp","params":{"p":2}})");
  const auto dir = scratch_dir();
  c.input = write_text(dir / "v.csv", "1,3\n2,2\n3,1\n");
  c.m = 1;
  const auto r = cli::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.report["result"]["value"].get<double>() == doctest::Approx(std::sqrt(5.0)));
  CHECK(cli::to_json(cli::config_from_json(r.report)) == r.report["config"]);
}
