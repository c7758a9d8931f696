#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace greedylab::cli {

struct SampleConfig {
  std::size_t count = 100;
  std::uint64_t first_index = 1;
  std::uint64_t last_index = 16;
  std::size_t min_support = 1;
  std::size_t max_support = 8;
  std::vector<std::string> families;
};

/// Everything one invocation needs. Every report embeds this verbatim, and a
/// report can be fed back through --config to repeat the run.
struct ExperimentConfig {
  std::string command;  // norm, greedy, functional, constants, suite
  /// Sub-kind: the functional, constant or suite name, or the greedy selection.
  std::string name;
  nlohmann::json space;  // {"kind": ..., "params": ...}
  std::optional<std::string> input;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m;
  std::optional<double> t;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
  std::optional<double> lambda;
  std::optional<std::string> f;
  std::optional<std::size_t> max_size;
  std::optional<std::uint64_t> horizon;
  std::vector<std::size_t> sizes;
  std::optional<double> cq;
  std::optional<std::string> family;
  std::optional<std::string> search;
  /// Functional used by the greedy inequality suite.
  std::optional<std::string> functional;
  /// Asserted bound on the fitted constant of the greedy inequality suite.
  std::optional<double> bound;
  std::optional<std::uint64_t> cap;
  SampleConfig samples;
  std::optional<std::string> out;
  std::string format = "json";
};

nlohmann::json to_json(const ExperimentConfig& config);
/// Accepts either a bare config or a report carrying one under "config".
ExperimentConfig config_from_json(const nlohmann::json& doc);

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;
  std::string summary;
  /// Per-check rows for suites, empty otherwise.
  std::string csv;
};

/// Executes the command. Library errors are mapped to exit code 2 with the
/// message in `summary`; a failing suite gives exit code 1.
RunResult run(const ExperimentConfig& config);

/// Command line entry point shared by the executable and the tests.
int main_with_args(int argc, char** argv);

}  // namespace greedylab::cli
