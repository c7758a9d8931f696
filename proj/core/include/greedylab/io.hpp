#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "greedylab/constants.hpp"
#include "greedylab/finite_vector.hpp"
#include "greedylab/functionals.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/space.hpp"
#include "greedylab/verify.hpp"

namespace greedylab {

/// {"kind": "...", "params": {...}}
nlohmann::json space_to_json(const SpaceSpec& space);
/// Inverse of space_to_json. Malformed documents fail with ErrorCode::parse.
SpaceSpec space_from_json(const nlohmann::json& doc);
SpaceSpec parse_space(std::string_view text);
SpaceSpec load_space(const std::string& path);

/// Accepts {"entries": [[index, value], ...], "ambient_dim": n}, entries given as
/// [block, offset, value] triples (resolved through the space layout), or a bare
/// array of either. The ambient dimension defaults to the layout total for block
/// spaces and to the largest index otherwise.
FiniteVector vector_from_json(const nlohmann::json& doc, const SpaceSpec& space);
/// index,value rows; a header row and blank lines are ignored.
FiniteVector vector_from_csv(std::string_view text, const SpaceSpec& space);
/// Reads CSV when the path ends in .csv, JSON otherwise.
FiniteVector load_vector(const std::string& path, const SpaceSpec& space);

nlohmann::json to_json(const GreedySelection& selection);
nlohmann::json to_json(const FunctionalResult& result);
nlohmann::json to_json(const ConstantsReport& report);
nlohmann::json to_json(const SuiteCheck& check);
nlohmann::json to_json(const SuiteReport& report);

/// One row per check.
std::string suite_csv(const SuiteReport& report);
/// Flattens a JSON document into path,value rows.
std::string json_csv(const nlohmann::json& doc);

std::string read_file(const std::string& path);
/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe a partial file.
void write_atomic(const std::string& path, std::string_view content);

}  // namespace greedylab
