#include "greedylab/io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "greedylab/error.hpp"
#include "greedylab/sparse_block.hpp"

namespace greedylab {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse, what); }

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return obj.at(name);
}

template <class T>
T get_as(const json& v, const char* name) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    bad(std::string("field \"") + name + "\" has the wrong type");
  }
}

std::vector<std::uint64_t> sizes_of(const json& params) {
  return get_as<std::vector<std::uint64_t>>(field(params, "block_sizes"), "block_sizes");
}

std::vector<std::uint64_t> layout_sizes(const SpaceSpec& s) {
  std::vector<std::uint64_t> out;
  for (const auto& b : s.layout()->sizes()) out.push_back(*b.exact);
  return out;
}

json number_or_inf(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

Index default_ambient(const SpaceSpec& space, const std::vector<Entry>& entries) {
  if (space.layout() && space.max_index() != kUnboundedDim) return space.max_index();
  Index top = 1;
  for (const auto& e : entries) top = std::max(top, e.index);
  return space.layout() ? kUnboundedDim : top;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << *v;
  return os.str();
}

void flatten(const json& v, const std::string& path, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) flatten(item, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += csv_field(path) + "," + csv_field(v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
}

}  // namespace

json space_to_json(const SpaceSpec& space) {
  json params = json::object();
  switch (space.kind()) {
    case SpaceKind::lp: params["p"] = space.p(); break;
    case SpaceKind::c0_sup:
    case SpaceKind::schreier:
    case SpaceKind::signed_subsequence:
    case SpaceKind::weighted_mixed: break;
    case SpaceKind::alternating_tail_l1_sum: params["block_sizes"] = layout_sizes(space); break;
    case SpaceKind::sparse_block: {
      const auto& meta = space.sparse_meta();
      params["f"] = meta.f;
      params["g"] = meta.g;
      params["blocks"] = space.layout()->num_blocks();
      params["mode"] = meta.certified ? "certified" : "surrogate";
      if (!meta.certified) {
        std::vector<double> n_list{meta.n0};
        for (const auto& b : space.layout()->sizes()) n_list.push_back(b.value);
        params["n_list"] = n_list;
      }
      break;
    }
    case SpaceKind::generic_block_sum: {
      params["mode"] = space.block_sum_mode() == BlockSumMode::l1 ? "l1" : "c0";
      params["block_sizes"] = layout_sizes(space);
      json blocks = json::array();
      for (const auto& inner : space.inner_spaces()) blocks.push_back(space_to_json(inner));
      params["blocks"] = blocks;
      break;
    }
  }
  return {{"kind", std::string(to_string(space.kind()))}, {"params", params}};
}

SpaceSpec space_from_json(const json& doc) {
  const auto name = get_as<std::string>(field(doc, "kind"), "kind");
  const auto kind = parse_space_kind(name);
  if (!kind) bad("unknown space kind \"" + name + "\"");
  const json params = doc.contains("params") ? doc.at("params") : json::object();
  if (!params.is_object()) bad("\"params\" must be an object");
  switch (*kind) {
    case SpaceKind::lp: return SpaceSpec::lp(get_as<double>(field(params, "p"), "p"));
    case SpaceKind::c0_sup: return SpaceSpec::c0_sup();
    case SpaceKind::schreier: return SpaceSpec::schreier();
    case SpaceKind::signed_subsequence: return SpaceSpec::signed_subsequence();
    case SpaceKind::weighted_mixed: return SpaceSpec::weighted_mixed();
    case SpaceKind::alternating_tail_l1_sum: return SpaceSpec::alternating_tail_l1_sum(sizes_of(params));
    case SpaceKind::sparse_block: {
      const auto f = WeightFunction::parse(get_as<std::string>(field(params, "f"), "f"));
      const auto g = WeightFunction::parse(get_as<std::string>(field(params, "g"), "g"));
      const std::string mode = params.contains("mode") ? get_as<std::string>(params.at("mode"), "mode") : "certified";
      if (mode == "certified") {
        const auto blocks = params.contains("blocks") ? get_as<std::size_t>(params.at("blocks"), "blocks") : 2;
        return build_sparse_block_space(f, g, blocks, SparseBlockMode::certified_mode());
      }
      if (mode == "surrogate") {
        auto n_list = get_as<std::vector<double>>(field(params, "n_list"), "n_list");
        const std::size_t blocks =
            params.contains("blocks") ? get_as<std::size_t>(params.at("blocks"), "blocks") : 0;
        return build_sparse_block_space(f, g, blocks, SparseBlockMode::surrogate(std::move(n_list)));
      }
      bad("SparseBlock mode must be \"certified\" or \"surrogate\"");
    }
    case SpaceKind::generic_block_sum: {
      const std::string mode = get_as<std::string>(field(params, "mode"), "mode");
      if (mode != "l1" && mode != "c0") bad("GenericBlockSum mode must be \"l1\" or \"c0\"");
      const json& blocks = field(params, "blocks");
      if (!blocks.is_array()) bad("\"blocks\" must be an array");
      std::vector<SpaceSpec> inner;
      for (const auto& b : blocks) inner.push_back(space_from_json(b));
      return SpaceSpec::generic_block_sum(mode == "l1" ? BlockSumMode::l1 : BlockSumMode::c0, sizes_of(params),
                                          std::move(inner));
    }
  }
  bad("unknown space kind");
}

SpaceSpec parse_space(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("space JSON: ") + e.what());
  }
  return space_from_json(doc);
}

SpaceSpec load_space(const std::string& path) { return parse_space(read_file(path)); }

FiniteVector vector_from_json(const json& doc, const SpaceSpec& space) {
  const json* list = &doc;
  std::optional<Index> ambient;
  if (doc.is_object()) {
    list = &field(doc, "entries");
    if (doc.contains("ambient_dim")) ambient = get_as<Index>(doc.at("ambient_dim"), "ambient_dim");
  }
  if (!list->is_array()) bad("vector entries must be an array");
  std::vector<Entry> entries;
  for (const auto& row : *list) {
    if (!row.is_array() || (row.size() != 2 && row.size() != 3)) {
      bad("each vector entry must be [index, value] or [block, offset, value]");
    }
    Index n;
    if (row.size() == 2) {
      n = get_as<Index>(row[0], "index");
    } else {
      if (!space.layout()) bad("[block, offset, value] entries need a block space");
      n = space.layout()->to_index(get_as<std::size_t>(row[0], "block"), get_as<Index>(row[1], "offset"));
    }
    const double v = get_as<double>(row.back(), "value");
    if (v != 0.0) entries.push_back({n, v});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  const Index dim = ambient.value_or(default_ambient(space, entries));
  FiniteVector x(std::move(entries), dim);
  space.validate(x);
  return x;
}

FiniteVector vector_from_csv(std::string_view text, const SpaceSpec& space) {
  json rows = json::array();
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) bad("CSV line " + std::to_string(line_no) + " has no comma");
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    try {
      std::size_t used = 0;
      const unsigned long long n = std::stoull(a, &used);
      if (a.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(a);
      const double v = std::stod(b);
      rows.push_back(json::array({n, v}));
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header
      bad("CSV line " + std::to_string(line_no) + " is not index,value");
    }
  }
  return vector_from_json(rows, space);
}

FiniteVector load_vector(const std::string& path, const SpaceSpec& space) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return vector_from_csv(text, space);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return vector_from_json(doc, space);
}

json to_json(const GreedySelection& s) {
  return {{"kind", std::string(to_string(s.kind))},
          {"order", s.order},
          {"ordered_indices", s.ordered_indices},
          {"set", s.as_set()},
          {"values", s.values},
          {"t", s.t},
          {"a", s.a},
          {"b", s.b}};
}

json to_json(const FunctionalResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"m", r.m},
          {"value", r.value},
          {"witness_set", r.witness_set},
          {"witness_coefficients", r.witness_coefficients},
          {"alpha", opt(r.alpha)},
          {"status", std::string(to_string(r.status))},
          {"tolerance", r.tolerance},
          {"oracle_value", opt(r.oracle_value)},
          {"horizon", r.horizon},
          {"candidates", r.candidates},
          {"seed", r.seed},
          {"notes", r.notes}};
}

json to_json(const ConstantsReport& r) {
  const auto& w = r.witness;
  json wj{{"set_a", w.set_a},
          {"set_b", w.set_b},
          {"signs_a", w.signs_a},
          {"signs_b", w.signs_b},
          {"vector", w.vector ? vector_json(*w.vector) : json(nullptr)},
          {"order", opt(w.order)},
          {"index", opt(w.index)},
          {"numerator", number_or_inf(w.numerator)},
          {"denominator", w.denominator}};
  return {{"kind", std::string(to_string(r.kind))},
          {"parameters", r.parameters},
          {"estimate", number_or_inf(r.estimate)},
          {"bound_direction", std::string(to_string(r.bound_direction))},
          {"witness", wj},
          {"search_scope", r.search_scope},
          {"space", r.space},
          {"configurations", r.configurations},
          {"notes", r.notes}};
}

json to_json(const SuiteCheck& c) {
  return {{"statement_id", c.statement_id},
          {"status", std::string(to_string(c.status))},
          {"worst_ratio", c.worst_ratio ? number_or_inf(*c.worst_ratio) : json(nullptr)},
          {"bound", opt(c.bound)},
          {"tolerance", c.tolerance},
          {"witness", c.witness.is_null() ? json::object() : c.witness},
          {"detail", c.detail},
          {"evaluated", c.evaluated},
          {"skipped", c.skipped}};
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"suite_id", r.suite_id},
          {"space", r.space},
          {"scope", r.scope},
          {"checks", checks},
          {"overall", r.overall ? "pass" : "fail"},
          {"notes", r.notes}};
}

std::string suite_csv(const SuiteReport& r) {
  std::string out = "suite_id,statement_id,status,worst_ratio,bound,tolerance,evaluated,skipped,detail\n";
  for (const auto& c : r.checks) {
    out += csv_field(r.suite_id) + "," + csv_field(c.statement_id) + "," + std::string(to_string(c.status)) + "," +
           csv_number(c.worst_ratio) + "," + csv_number(c.bound) + "," + csv_number(c.tolerance) + "," +
           std::to_string(c.evaluated) + "," + std::to_string(c.skipped) + "," + csv_field(c.detail) + "\n";
  }
  return out;
}

std::string json_csv(const json& doc) {
  std::string out = "field,value\n";
  flatten(doc, "", out);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::io, "error while reading " + path);
  return ss.str();
}

void write_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      fail(ErrorCode::io, "error while writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorCode::io, "cannot move report into place at " + path);
  }
}

}  // namespace greedylab
