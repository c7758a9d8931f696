#include "cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "greedylab/constants.hpp"
#include "greedylab/error.hpp"
#include "greedylab/functionals.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/io.hpp"
#include "greedylab/samples.hpp"
#include "greedylab/space.hpp"
#include "greedylab/verify.hpp"

namespace greedylab::cli {

namespace {

using json = nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
void read_opt(const json& doc, const char* key, std::optional<T>& into) {
  if (doc.contains(key) && !doc.at(key).is_null()) into = doc.at(key).get<T>();
}

template <class T>
void read_val(const json& doc, const char* key, T& into) {
  if (doc.contains(key) && !doc.at(key).is_null()) into = doc.at(key).get<T>();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

[[noreturn]] void usage(const std::string& what) { fail(ErrorCode::invalid_argument, what); }

SearchMode search_mode(const ExperimentConfig& c) {
  const std::string s = c.search.value_or("exhaustive");
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "structured") return SearchMode::structured;
  if (s == "automatic") return SearchMode::automatic;
  usage("--search must be exhaustive, structured or automatic");
}

std::size_t need_m(const ExperimentConfig& c) {
  if (!c.m || *c.m == 0) usage("--m must be given and positive");
  return *c.m;
}

FunctionalOptions functional_options(const ExperimentConfig& c) {
  FunctionalOptions o;
  if (c.horizon) o.horizon = *c.horizon;
  if (c.cap) o.cap = *c.cap;
  o.search = search_mode(c);
  o.seed = c.seed;
  return o;
}

SampleOptions sample_options(const ExperimentConfig& c, const SpaceSpec& space) {
  SampleOptions o;
  o.count = c.samples.count;
  o.first_index = c.samples.first_index;
  o.last_index = std::min<Index>(c.samples.last_index, space.max_index());
  o.min_support = c.samples.min_support;
  o.max_support = c.samples.max_support;
  o.seed = c.seed;
  if (!c.samples.families.empty()) {
    o.families.clear();
    for (const auto& name : c.samples.families) {
      const auto fam = parse_sample_family(name);
      if (!fam) usage("unknown sample family \"" + name + "\"");
      o.families.push_back(*fam);
    }
  }
  return o;
}

/// The input vector alone when one is given, seeded samples otherwise.
std::vector<FiniteVector> samples_for(const ExperimentConfig& c, const SpaceSpec& space, json& scope) {
  if (c.input) {
    scope = {{"input", *c.input}};
    return {load_vector(*c.input, space)};
  }
  const auto o = sample_options(c, space);
  scope = {{"samples", o.describe()}, {"seed", c.seed}};
  return make_samples(o);
}

FiniteVector input_vector(const ExperimentConfig& c, const SpaceSpec& space) {
  if (!c.input) usage("--input is required for " + c.command);
  return load_vector(*c.input, space);
}

json run_norm(const ExperimentConfig& c, const SpaceSpec& space, std::string& summary) {
  const auto x = input_vector(c, space);
  const double v = eval_norm(space, x);
  summary = fmt(v);
  return {{"norm", v}, {"space", space.describe()}, {"support_size", x.support_size()}};
}

json run_greedy(const ExperimentConfig& c, const SpaceSpec& space, std::string& summary) {
  const auto x = input_vector(c, space);
  const std::string name = c.name.empty() ? "natural" : c.name;
  json out{{"selection", name}};
  const auto ordering = greedy_ordering(x);
  out["ordering"] = to_json(ordering);
  std::vector<IndexSet> sets;
  if (name == "natural") {
    const std::size_t m = need_m(c);
    const auto set = natural_greedy_set(x, m);
    sets.push_back(set);
    out["greedy_sum"] = vector_json(greedy_sum(x, m));
    out["residual_norm"] = eval_norm(space, x - greedy_sum(x, m));
  } else if (name == "greedy") {
    sets = enumerate_greedy_sets(x, need_m(c), c.cap.value_or(kDefaultEnumerationCap));
  } else if (name == "weak") {
    if (!c.t) usage("--t is required for weak greedy sets");
    sets = enumerate_weak_greedy_sets(x, need_m(c), *c.t, c.cap.value_or(kDefaultEnumerationCap));
  } else if (name == "abt") {
    if (!c.t || c.a.size() != 1 || c.b.size() != 1) usage("abt selection needs --t and one value each for --a and --b");
    sets = enumerate_abt_weak_greedy_sets(x, need_m(c), c.a[0], c.b[0], *c.t, c.cap.value_or(kDefaultEnumerationCap));
  } else {
    usage("greedy selection must be natural, greedy, weak or abt");
  }
  out["sets"] = sets;
  out["count"] = sets.size();
  summary = name + ": " + std::to_string(sets.size()) + " set(s)";
  return out;
}

json run_functional(const ExperimentConfig& c, const SpaceSpec& space, std::string& summary) {
  const auto x = input_vector(c, space);
  const std::size_t m = need_m(c);
  const auto o = functional_options(c);
  FunctionalResult r;
  std::optional<WeightFunction> f;
  if (c.f) f = WeightFunction::parse(*c.f);
  if (c.name == "sigma") {
    r = sigma_m(space, x, m, o);
  } else if (c.name == "sigma_tilde") {
    r = sigma_tilde_m(space, x, m, o);
  } else if (c.name == "d_f" || c.name == "d") {
    r = d_m_f(space, x, m, f ? &*f : nullptr, o);
  } else {
    usage("functional must be sigma, sigma_tilde or d_f");
  }
  summary = c.name + "_" + std::to_string(m) + " = " + fmt(r.value) + " (" + std::string(to_string(r.status)) + ")";
  return to_json(r);
}

json run_constants(const ExperimentConfig& c, const SpaceSpec& space, std::string& summary) {
  std::optional<WeightFunction> f;
  if (c.f) f = WeightFunction::parse(*c.f);
  const std::uint64_t cap = c.cap.value_or(kDefaultEnumerationCap);
  ConstantsReport r;
  const std::string& n = c.name;
  if (n == "democracy" || n == "f_democracy" || n == "disjoint_democracy" || n == "super_democracy") {
    DemocracyOptions o;
    o.f = f ? &*f : nullptr;
    if (n == "f_democracy" && !o.f) usage("f_democracy needs --f");
    if (c.max_size) o.max_size = *c.max_size;
    if (c.horizon) o.horizon = *c.horizon;
    o.sizes = c.sizes;
    o.cap = cap;
    if (c.family) {
      const auto fam = parse_democracy_family(*c.family);
      if (!fam) usage("unknown democracy family \"" + *c.family + "\"");
      o.family = *fam;
    }
    if (n == "disjoint_democracy") o.family = DemocracyFamily::disjoint_only;
    if (n == "super_democracy") o.family = DemocracyFamily::signed_sets;
    r = democracy_constant(space, o);
  } else {
    json scope;
    const auto samples = samples_for(c, space, scope);
    const std::string desc = scope.dump();
    if (n == "suppression_unconditional") {
      r = suppression_unconditional_estimate(space, samples, desc);
    } else if (n == "unconditional") {
      r = unconditional_estimate(space, samples, desc);
    } else if (n == "quasi_greedy") {
      r = quasi_greedy_estimate(space, samples, desc, cap);
    } else if (n == "t_quasi_greedy") {
      r = t_quasi_greedy_estimate(space, samples, c.t.value_or(0.5), desc, cap);
    } else if (n == "abt_quasi_greedy") {
      const std::vector<std::uint64_t> a = c.a.empty() ? std::vector<std::uint64_t>{1} : c.a;
      const std::vector<std::uint64_t> b = c.b.empty() ? std::vector<std::uint64_t>{1} : c.b;
      r = abt_quasi_greedy_estimate(space, samples, a, b, c.t.value_or(0.5), desc, cap);
    } else if (n == "basis_constant") {
      r = basis_constant_estimate(space, samples, desc);
    } else if (n == "coordinate_product") {
      Index h = c.horizon.value_or(0);
      for (const auto& x : samples) h = std::max(h, x.max_index());
      r = coordinate_product(space, std::max<Index>(h, 1), samples, desc);
    } else {
      usage("unknown constant \"" + n + "\"");
    }
  }
  summary = std::string(to_string(r.kind)) + " = " + fmt(r.estimate) + " (" +
            std::string(to_string(r.bound_direction)) + ")";
  return to_json(r);
}

SuiteReport run_suite_report(const ExperimentConfig& c, const std::optional<SpaceSpec>& space_opt) {
  const std::string& n = c.name;
  if (n == "democracy_counterexamples") return suite_democracy_counterexamples(c.seed);
  if (!space_opt) usage("suite " + n + " needs a space");
  const SpaceSpec& space = *space_opt;
  if (n == "disjoint_democracy") return suite_disjoint_democracy(space, c.max_size.value_or(8), c.horizon.value_or(10));
  if (n == "sparse_block") {
    const auto f = WeightFunction::parse(c.f.value_or("geometric:0.5"));
    SparseBlockSuiteOptions o;
    o.sample_count = c.samples.count;
    o.max_support = c.samples.max_support;
    o.m_max = c.m.value_or(4);
    o.seed = c.seed;
    return suite_sparse_block(space, f, o);
  }
  json scope;
  const auto samples = samples_for(c, space, scope);
  const double cq = c.cq.value_or(1.0);
  if (n == "greedy_inequality") {
    GreedyInequalityOptions o;
    o.m_max = c.m.value_or(4);
    const std::string fn = c.functional.value_or("sigma");
    if (fn == "sigma") {
      o.functional = FunctionalKind::sigma;
    } else if (fn == "sigma_tilde") {
      o.functional = FunctionalKind::sigma_tilde;
    } else if (fn == "d_f" || fn == "d") {
      o.functional = FunctionalKind::d_f;
    } else {
      usage("--functional must be sigma, sigma_tilde or d_f");
    }
    std::optional<WeightFunction> f;
    if (c.f) f = WeightFunction::parse(*c.f);
    o.f = f ? &*f : nullptr;
    if (c.lambda) {
      o.order_rule = OrderRule::ceil_lambda_m;
      o.lambda = *c.lambda;
    }
    o.bound = c.bound;
    o.functional_options = functional_options(c);
    return suite_greedy_inequality(space, samples, o, scope);
  }
  if (n == "coefficient_bounds") return suite_coefficient_bounds(space, cq, samples, scope);
  if (n == "projection_comparison") return suite_projection_comparison(space, cq, samples, c.t.value_or(0.5), scope);
  if (n == "abt_quasi_greedy") {
    const std::vector<std::uint64_t> a = c.a.empty() ? std::vector<std::uint64_t>{1, 2} : c.a;
    const std::vector<std::uint64_t> b = c.b.empty() ? std::vector<std::uint64_t>{1, 2} : c.b;
    return suite_abt_quasi_greedy(space, cq, samples, a, b, c.t.value_or(0.5), scope);
  }
  if (n == "weak_quasi_greedy") return suite_weak_quasi_greedy(space, samples, c.t.value_or(0.5), scope);
  usage("unknown suite \"" + n + "\"");
}

std::string csv_path(const std::string& out) {
  std::filesystem::path p(out);
  p.replace_extension(".csv");
  if (p.string() == out) p += ".csv";
  return p.string();
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  return {{"command", c.command},
          {"name", c.name},
          {"space", c.space},
          {"input", opt(c.input)},
          {"seed", c.seed},
          {"m", opt(c.m)},
          {"t", opt(c.t)},
          {"a", c.a},
          {"b", c.b},
          {"lambda", opt(c.lambda)},
          {"f", opt(c.f)},
          {"max_size", opt(c.max_size)},
          {"horizon", opt(c.horizon)},
          {"sizes", c.sizes},
          {"cq", opt(c.cq)},
          {"family", opt(c.family)},
          {"search", opt(c.search)},
          {"functional", opt(c.functional)},
          {"bound", opt(c.bound)},
          {"cap", opt(c.cap)},
          {"samples",
           {{"count", c.samples.count},
            {"first_index", c.samples.first_index},
            {"last_index", c.samples.last_index},
            {"min_support", c.samples.min_support},
            {"max_support", c.samples.max_support},
            {"families", c.samples.families}}},
          {"out", opt(c.out)},
          {"format", c.format}};
}

ExperimentConfig config_from_json(const json& doc_in) {
  const json& doc = doc_in.contains("config") ? doc_in.at("config") : doc_in;
  if (!doc.is_object()) fail(ErrorCode::parse, "config must be a JSON object");
  ExperimentConfig c;
  try {
    read_val(doc, "command", c.command);
    read_val(doc, "name", c.name);
    if (doc.contains("space")) c.space = doc.at("space");
    read_opt(doc, "input", c.input);
    read_val(doc, "seed", c.seed);
    read_opt(doc, "m", c.m);
    read_opt(doc, "t", c.t);
    read_val(doc, "a", c.a);
    read_val(doc, "b", c.b);
    read_opt(doc, "lambda", c.lambda);
    read_opt(doc, "f", c.f);
    read_opt(doc, "max_size", c.max_size);
    read_opt(doc, "horizon", c.horizon);
    read_val(doc, "sizes", c.sizes);
    read_opt(doc, "cq", c.cq);
    read_opt(doc, "family", c.family);
    read_opt(doc, "search", c.search);
    read_opt(doc, "functional", c.functional);
    read_opt(doc, "bound", c.bound);
    read_opt(doc, "cap", c.cap);
    if (doc.contains("samples")) {
      const json& s = doc.at("samples");
      read_val(s, "count", c.samples.count);
      read_val(s, "first_index", c.samples.first_index);
      read_val(s, "last_index", c.samples.last_index);
      read_val(s, "min_support", c.samples.min_support);
      read_val(s, "max_support", c.samples.max_support);
      read_val(s, "families", c.samples.families);
    }
    read_opt(doc, "out", c.out);
    read_val(doc, "format", c.format);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("config: ") + e.what());
  }
  return c;
}

RunResult run(const ExperimentConfig& c) {
  RunResult res;
  try {
    if (c.format != "json" && c.format != "csv") usage("--format must be json or csv");
    std::optional<SpaceSpec> space;
    if (!c.space.is_null()) space = space_from_json(c.space);
    const bool needs_space = !(c.command == "suite" && c.name == "democracy_counterexamples");
    if (needs_space && !space) usage("a space is required (--space FILE or --space-json STR)");

    json result;
    std::string& csv = res.csv;
    if (c.command == "norm") {
      result = run_norm(c, *space, res.summary);
    } else if (c.command == "greedy") {
      result = run_greedy(c, *space, res.summary);
    } else if (c.command == "functional") {
      result = run_functional(c, *space, res.summary);
    } else if (c.command == "constants") {
      result = run_constants(c, *space, res.summary);
    } else if (c.command == "suite") {
      const SuiteReport rep = run_suite_report(c, space);
      result = greedylab::to_json(rep);
      csv = suite_csv(rep);
      std::size_t failed = 0;
      for (const auto& check : rep.checks) failed += check.status == CheckStatus::fail;
      res.exit_code = rep.overall ? 0 : 1;
      res.summary = rep.suite_id + ": " + (rep.overall ? "pass" : "fail") + " (" + std::to_string(rep.checks.size()) +
                    " checks, " + std::to_string(failed) + " failed)";
      if (!rep.overall && c.out) res.summary += "; witnesses in " + *c.out;
    } else {
      usage("command must be norm, greedy, functional, constants or suite");
    }

    res.report = {{"config", to_json(c)}, {"result", result}};
    if (c.out) {
      if (c.format == "csv") {
        write_atomic(*c.out, csv.empty() ? json_csv(res.report) : csv);
      } else {
        write_atomic(*c.out, res.report.dump(2) + "\n");
        if (!csv.empty()) write_atomic(csv_path(*c.out), csv);
      }
    }
  } catch (const Error& e) {
    res.exit_code = 2;
    res.summary = "error [" + std::string(to_string(e.code())) + "]: " + e.what();
    res.report = json::object();
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.summary = std::string("error: ") + e.what();
    res.report = json::object();
  }
  return res;
}

int main_with_args(int argc, char** argv) {
  CLI::App app{"greedylab: greedy algorithms, best m-term functionals and basis constants on sequence spaces"};
  app.require_subcommand(0, 1);

  ExperimentConfig c;
  std::string config_file, space_file, space_json;
  std::optional<std::size_t> m, max_size, sample_count, sample_min, sample_max;
  std::optional<std::uint64_t> horizon, cap, sample_first, sample_last, seed;
  std::optional<double> t, lambda, cq, bound;
  std::optional<std::string> f, family, search, functional, input, out, format;
  std::vector<std::uint64_t> a, b;
  std::vector<std::size_t> sizes;
  std::vector<std::string> families;

  app.add_option("--config", config_file, "Replay a config or a previous report");
  app.add_option("--out", out, "Report path (overrides the replayed config)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--space", space_file, "Space JSON file");
    sub->add_option("--space-json", space_json, "Inline space JSON");
    sub->add_option("--input", input, "Vector file (.json or .csv)");
    sub->add_option("--seed", seed, "Seed for sampling and restarts");
    sub->add_option("--out", out, "Report path");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--m", m, "Order m (m_max for suites)");
    sub->add_option("--t", t, "Weakness parameter t");
    sub->add_option("--a", a, "Values of a")->delimiter(',');
    sub->add_option("--b", b, "Values of b")->delimiter(',');
    sub->add_option("--lambda", lambda, "Order multiplier for ceil(lambda m)");
    sub->add_option("--f", f, "Weight KIND[:PARAM][*SCALE]");
    sub->add_option("--max-size", max_size, "Largest set size");
    sub->add_option("--horizon", horizon, "Index horizon");
    sub->add_option("--sizes", sizes, "Set sizes for structured families")->delimiter(',');
    sub->add_option("--cq", cq, "Certified quasi-greedy constant");
    sub->add_option("--family", family, "all_pairs, structured, disjoint_only or signed");
    sub->add_option("--search", search, "exhaustive, structured or automatic");
    sub->add_option("--functional", functional, "sigma, sigma_tilde or d_f");
    sub->add_option("--bound", bound, "Asserted bound on the fitted constant");
    sub->add_option("--cap", cap, "Enumeration cap");
    sub->add_option("--samples", sample_count, "Number of seeded samples");
    sub->add_option("--sample-first", sample_first, "First sample index");
    sub->add_option("--sample-last", sample_last, "Last sample index");
    sub->add_option("--sample-min-support", sample_min, "Smallest sample support");
    sub->add_option("--sample-max-support", sample_max, "Largest sample support");
    sub->add_option("--sample-families", families, "gaussian, spiky, signed_indicator, geometric")->delimiter(',');
  };

  struct Sub {
    const char* name;
    const char* help;
    bool has_kind;
  };
  const Sub subs[] = {{"norm", "Evaluate a norm", false},
                      {"greedy", "Greedy orderings and greedy set enumeration", true},
                      {"functional", "sigma_m, sigma~_m or D_m^f", true},
                      {"constants", "Basis constant estimates", true},
                      {"suite", "Run a property suite", true}};
  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    if (s.has_kind) sub->add_option("name", c.name, "Kind or suite name");
    apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_file.empty()) {
      json doc;
      try {
        doc = json::parse(read_file(config_file));
      } catch (const json::parse_error& e) {
        fail(ErrorCode::parse, config_file + ": " + e.what());
      }
      const std::string name = c.name;
      c = config_from_json(doc);
      if (!name.empty()) c.name = name;
    }
    for (std::size_t i = 0; i < apps.size(); ++i) {
      if (apps[i]->parsed()) c.command = subs[i].name;
    }
    if (c.command.empty()) fail(ErrorCode::invalid_argument, "no command given; see --help");
    if (!space_file.empty() && !space_json.empty()) fail(ErrorCode::invalid_argument, "give --space or --space-json");
    auto parse_doc = [](const std::string& text, const std::string& what) {
      try {
        return json::parse(text);
      } catch (const json::parse_error& e) {
        fail(ErrorCode::parse, what + ": " + e.what());
      }
    };
    if (!space_file.empty()) c.space = parse_doc(read_file(space_file), space_file);
    if (!space_json.empty()) c.space = parse_doc(space_json, "--space-json");
    if (input) c.input = input;
    if (seed) c.seed = *seed;
    if (out) c.out = out;
    if (format) c.format = *format;
    if (m) c.m = m;
    if (t) c.t = t;
    if (!a.empty()) c.a = a;
    if (!b.empty()) c.b = b;
    if (lambda) c.lambda = lambda;
    if (f) c.f = f;
    if (max_size) c.max_size = max_size;
    if (horizon) c.horizon = horizon;
    if (!sizes.empty()) c.sizes = sizes;
    if (cq) c.cq = cq;
    if (family) c.family = family;
    if (search) c.search = search;
    if (functional) c.functional = functional;
    if (bound) c.bound = bound;
    if (cap) c.cap = cap;
    if (sample_count) c.samples.count = *sample_count;
    if (sample_first) c.samples.first_index = *sample_first;
    if (sample_last) c.samples.last_index = *sample_last;
    if (sample_min) c.samples.min_support = *sample_min;
    if (sample_max) c.samples.max_support = *sample_max;
    if (!families.empty()) c.samples.families = families;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }

  const RunResult r = run(c);
  if (r.exit_code == 2) {
    std::cerr << r.summary << "\n";
    return 2;
  }
  if (c.out) {
    std::cout << r.summary << "\n";
  } else {
    if (c.format == "csv") {
      std::cout << (r.csv.empty() ? json_csv(r.report) : r.csv);
    } else {
      std::cout << r.report.dump(2) << "\n";
    }
    std::cerr << r.summary << "\n";
  }
  return r.exit_code;
}

}  // namespace greedylab::cli
