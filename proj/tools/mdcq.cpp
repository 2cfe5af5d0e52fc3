// mdcq: build MDC graphs, their self-dual additive codes, and distance reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mdcq/io.hpp"

namespace {

using namespace mdcq;

enum Exit { kOk = 0, kExpectationFailed = 1, kInputError = 2, kBudgetExhausted = 3 };

struct RunConfig {
  std::string command;
  std::string spec_path;
  std::string manifest_path;
  std::string dims;
  std::string mode = "exact";
  std::string map = "collapse";
  std::string alphas;
  std::string format = "json";
  int radius = -1;
  int cap = kDefaultFullEnumerationCap;
  int threads = 0;
  int target = 1;
  int order = 0;
  int restarts = 64;
  std::uint64_t seed = 1;
  std::uint64_t iters = 0;
  std::uint64_t budget = kDefaultWorkBudget;
  bool witness = false;
  bool certificate = false;
  bool include_empty = false;
  bool no_dedup = false;
  bool type2 = false;
  bool dump = false;
  bool generators = false;
  bool symplectic = false;
  std::string input_hash;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SpecError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw SpecError(flag + " needs a comma-separated list of integers");
  return out;
}

Json header(const RunConfig& cfg) {
  Json h;
  h["tool"] = "mdcq";
  h["version"] = MDCQ_VERSION;
  h["command"] = cfg.command;
  h["seed"] = cfg.seed;
  h["budget"] = cfg.budget;
  h["threads"] = cfg.threads;
  if (cfg.radius >= 0) h["radius"] = cfg.radius;
  h["input_hash"] = cfg.input_hash;
  return h;
}

std::string text_header(const RunConfig& cfg) {
  return "# mdcq " MDCQ_VERSION " command=" + cfg.command + " seed=" + std::to_string(cfg.seed) +
         " budget=" + std::to_string(cfg.budget) + " input=" + cfg.input_hash + "\n";
}

GraphSpec load_spec(RunConfig& cfg) {
  if (cfg.spec_path.empty()) throw SpecError("--spec is required");
  const auto text = read_file(cfg.spec_path);
  cfg.input_hash = fnv1a_hex(text);
  return parse_graph_spec(text);
}

void warn_negation(const GraphSpec& spec) {
  if (!spec.close_negation) return;
  std::vector<GroupElement> raw;
  if (const auto* full = std::get_if<std::vector<GroupElement>>(&spec.connection)) {
    raw = *full;
  } else {
    const auto& compact = std::get<CompactConnectionSet>(spec.connection);
    const auto& dim = spec.dim;
    for (std::size_t b = 0; b < compact.rows.size(); ++b)
      for (int p : compact.rows[b])
        if (p >= 1 && static_cast<std::uint32_t>(p) <= dim.stride(0))
          raw.push_back(dim.decode(static_cast<std::uint32_t>(b) * dim.stride(0) + static_cast<std::uint32_t>(p - 1)));
  }
  for (const auto& g : missing_negations(spec.dim, raw))
    std::cerr << "warning: connection set not closed under negation; adding " << to_string(g) << "\n";
}

MdcGraph load_graph(RunConfig& cfg) {
  const auto spec = load_spec(cfg);
  warn_negation(spec);
  return MdcGraph(resolve(spec));
}

int cmd_build(RunConfig& cfg) {
  const auto graph = load_graph(cfg);
  const auto code = code_from_graph(graph.adjacency());
  const auto part = partition_classes(graph);
  Json out = header(cfg);
  out["N"] = to_json(graph.dim());
  out["order"] = graph.order();
  out["valency"] = graph.valency();
  out["type"] = to_string(code_type(graph));
  out["self_dual"] = is_self_dual(code);
  out["multipartite"] = part.multipartite;
  out["partition_classes"] = part.classes.size();
  out["nested_block_circulant"] = verify_nested_block_circulant(graph.adjacency().bits(), graph.dim());
  out["S"] = to_json(graph.connection());
  out["S_compact"] = to_json(compact_of(graph.connection()));
  if (cfg.format == "text") {
    std::cout << text_header(cfg);
    for (const auto& [k, v] : out.items())
      if (k != "tool" && k != "version" && k != "command" && k != "seed" && k != "budget" && k != "threads" &&
          k != "input_hash")
        std::cout << k << ": " << v.dump() << "\n";
    if (cfg.dump) std::cout << adjacency_text(graph.adjacency().bits());
    if (cfg.generators) std::cout << generator_text(code);
    if (cfg.symplectic) std::cout << symplectic_matrix_text(code);
    return kOk;
  }
  if (cfg.dump) out["adjacency"] = adjacency_text(graph.adjacency().bits());
  if (cfg.generators) out["generators"] = generator_text(code);
  if (cfg.symplectic) out["symplectic"] = symplectic_matrix_text(code);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

Json certificate(const RunConfig& cfg, const GraphCode& code, const DistanceReport& r) {
  return {{"code_fingerprint", code_fingerprint(code)},
          {"length", code.length()},
          {"radius", r.radius},
          {"work", r.work},
          {"seed", cfg.seed}};
}

int cmd_distance(RunConfig& cfg) {
  const auto graph = load_graph(cfg);
  const auto code = code_from_graph(graph.adjacency());
  Json out = header(cfg);
  out["mode"] = cfg.mode;
  int status = kOk;
  if (cfg.mode == "exact") {
    DistanceReport r;
    try {
      r = min_distance_exact(code, {.budget = cfg.budget, .threads = cfg.threads, .witness = cfg.witness});
    } catch (const BudgetExceeded& e) {
      std::cerr << "budget exhausted: " << e.what() << "\n";
      r = e.partial();
      status = kBudgetExhausted;
    }
    out["report"] = to_json(r);
    if (cfg.certificate) out["certificate"] = certificate(cfg, code, r);
  } else if (cfg.mode == "bounds") {
    if (cfg.radius < 0) throw SpecError("--mode bounds needs --radius");
    const auto r = distance_bounds(code, cfg.radius,
                                   {.budget = cfg.budget, .threads = cfg.threads, .restarts = cfg.restarts,
                                    .seed = cfg.seed, .witness = cfg.witness});
    if (r.budget_exhausted) status = kBudgetExhausted;
    out["report"] = to_json(r);
    if (cfg.certificate) out["certificate"] = certificate(cfg, code, r);
  } else if (cfg.mode == "census") {
    if (cfg.radius < 0) throw SpecError("--mode census needs --radius (the largest weight counted)");
    const auto c = low_weight_census_partial(code, cfg.radius, {.budget = cfg.budget, .threads = cfg.threads});
    if (!c.complete) status = kBudgetExhausted;
    if (cfg.format == "csv") {
      std::cout << text_header(cfg) << "weight,count\n";
      for (std::size_t w = 0; w < c.counts.counts.size(); ++w) std::cout << w << "," << c.counts.counts[w] << "\n";
      return status;
    }
    out["census"] = to_json(c.counts);
    out["radius_completed"] = c.radius;
    out["complete"] = c.complete;
    out["work"] = c.work;
    if (cfg.certificate)
      out["certificate"] = {{"code_fingerprint", code_fingerprint(code)}, {"radius", c.radius}, {"work", c.work}};
  } else {
    throw SpecError("--mode must be exact, bounds or census");
  }
  std::cout << out.dump(2) << "\n";
  return status;
}

int cmd_wd(RunConfig& cfg) {
  const auto graph = load_graph(cfg);
  const auto code = code_from_graph(graph.adjacency());
  const auto wd = weight_distribution_full(code, cfg.cap, cfg.threads);
  if (cfg.format == "csv") {
    std::cout << text_header(cfg) << "weight,count\n";
    for (std::size_t w = 0; w < wd.counts.size(); ++w) std::cout << w << "," << wd.counts[w] << "\n";
    return kOk;
  }
  Json out = header(cfg);
  out["weight_distribution"] = to_json(wd);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_classify(RunConfig& cfg) {
  if (cfg.dims.empty()) throw SpecError("--N is required");
  cfg.input_hash = fnv1a_hex(cfg.dims);
  const DimVector dim(parse_int_list(cfg.dims, "--N"));
  const auto row = classify(dim, {.budget = cfg.budget, .threads = cfg.threads, .dedup = !cfg.no_dedup});
  if (cfg.format == "csv") {
    std::string dims = cfg.dims;
    std::cout << text_header(cfg) << "n,N,d_max,count,elapsed\n"
              << row.dim.order() << ",\"" << dims << "\"," << row.d_max << "," << row.count << ","
              << row.elapsed_seconds << "\n";
  } else {
    Json out = header(cfg);
    out["row"] = to_json(row);
    std::cout << out.dump(2) << "\n";
  }
  return row.partial ? kBudgetExhausted : kOk;
}

int cmd_search(RunConfig& cfg) {
  if (cfg.dims.empty()) throw SpecError("--N is required");
  cfg.input_hash = fnv1a_hex(cfg.dims);
  const DimVector dim(parse_int_list(cfg.dims, "--N"));
  const auto records = random_search(dim, {.seed = cfg.seed,
                                           .iterations = cfg.iters,
                                           .target_d = cfg.target,
                                           .type2_only = cfg.type2,
                                           .budget = cfg.budget,
                                           .threads = cfg.threads});
  Json out = header(cfg);
  out["iterations"] = cfg.iters;
  out["target_d"] = cfg.target;
  Json list = Json::array();
  for (const auto& r : records) list.push_back(to_json(r));
  out["records"] = list;
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_iso(RunConfig& cfg) {
  Json out = header(cfg);
  out["map"] = cfg.map;
  if (cfg.map == "dims") {
    if (cfg.order < 2) throw SpecError("--map dims needs --n >= 2");
    cfg.input_hash = fnv1a_hex(std::to_string(cfg.order));
    out["input_hash"] = cfg.input_hash;
    out["input"] = cfg.order;
    Json classes = Json::array();
    for (const auto& c : enumerate_dimension_vectors(cfg.order)) classes.push_back(to_json(c));
    out["output"] = classes;
    out["verified"] = true;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  const auto spec = load_spec(cfg);
  warn_negation(spec);
  out["input_hash"] = cfg.input_hash;
  const auto set = resolve(spec);
  const MdcGraph graph(set);
  out["input"] = {{"N", to_json(set.dim())}, {"S", to_json(set)}};
  const auto& a = graph.adjacency().bits();
  if (cfg.map == "collapse") {
    const auto c = coprime_collapse(set);
    out["output"] = to_json(c);
    out["verified"] = is_isomorphism(a, circulant_adjacency(c), coprime_vertex_map(set.dim()));
  } else if (cfg.map == "unit") {
    const auto alphas = parse_int_list(cfg.alphas, "--alphas");
    const auto image = unit_map(set, alphas);
    out["output"] = {{"N", to_json(image.dim())}, {"S", to_json(image)}};
    out["verified"] =
        is_isomorphism(a, build_adjacency(image).bits(), unit_vertex_map(set.dim(), alphas));
  } else if (cfg.map == "four-to-two") {
    const auto image = four_to_two(set);
    out["output"] = {{"N", to_json(image.dim())}, {"S", to_json(image)}};
    out["verified"] = is_isomorphism(a, build_adjacency(image).bits(), four_to_two_vertex_map(set.dim()));
  } else if (cfg.map == "metacirculant") {
    const auto meta = to_metacirculant(set);
    out["output"] = to_json(meta);
    std::vector<std::uint32_t> identity(set.dim().order());
    for (std::uint32_t i = 0; i < identity.size(); ++i) identity[i] = i;
    out["verified"] =
        satisfies_metacirculant_conditions(meta) && is_isomorphism(a, metacirculant_adjacency(meta), identity);
  } else if (cfg.map == "canonical") {
    const auto canon = canonical_form(set);
    out["output"] = {{"N", to_json(canon.dim())}, {"S", to_json(canon)}};
    out["verified"] = canonical_form(canon) == canon;
  } else {
    throw SpecError("--map must be collapse, unit, four-to-two, metacirculant, canonical or dims");
  }
  std::cout << out.dump(2) << "\n";
  return out["verified"].get<bool>() ? kOk : kExpectationFailed;
}

int cmd_verify(RunConfig& cfg) {
  const auto text = read_file(cfg.manifest_path);
  cfg.input_hash = fnv1a_hex(text);
  const auto entries = parse_manifest(text);
  bool all_passed = true;
  bool budget = false;
  Json results = Json::array();
  for (const auto& e : entries) {
    const auto r = verify_entry(e, {.budget = cfg.budget, .threads = cfg.threads});
    all_passed = all_passed && r.passed();
    budget = budget || r.budget_exhausted;
    if (cfg.format == "text") {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
      for (const auto& c : r.checks)
        std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                  << "\n";
    }
    results.push_back(to_json(r));
  }
  if (cfg.format == "text") {
    std::cout << text_header(cfg);
  } else {
    Json out = header(cfg);
    out["results"] = results;
    out["passed"] = all_passed;
    std::cout << out.dump(2) << "\n";
  }
  if (all_passed) return kOk;
  return budget ? kBudgetExhausted : kExpectationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multidimensional circulant graph codes: construction, distances and search"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("MDCQ_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: MDCQ_BUDGET='" << env << "' is not an integer\n";
      return kInputError;
    }
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    sub->add_option("--budget", cfg.budget, "Maximum combinations enumerated (overrides MDCQ_BUDGET)");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* build = app.add_subcommand("build", "Build a graph from a spec file and summarize it");
  build->add_option("--spec", cfg.spec_path, "Graph spec JSON")->required();
  build->add_flag("--dump", cfg.dump, "Include the adjacency matrix");
  build->add_flag("--generators", cfg.generators, "Include generator rows over {0,1,w,W}");
  build->add_flag("--symplectic", cfg.symplectic, "Include the binary (X|Z) generator matrix");
  common(build);

  auto* distance = app.add_subcommand("distance", "Minimum distance: exact, bounds or census");
  distance->add_option("--spec", cfg.spec_path, "Graph spec JSON")->required();
  distance->add_option("--mode", cfg.mode, "exact | bounds | census")
      ->check(CLI::IsMember({"exact", "bounds", "census"}));
  distance->add_option("--radius", cfg.radius, "Enumeration radius (bounds) or largest weight (census)");
  distance->add_option("--restarts", cfg.restarts, "Local-search restarts for the upper bound");
  distance->add_flag("--witness", cfg.witness, "Report a minimum-weight combination");
  distance->add_flag("--certificate", cfg.certificate, "Emit radius, work and code fingerprint");
  common(distance);

  auto* wd = app.add_subcommand("wd", "Full weight distribution");
  wd->add_option("--spec", cfg.spec_path, "Graph spec JSON")->required();
  wd->add_option("--cap", cfg.cap, "Largest length enumerated");
  common(wd);

  auto* cls = app.add_subcommand("classify", "Best distance over all connection sets of N");
  cls->add_option("--N", cfg.dims, "Moduli, e.g. 2,3")->required();
  cls->add_flag("--no-dedup", cfg.no_dedup, "Evaluate every set, not only canonical representatives");
  common(cls);

  auto* search = app.add_subcommand("search", "Seeded random search for good connection sets");
  search->add_option("--N", cfg.dims, "Moduli, e.g. 7,11")->required();
  search->add_option("--iters", cfg.iters, "Candidates drawn");
  search->add_option("--target", cfg.target, "Keep candidates with d >= target");
  search->add_flag("--type2", cfg.type2, "Only odd valency (Type II)");
  search->add_flag("--include-empty", cfg.include_empty, "Accepted for symmetry with enumeration");
  common(search);

  auto* iso = app.add_subcommand("iso", "Apply and verify an isomorphism map");
  iso->add_option("--spec", cfg.spec_path, "Graph spec JSON");
  iso->add_option("--map", cfg.map, "collapse | unit | four-to-two | metacirculant | canonical | dims");
  iso->add_option("--alphas", cfg.alphas, "Unit multipliers for --map unit, e.g. 1,3");
  iso->add_option("--n", cfg.order, "Order for --map dims");
  common(iso);

  auto* verify = app.add_subcommand("verify", "Check a JSON-lines manifest of expected code parameters");
  verify->add_option("manifest", cfg.manifest_path, "Manifest file")->required();
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*build) return cfg.command = "build", cmd_build(cfg);
    if (*distance) return cfg.command = "distance", cmd_distance(cfg);
    if (*wd) return cfg.command = "wd", cmd_wd(cfg);
    if (*cls) return cfg.command = "classify", cmd_classify(cfg);
    if (*search) return cfg.command = "search", cmd_search(cfg);
    if (*iso) return cfg.command = "iso", cmd_iso(cfg);
    if (*verify) return cfg.command = "verify", cmd_verify(cfg);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  }
  return kInputError;
}
