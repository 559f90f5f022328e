// ke: exact Konig-Egervary collection and graph analysis at desk scale.
//
// Subcommands: analyze-collection, analyze-graph, stress, assert, probe.
// Machine-readable JSON goes to stdout, human summaries to stderr.
// Exit codes: 0 ok/true, 1 predicate false or violations found,
// 2 input error, 3 guardrail exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ke/errors.hpp"
#include "ke/explorer.hpp"
#include "ke/independence.hpp"
#include "ke/invariants.hpp"
#include "ke/io.hpp"
#include "ke/matching.hpp"
#include "ke/recognition.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitTooLarge = 3;

int exit_code_for(const ke::Error& e) {
  return e.code() == ke::ErrorCode::TooLarge ? kExitTooLarge : kExitInput;
}

void emit_error(const ke::Error& e) {
  json out{{"error", {{"code", ke::to_string(e.code())}, {"message", e.what()}}}};
  std::cout << out.dump() << "\n";
  std::cerr << "error: " << e.what() << "\n";
}

ke::Limits limits_from_env() {
  ke::Limits limits;
  if (const char* raw = std::getenv("KE_MAX_N")) {
    const int value = std::atoi(raw);
    if (value > 0) limits.max_exact_n = value;
  }
  return limits;
}

json collection_as_json(const ke::SetCollection& c) {
  return json::parse(ke::collection_to_json(c))["sets"];
}

json edges_as_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

json m_result_as_json(const ke::MInvariantResult& r) {
  return json{{"beta", r.beta}, {"m", r.m}, {"member_defects", r.member_defects}};
}

ke::InputFormat parse_format(const std::string& name) {
  if (name == "auto") return ke::InputFormat::Auto;
  if (name == "json") return ke::InputFormat::Json;
  if (name == "edgelist") return ke::InputFormat::EdgeList;
  throw ke::Error(ke::ErrorCode::ParseError, "unknown format " + name);
}

// --- analyze-collection ---

struct CollectionOptions {
  std::string path;
  std::string method = "brute";
  bool signed_law = false;
};

int run_analyze_collection(const CollectionOptions& opt) {
  json warnings = json::array();
  auto warn = [&warnings](const ke::Error& e, const std::string& context) {
    warnings.push_back({{"code", ke::to_string(e.code())},
                        {"message", e.what()},
                        {"context", context}});
  };

  ke::SetCollection c;
  std::string raw;
  try {
    raw = ke::read_file(opt.path);
    c = ke::parse_collection_json(raw);
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }

  json verdicts;
  verdicts["size"] = c.size();
  try {
    verdicts["e"] = ke::e_value(c);

    bool relevant = true;
    try {
      verdicts["alpha"] = ke::alpha(c);
    } catch (const ke::Error& e) {
      relevant = false;
      warn(e, "alpha");
    }

    if (relevant) {
      verdicts["is_ke"] = ke::is_ke(c);
      verdicts["hke_method"] = opt.method;
      std::optional<ke::DualityResult> duality;
      if (opt.method == "brute") {
        verdicts["is_hke"] = ke::is_hke_bruteforce(c);
      } else if (opt.method == "duality") {
        duality = ke::is_hke_via_duality(c);
        verdicts["is_hke"] = duality->hke;
      } else if (opt.method == "existential") {
        verdicts["is_hke"] = ke::is_hke_via_existential(c);
      } else {  // all
        const bool brute = ke::is_hke_bruteforce(c);
        duality = ke::is_hke_via_duality(c);
        const bool existential = ke::is_hke_via_existential(c);
        verdicts["is_hke"] = brute;
        verdicts["hke_routes"] = {{"brute", brute},
                                  {"duality", duality->hke},
                                  {"existential", existential},
                                  {"agree", brute == duality->hke &&
                                                brute == existential}};
      }
      if (duality && duality->witness) {
        const ke::DualityWitness& w = *duality->witness;
        verdicts["hke_witness"] = {
            {"subcollection", collection_as_json(w.subcollection)},
            {"part1", collection_as_json(w.parts.part1())},
            {"part2", collection_as_json(w.parts.part2())},
            {"defect", w.defect}};
      }
    }

    try {
      verdicts["m_invariant"] = m_result_as_json(ke::compute_m(c));
    } catch (const ke::Error& e) {
      warn(e, "m_invariant");
    }

    if (opt.signed_law) {
      try {
        const ke::SignedLawReport report = ke::signed_partition_law(c);
        json entries = json::array();
        for (const ke::SignedLawEntry& entry : report.entries) {
          entries.push_back({{"part1", collection_as_json(entry.parts.part1())},
                             {"part2", collection_as_json(entry.parts.part2())},
                             {"defect", entry.defect},
                             {"predicted", entry.predicted}});
        }
        verdicts["signed_law"] = {
            {"pass", report.pass}, {"m", report.invariant.m}, {"entries", entries}};
      } catch (const ke::Error& e) {
        warn(e, "signed_law");
      }
    }
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }

  json report{{"input_digest", ke::content_digest(raw)},
              {"kind", "collection"},
              {"verdicts", verdicts},
              {"warnings", warnings}};
  std::cout << report.dump() << "\n";
  std::cerr << "analyzed collection of " << c.size() << " sets\n";
  return kExitTrue;
}

// --- analyze-graph ---

struct GraphOptions {
  std::string path;
  std::string format = "auto";
  bool with_omega = false;
  bool with_certificate = false;
  std::string induce;
};

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!token.empty()) {
        try {
          out.push_back(std::stoi(token));
        } catch (const std::exception&) {
          throw ke::Error(ke::ErrorCode::ParseError,
                          "bad vertex id \"" + token + "\" in --induce");
        }
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  if (out.empty()) {
    throw ke::Error(ke::ErrorCode::ParseError, "--induce lists no vertices");
  }
  return out;
}

int run_analyze_graph(const GraphOptions& opt) {
  ke::Graph g;
  std::string raw;
  try {
    raw = ke::read_file(opt.path);
    g = ke::load_graph_file(opt.path, parse_format(opt.format));
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }

  const ke::Limits limits = limits_from_env();
  json verdicts;
  try {
    verdicts["n"] = g.vertex_count();
    verdicts["edge_count"] = g.edge_count();
    const int independence = ke::alpha_graph(g, limits);
    const ke::MuResult matching = ke::mu(g, limits);
    verdicts["alpha"] = independence;
    verdicts["mu"] = matching.size;
    verdicts["mu_witness"] = edges_as_json(matching.witness.edges);
    verdicts["is_ke_graph"] = independence + matching.size == g.vertex_count();

    if (opt.with_omega) {
      verdicts["omega"] = collection_as_json(ke::omega(g, limits));
    }
    if (opt.with_certificate) {
      const auto cert = ke::ke_certificate_search(g, limits);
      if (cert) {
        verdicts["certificate"] = {
            {"collection", collection_as_json(cert->collection)},
            {"matching", edges_as_json(cert->matching.edges)}};
      } else {
        verdicts["certificate"] = nullptr;
      }
    }
    if (!opt.induce.empty()) {
      const ke::FiniteSet keep(parse_vertex_list(opt.induce));
      const ke::InducedSubgraph sub = ke::induced_subgraph(g, keep);
      json induced;
      induced["vertices"] = sub.labels;
      const int sub_alpha = ke::alpha_graph(sub.graph, limits);
      const ke::MuResult sub_matching = ke::mu(sub.graph, limits);
      induced["alpha"] = sub_alpha;
      induced["mu"] = sub_matching.size;
      induced["is_ke_graph"] =
          sub_alpha + sub_matching.size == sub.graph.vertex_count();
      json isolated = json::array();
      for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
        if (sub.graph.degree(v) == 0) isolated.push_back(sub.labels[v - 1]);
      }
      induced["isolated"] = isolated;
      verdicts["induced"] = induced;
    }
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }

  json report{{"input_digest", ke::content_digest(raw)},
              {"kind", "graph"},
              {"verdicts", verdicts},
              {"warnings", json::array()}};
  std::cout << report.dump() << "\n";
  std::cerr << "analyzed graph on " << g.vertex_count() << " vertices\n";
  return kExitTrue;
}

// --- stress / probe ---

struct StressOptions {
  std::string theorem;
  bool exhaustive = false;
  ke::TrialConfig config;
};

int run_stress(const StressOptions& opt) {
  try {
    const ke::TheoremId id = ke::parse_theorem_id(opt.theorem);
    const ke::StressReport report = ke::stress(id, opt.config, opt.exhaustive);
    std::cout << report.to_jsonl();
    std::cerr << report.theorem_id << ": " << report.instances_checked
              << " instances, " << report.violations.size() << " violations ("
              << report.elapsed.count() << " s)\n";
    return report.passed() ? kExitTrue : kExitFalse;
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }
}

int run_probe(const ke::TrialConfig& config) {
  try {
    const ke::ProbeReport report = ke::probe_omega_characterization(config);
    std::cout << report.to_json() << "\n";
    std::cerr << "probe: " << report.exactly_realizable << " exact, "
              << report.properly_contained << " properly contained, "
              << report.unrealizable << " unrealizable\n";
    return kExitTrue;
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }
}

// --- assert ---

struct AssertOptions {
  std::string path;
  std::string format = "auto";
  bool hke = false;
  bool ke_collection = false;
  bool ke_graph = false;
  bool realizable = false;
};

int run_assert(const AssertOptions& opt) {
  const int selected = int(opt.hke) + int(opt.ke_collection) + int(opt.ke_graph) +
                       int(opt.realizable);
  try {
    if (selected != 1) {
      throw ke::Error(ke::ErrorCode::ParseError,
                      "pick exactly one of --hke, --ke, --ke-graph, --realizable");
    }
    const ke::Limits limits = limits_from_env();
    bool holds = false;
    std::string predicate;
    if (opt.ke_graph) {
      predicate = "ke-graph";
      holds = ke::is_ke_graph(ke::load_graph_file(opt.path, parse_format(opt.format)),
                              limits);
    } else {
      const ke::SetCollection c = ke::load_collection_file(opt.path);
      if (opt.hke) {
        predicate = "hke";
        holds = ke::is_hke_bruteforce(c);
      } else if (opt.ke_collection) {
        predicate = "ke";
        holds = ke::is_ke(c);
      } else {
        predicate = "realizable";
        holds = ke::realizable_in_some_omega(c, limits).realizable;
      }
    }
    std::cout << json{{"predicate", predicate}, {"holds", holds}}.dump() << "\n";
    std::cerr << predicate << ": " << (holds ? "true" : "false") << "\n";
    return holds ? kExitTrue : kExitFalse;
  } catch (const ke::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Konig-Egervary collection and graph analysis"};
  app.require_subcommand(1);

  CollectionOptions coll_opt;
  CLI::App* coll = app.add_subcommand("analyze-collection",
                                      "alpha, e, KE/hke verdicts, m-invariant");
  coll->add_option("path", coll_opt.path, "collection JSON file")->required();
  coll->add_option("--method", coll_opt.method,
                   "hke decision route: brute|duality|existential|all")
      ->check(CLI::IsMember({"brute", "duality", "existential", "all"}));
  coll->add_flag("--signed-law", coll_opt.signed_law,
                 "emit the signed partition-law table");

  GraphOptions graph_opt;
  CLI::App* graph = app.add_subcommand("analyze-graph",
                                       "alpha, mu, KE verdict, certificates");
  graph->add_option("path", graph_opt.path, "graph JSON or edge-list file")
      ->required();
  graph->add_option("--format", graph_opt.format, "auto|json|edgelist")
      ->check(CLI::IsMember({"auto", "json", "edgelist"}));
  graph->add_flag("--omega", graph_opt.with_omega,
                  "enumerate all maximum independent sets");
  graph->add_flag("--certificate", graph_opt.with_certificate,
                  "search for a KE certificate");
  graph->add_option("--induce", graph_opt.induce,
                    "comma-separated vertices; analyze the induced subgraph");

  StressOptions stress_opt;
  CLI::App* stress_cmd = app.add_subcommand("stress",
                                            "run one theorem as a property suite");
  stress_cmd->add_option("theorem", stress_opt.theorem,
                         "BROKEN|SIGNED|EVEN|DUALITY|EXISTENTIAL|TRIANGLE|"
                         "MONOTONE|NONNEG_M|DAM26|HKE63")
      ->required();
  stress_cmd->add_flag("--exhaustive", stress_opt.exhaustive,
                       "enumerate every instance within the bounds");
  stress_cmd->add_option("--seed", stress_opt.config.seed, "random stream seed");
  stress_cmd->add_option("--trials", stress_opt.config.trials,
                         "instances per random run");
  stress_cmd->add_option("--universe", stress_opt.config.universe_max,
                         "largest element id");
  stress_cmd->add_option("--alpha-max", stress_opt.config.alpha_max,
                         "largest member cardinality");
  stress_cmd->add_option("--max-size", stress_opt.config.collection_size_max,
                         "largest collection size");
  stress_cmd->add_option("--graph-n", stress_opt.config.graph_n_max,
                         "graph order");
  stress_cmd->add_option("--edge-prob", stress_opt.config.edge_probability,
                         "edge probability for random graphs");

  ke::TrialConfig probe_config;
  CLI::App* probe_cmd = app.add_subcommand(
      "probe", "tabulate which collections equal Omega of their witness");
  probe_cmd->add_option("--universe", probe_config.universe_max,
                        "largest element id");
  probe_cmd->add_option("--alpha-max", probe_config.alpha_max,
                        "largest member cardinality");
  probe_cmd->add_option("--max-size", probe_config.collection_size_max,
                        "largest collection size");

  AssertOptions assert_opt;
  CLI::App* assert_cmd = app.add_subcommand(
      "assert", "exit 0/1 on a predicate, for pipelines and CI");
  assert_cmd->add_option("path", assert_opt.path, "input file")->required();
  assert_cmd->add_flag("--hke", assert_opt.hke, "collection is hke");
  assert_cmd->add_flag("--ke", assert_opt.ke_collection, "collection is KE");
  assert_cmd->add_flag("--ke-graph", assert_opt.ke_graph, "graph is KE");
  assert_cmd->add_flag("--realizable", assert_opt.realizable,
                       "collection sits inside some Omega(G)");
  assert_cmd->add_option("--format", assert_opt.format, "auto|json|edgelist")
      ->check(CLI::IsMember({"auto", "json", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return kExitInput;
  }

  if (coll->parsed()) return run_analyze_collection(coll_opt);
  if (graph->parsed()) return run_analyze_graph(graph_opt);
  if (stress_cmd->parsed()) return run_stress(stress_opt);
  if (probe_cmd->parsed()) return run_probe(probe_config);
  if (assert_cmd->parsed()) return run_assert(assert_opt);
  return kExitInput;
}
