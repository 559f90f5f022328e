#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cli_runner.hpp"

using json = nlohmann::json;
using ke::testing::CliResult;
using ke::testing::run_cli;
using ke::testing::ScratchDir;

namespace {

const char* kSingles = R"({"sets": [[1],[2],[3]]})";
const char* kNegativeTriple =
    R"({"sets": [[1,2,3,4,5],[4,5,6,7,8],[3,6,7,8,9]]})";
const char* kChain = R"({"sets": [[1,2],[2,3],[3,4]]})";
const char* kSevenVertex =
    R"({"n": 7, "edges": [[1,4],[1,5],[1,6],[1,7],[2,4],[3,6],[4,6],[4,7],[5,7],[6,7]]})";

json first_line_json(const std::string& out) {
  return json::parse(out.substr(0, out.find('\n')));
}

}  // namespace

TEST_CASE("analyze-collection reports the worked singleton example") {
  ScratchDir dir;
  const std::string path = dir.write("singles.json", kSingles);
  const CliResult r = run_cli("analyze-collection " + path);
  REQUIRE(r.exit_code == 0);
  const json report = first_line_json(r.out);
  CHECK(report["kind"] == "collection");
  CHECK(report["verdicts"]["alpha"] == 1);
  CHECK(report["verdicts"]["e"] == 3);
  CHECK(report["verdicts"]["is_ke"] == false);
  CHECK(report["verdicts"]["is_hke"] == false);
  CHECK(report["verdicts"]["m_invariant"]["beta"] == 2);
  CHECK(report["verdicts"]["m_invariant"]["m"] == 1);
  CHECK(report["input_digest"].get<std::string>().starts_with("fnv1a64:"));
  CHECK(report["warnings"].empty());
}

TEST_CASE("analyze-collection reports the negative-m example") {
  ScratchDir dir;
  const std::string path = dir.write("triple.json", kNegativeTriple);
  const CliResult r = run_cli("analyze-collection " + path + " --method all");
  REQUIRE(r.exit_code == 0);
  const json v = first_line_json(r.out)["verdicts"];
  CHECK(v["alpha"] == 5);
  CHECK(v["m_invariant"]["m"] == -1);
  CHECK(v["is_ke"] == false);
  CHECK(v["hke_routes"]["agree"] == true);
  CHECK(v["hke_routes"]["brute"] == false);
  CHECK(v["hke_witness"]["defect"] == -1);
}

TEST_CASE("analyze-collection emits the signed-law table on request") {
  ScratchDir dir;
  const std::string path = dir.write("triple.json", kNegativeTriple);
  const CliResult r =
      run_cli("analyze-collection " + path + " --signed-law");
  REQUIRE(r.exit_code == 0);
  const json law = first_line_json(r.out)["verdicts"]["signed_law"];
  CHECK(law["pass"] == true);
  CHECK(law["m"] == -1);
  CHECK(law["entries"].size() == 6);
  for (const json& entry : law["entries"]) {
    CHECK(entry["defect"] == entry["predicted"]);
  }
}

TEST_CASE("analyze-collection surfaces unavailable analyses as warnings") {
  ScratchDir dir;
  // not relevant: alpha, KE and hke are skipped with a structured warning
  const std::string path =
      dir.write("mixed.json", R"({"sets": [[1],[1,2]]})");
  const CliResult r = run_cli("analyze-collection " + path);
  REQUIRE(r.exit_code == 0);
  const json report = first_line_json(r.out);
  CHECK(report["verdicts"].contains("e"));
  CHECK_FALSE(report["verdicts"].contains("alpha"));
  bool saw_not_relevant = false;
  for (const json& w : report["warnings"]) {
    if (w["code"] == "NotRelevant") saw_not_relevant = true;
  }
  CHECK(saw_not_relevant);

  // single member: the m-invariant needs two, reported as a warning
  const std::string single = dir.write("single.json", R"({"sets": [[1,2]]})");
  const json single_report = first_line_json(run_cli("analyze-collection " + single).out);
  CHECK_FALSE(single_report["verdicts"].contains("m_invariant"));
  CHECK(single_report["warnings"][0]["code"] == "CollectionTooSmall");
}

TEST_CASE("analyze-collection exit codes") {
  ScratchDir dir;
  CHECK(run_cli("analyze-collection /nonexistent.json").exit_code == 2);
  const std::string empty = dir.write("empty.json", R"({"sets": []})");
  CHECK(run_cli("analyze-collection " + empty).exit_code == 2);
  const json err = first_line_json(run_cli("analyze-collection " + empty).out);
  CHECK(err["error"]["code"] == "ParseError");
}

TEST_CASE("analyze-graph reports the seven-vertex fixture") {
  ScratchDir dir;
  const std::string path = dir.write("seven.json", kSevenVertex);
  const CliResult r = run_cli("analyze-graph " + path);
  REQUIRE(r.exit_code == 0);
  const json v = first_line_json(r.out)["verdicts"];
  CHECK(v["n"] == 7);
  CHECK(v["alpha"] == 3);
  CHECK(v["mu"] == 3);
  CHECK(v["is_ke_graph"] == false);
}

TEST_CASE("analyze-graph induced sub-reports keep original labels") {
  ScratchDir dir;
  const std::string path = dir.write("seven.json", kSevenVertex);

  const json ke_part =
      first_line_json(run_cli("analyze-graph " + path + " --induce 1,2,3,4,5,6").out);
  CHECK(ke_part["verdicts"]["induced"]["is_ke_graph"] == true);
  CHECK(ke_part["verdicts"]["induced"]["mu"] == 3);

  const json non_ke =
      first_line_json(run_cli("analyze-graph " + path + " --induce 1,2,3,4,5,7").out);
  CHECK(non_ke["verdicts"]["induced"]["is_ke_graph"] == false);
  CHECK(non_ke["verdicts"]["induced"]["mu"] == 2);
  CHECK(non_ke["verdicts"]["induced"]["isolated"] == json::array({3}));
}

TEST_CASE("analyze-graph omega and certificate flags") {
  ScratchDir dir;
  const std::string path = dir.write("seven.json", kSevenVertex);
  const json with_omega =
      first_line_json(run_cli("analyze-graph " + path + " --omega --certificate").out);
  const json& omega = with_omega["verdicts"]["omega"];
  auto contains_set = [&omega](const json& target) {
    for (const json& s : omega) {
      if (s == target) return true;
    }
    return false;
  };
  CHECK(contains_set(json::array({1, 2, 3})));
  CHECK(contains_set(json::array({3, 4, 5})));
  CHECK(contains_set(json::array({2, 5, 6})));
  CHECK(contains_set(json::array({2, 3, 7})));
  CHECK(with_omega["verdicts"]["certificate"].is_null());  // not a KE graph

  const std::string k2 = dir.write("k2.json", R"({"n":2,"edges":[[1,2]]})");
  const json cert =
      first_line_json(run_cli("analyze-graph " + k2 + " --certificate").out);
  CHECK(cert["verdicts"]["certificate"]["collection"] == json::array({json::array({1})}));
  CHECK(cert["verdicts"]["certificate"]["matching"] ==
        json::array({json::array({1, 2})}));
}

TEST_CASE("analyze-graph reads edge lists and format overrides") {
  ScratchDir dir;
  const std::string text = dir.write("g.txt", "n 3\n1 2\n2 3\n");
  const json report = first_line_json(run_cli("analyze-graph " + text).out);
  CHECK(report["verdicts"]["n"] == 3);
  CHECK(report["verdicts"]["alpha"] == 2);

  // same contents under a .json name still parse with --format edgelist
  const std::string odd = dir.write("g2.json", "n 3\n1 2\n2 3\n");
  CHECK(run_cli("analyze-graph " + odd).exit_code == 2);
  CHECK(run_cli("analyze-graph " + odd + " --format edgelist").exit_code == 0);
}

TEST_CASE("guardrails map to exit 3 and KE_MAX_N lifts them") {
  ScratchDir dir;
  // an edgeless graph on 30 vertices is above the default exact-search bound
  std::string edges = R"({"n": 30, "edges": []})";
  const std::string path = dir.write("big.json", edges);
  CHECK(run_cli("analyze-graph " + path).exit_code == 3);
  const json err = first_line_json(run_cli("analyze-graph " + path).out);
  CHECK(err["error"]["code"] == "TooLarge");
  CHECK(run_cli("analyze-graph " + path, "KE_MAX_N=32").exit_code == 0);

  const std::string small = dir.write("p12.json", R"({"n": 12, "edges": []})");
  CHECK(run_cli("analyze-graph " + small).exit_code == 0);
  CHECK(run_cli("analyze-graph " + small, "KE_MAX_N=10").exit_code == 3);
}

TEST_CASE("assert drives shell pipelines") {
  ScratchDir dir;
  const std::string chain = dir.write("chain.json", kChain);
  const std::string singles = dir.write("singles.json", kSingles);
  const std::string k2 = dir.write("k2.json", R"({"n":2,"edges":[[1,2]]})");

  CHECK(run_cli("assert " + chain + " --hke").exit_code == 0);
  CHECK(run_cli("assert " + singles + " --hke").exit_code == 1);
  CHECK(run_cli("assert " + chain + " --ke").exit_code == 0);
  CHECK(run_cli("assert " + k2 + " --ke-graph").exit_code == 0);
  CHECK(run_cli("assert " + chain + " --realizable").exit_code == 0);
  CHECK(run_cli("assert " + chain).exit_code == 2);  // no predicate picked
  CHECK(run_cli("assert " + chain + " --hke --ke").exit_code == 2);

  const json verdict = first_line_json(run_cli("assert " + chain + " --hke").out);
  CHECK(verdict["predicate"] == "hke");
  CHECK(verdict["holds"] == true);
}

TEST_CASE("stress emits JSONL and honors exit codes") {
  const CliResult even = run_cli(
      "stress EVEN --exhaustive --universe 5 --alpha-max 2 --max-size 4");
  CHECK(even.exit_code == 0);
  const json summary = json::parse(even.out.substr(0, even.out.find('\n')));
  CHECK(summary["type"] == "summary");
  CHECK(summary["pass"] == true);
  CHECK(summary["violations"] == 0);
  CHECK(summary["theorem"] == "EVEN");

  const CliResult dam = run_cli("stress DAM26 --exhaustive --graph-n 4");
  CHECK(dam.exit_code == 0);

  CHECK(run_cli("stress BOGUS").exit_code == 2);
  CHECK(run_cli("stress").exit_code == 2);
}

TEST_CASE("stress rejects invalid configs and degenerate inputs exit 2") {
  CHECK(run_cli("stress BROKEN --edge-prob 2").exit_code == 2);
  CHECK(run_cli("stress BROKEN --trials 0").exit_code == 2);

  ScratchDir dir;
  const std::string empty_graph = dir.write("zero.json", R"({"n":0,"edges":[]})");
  CHECK(run_cli("analyze-graph " + empty_graph).exit_code == 2);
}

TEST_CASE("stress runs are byte-identical for equal seed and config") {
  const std::string args = "stress BROKEN --seed 7 --trials 40";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());

  const std::string graph_args =
      "stress NONNEG_M --seed 3 --trials 15 --graph-n 6";
  CHECK(run_cli(graph_args).out == run_cli(graph_args).out);
}

TEST_CASE("analysis reports are deterministic for identical input and flags") {
  ScratchDir dir;
  const std::string coll = dir.write("chain.json", kChain);
  const std::string graph = dir.write("seven.json", kSevenVertex);
  const std::string coll_args = "analyze-collection " + coll + " --method all --signed-law";
  CHECK(run_cli(coll_args).out == run_cli(coll_args).out);
  const std::string graph_args = "analyze-graph " + graph + " --omega --certificate";
  CHECK(run_cli(graph_args).out == run_cli(graph_args).out);
}

TEST_CASE("every hke method flag works end to end") {
  ScratchDir dir;
  const std::string path = dir.write("chain.json", kChain);
  for (const std::string method : {"brute", "duality", "existential", "all"}) {
    const CliResult r =
        run_cli("analyze-collection " + path + " --method " + method);
    REQUIRE(r.exit_code == 0);
    CHECK(first_line_json(r.out)["verdicts"]["is_hke"] == true);
  }
  CHECK(run_cli("analyze-collection " + path + " --method bogus").exit_code == 2);
}

TEST_CASE("probe tabulates realizability buckets") {
  const CliResult r = run_cli("probe --universe 3 --alpha-max 2 --max-size 3");
  REQUIRE(r.exit_code == 0);
  const json report = first_line_json(r.out);
  CHECK(report["type"] == "probe");
  CHECK(report["exactly_realizable"].get<int>() > 0);
  CHECK(report["unrealizable"].get<int>() > 0);
}
