#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ke/errors.hpp"
#include "ke/explorer.hpp"
#include "ke/invariants.hpp"

using namespace ke;

TEST_CASE("relevant collection enumeration counts") {
  // universe 3, alpha 1, size 3: only {{1},{2},{3}}
  auto only = relevant_collections(3, 1, 3);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == SetCollection{FiniteSet{1}, FiniteSet{2}, FiniteSet{3}});

  CHECK(relevant_collections(4, 2, 1).size() == 6);   // C(4,2)
  CHECK(relevant_collections(3, 2, 4).empty());       // only 3 such subsets
  CHECK(relevant_collections(5, 2, 2).size() == 45);  // C(10,2)
  CHECK(relevant_collections(6, 7, 1).empty());       // alpha beyond universe

  CHECK_THROWS_AS(relevant_collections(8, 1, 1), Error);
  CHECK_THROWS_AS(relevant_collections(6, 1, 6), Error);
}

TEST_CASE("enumeration is duplicate-free and canonically ordered") {
  auto all = relevant_collections(5, 2, 3);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1] < all[i]);
  }
  for (const SetCollection& c : all) {
    CHECK(c.size() == 3);
    CHECK(alpha(c) == 2);
  }
}

TEST_CASE("graph enumeration covers all edge subsets") {
  int count = 0;
  for_each_graph(3, [&count](const Graph&) { ++count; });
  CHECK(count == 8);  // 2^C(3,2)
  count = 0;
  for_each_graph(4, [&count](const Graph&) { ++count; });
  CHECK(count == 64);
  CHECK_THROWS_AS(for_each_graph(7, [](const Graph&) {}), Error);
}

TEST_CASE("random graphs honor the probability extremes") {
  TrialConfig config;
  config.graph_n_max = 6;
  config.edge_probability = 0.0;
  CHECK(random_graph(config, 0).edge_count() == 0);
  config.edge_probability = 1.0;
  CHECK(random_graph(config, 0).edge_count() == 15);  // C(6,2)
}

TEST_CASE("random graphs are a pure function of seed and index") {
  TrialConfig config;
  config.seed = 12345;
  config.graph_n_max = 7;
  const Graph a = random_graph(config, 42);
  const Graph b = random_graph(config, 42);
  CHECK(a == b);
  config.seed = 12346;
  CHECK_FALSE(random_graph(config, 42) == a);
}

TEST_CASE("theorem ids round-trip and reject junk") {
  for (TheoremId id : all_theorem_ids()) {
    CHECK(parse_theorem_id(to_string(id)) == id);
  }
  CHECK(parse_theorem_id("nonneg_m") == TheoremId::NonnegM);
  CHECK_THROWS_AS(parse_theorem_id("BOGUS"), Error);
  try {
    parse_theorem_id("BOGUS");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownTheorem);
  }
}

TEST_CASE("hypothesis filters match their definitions") {
  using filters::every_removal_hke;
  using filters::m_hypothesis_holds;

  CHECK(m_hypothesis_holds(fixtures::three_singletons()));
  CHECK(m_hypothesis_holds(fixtures::negative_m_triple()));
  CHECK_FALSE(m_hypothesis_holds(SetCollection{FiniteSet{1, 2}, FiniteSet{2, 3},
                                               FiniteSet{3, 4}, FiniteSet{5, 6}}));
  CHECK_FALSE(m_hypothesis_holds(SetCollection{FiniteSet{1}}));

  CHECK(every_removal_hke(fixtures::negative_m_triple()));  // pairs are hke
  CHECK(every_removal_hke(fixtures::hke_chain()));
  // removals of size three singletons are not hke
  CHECK_FALSE(every_removal_hke(
      SetCollection{FiniteSet{1}, FiniteSet{2}, FiniteSet{3}, FiniteSet{4}}));
}

TEST_CASE("every theorem passes an exhaustive small-universe stress run") {
  TrialConfig config;
  config.universe_max = 4;
  config.alpha_max = 2;
  config.collection_size_max = 3;
  config.graph_n_max = 4;
  for (TheoremId id : all_theorem_ids()) {
    const StressReport report = stress(id, config, true);
    CHECK(report.passed());
    CHECK(report.instances_checked > 0);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("every theorem passes a seeded random stress run") {
  TrialConfig config;
  config.seed = 2024;
  config.trials = 25;
  config.universe_max = 6;
  config.graph_n_max = 6;
  for (TheoremId id : all_theorem_ids()) {
    const StressReport report = stress(id, config, false);
    CHECK(report.passed());
  }
}

TEST_CASE("stress reports serialize deterministically") {
  TrialConfig config;
  config.seed = 7;
  config.trials = 30;
  const std::string first = stress(TheoremId::Broken, config, false).to_jsonl();
  const std::string second = stress(TheoremId::Broken, config, false).to_jsonl();
  CHECK(first == second);
  CHECK(first.find("\"pass\":true") != std::string::npos);
  CHECK(first.find("\"theorem\":\"BROKEN\"") != std::string::npos);

  const std::string graph_run = stress(TheoremId::Dam26, config, false).to_jsonl();
  CHECK(graph_run == stress(TheoremId::Dam26, config, false).to_jsonl());
}

TEST_CASE("trial configs are validated") {
  TrialConfig config;
  config.edge_probability = 1.5;
  CHECK_THROWS_AS(validate(config), Error);
  config.edge_probability = 0.5;
  config.trials = 0;
  CHECK_THROWS_AS(validate(config), Error);
}

TEST_CASE("probe classifies collections against omega of the witness") {
  TrialConfig config;
  config.universe_max = 3;
  config.alpha_max = 2;
  config.collection_size_max = 3;
  const ProbeReport report = probe_omega_characterization(config);

  // {{1},{2},{3}} = Omega(K3) and {{1,3}} = Omega of its own witness both
  // land in the exact bucket; {{1,2},{1,3},{2,3}} is unrealizable
  CHECK(report.exactly_realizable > 0);
  CHECK(report.unrealizable > 0);
  const std::uint64_t total = report.exactly_realizable +
                              report.properly_contained + report.unrealizable;
  std::uint64_t enumerated = 0;
  for (int a = 1; a <= 2; ++a) {
    for (int size = 1; size <= 3; ++size) {
      enumerated += relevant_collections(3, a, size).size();
    }
  }
  CHECK(total == enumerated);  // classification is total

  const std::string json_text = report.to_json();
  CHECK(json_text.find("\"type\":\"probe\"") != std::string::npos);
  CHECK(report.to_json() == json_text);  // deterministic
}
