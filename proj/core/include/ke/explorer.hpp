#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ke/collection.hpp"
#include "ke/graph.hpp"

namespace ke {

/// Parameters for a stress run. Every generated instance is a pure function
/// of (seed, trial index), so runs with equal configs are byte-identical.
struct TrialConfig {
  std::uint64_t seed = 0;
  int trials = 100;
  int universe_max = 6;         // elements drawn from {1..universe_max}
  int alpha_max = 3;            // member cardinalities 1..alpha_max
  int collection_size_max = 4;  // at most this many members per collection
  int graph_n_max = 5;          // graph order (exhaustive: up to; random: exactly)
  double edge_probability = 0.5;
};

void validate(const TrialConfig& config);  // throws PreconditionFails

enum class TheoremId {
  Broken,       // constant removal defect m
  Signed,       // defect = (-1)^(|part1|+1) m over all bipartitions
  Even,         // even-size collections with hke removals are hke
  Duality,      // zero-defect route agrees with brute force
  Existential,  // some-balanced-partition route agrees with brute force
  Triangle,     // 3-set shortcut agrees with brute force
  Monotone,     // refinement cannot raise e
  NonnegM,      // m >= 0 inside some Omega(G)
  Dam26,        // certificate exists iff the graph is KE
  Hke63,        // hke iff KE and realizable inside some Omega(G)
};

/// Parses ids like "BROKEN" or "NONNEG_M" (case-insensitive).
/// Throws UnknownTheorem.
TheoremId parse_theorem_id(const std::string& text);
const char* to_string(TheoremId id);
std::vector<TheoremId> all_theorem_ids();

struct StressViolation {
  std::string instance_json;  // full instance, replayable
  std::string assertion;      // which conclusion failed
};

struct StressReport {
  std::string theorem_id;
  std::uint64_t instances_checked = 0;
  std::vector<StressViolation> violations;
  std::chrono::duration<double> elapsed{};
  TrialConfig config;       // echoed into the summary line for replay
  bool exhaustive = false;

  bool passed() const { return violations.empty(); }

  // One JSON object per violation plus a trailing summary object. Excludes
  // elapsed time, so identical runs serialize byte-identically.
  std::string to_jsonl() const;
};

/// Every duplicate-free collection of `size` distinct alpha-subsets of
/// {1..universe_max}, in canonical order. Guardrails: universe_max <= 7,
/// size <= 5 (throws TooLarge beyond).
void enumerate_relevant_collections(
    int universe_max, int alpha, int size,
    const std::function<void(const SetCollection&)>& yield);

std::vector<SetCollection> relevant_collections(int universe_max, int alpha,
                                                int size);

/// All 2^C(n,2) graphs on n labeled vertices. Guardrail n <= 5.
void for_each_graph(int n, const std::function<void(const Graph&)>& yield);

/// Deterministic Erdos-Renyi style draw: each potential edge of a
/// config.graph_n_max graph is included with config.edge_probability,
/// decided by a counter-based stream keyed on (seed, index, edge slot).
Graph random_graph(const TrialConfig& config, std::uint64_t index);

/// Runs one theorem as a universally quantified property. Exhaustive mode
/// enumerates every instance within the config bounds; otherwise
/// config.trials seeded random instances are drawn. Expected violation
/// count is zero for every theorem.
StressReport stress(TheoremId id, const TrialConfig& config, bool exhaustive);

/// Classification of collections f against Omega(G_f) for the maximal
/// compatible graph G_f. Purely descriptive; no theorem is asserted.
struct ProbeReport {
  std::uint64_t exactly_realizable = 0;    // f = Omega(G_f)
  std::uint64_t properly_contained = 0;    // f strictly inside Omega(G_f)
  std::uint64_t unrealizable = 0;          // f inside no Omega(G)
  std::vector<std::string> exact_examples;
  std::vector<std::string> contained_examples;
  std::vector<std::string> unrealizable_examples;

  std::string to_json() const;
};

ProbeReport probe_omega_characterization(const TrialConfig& config);

// The hypothesis filters the stress suites apply before consuming an
// instance; exposed so tests can assert the filters match the theorem
// statements.
namespace filters {
bool m_hypothesis_holds(const SetCollection& c);   // all e(c-{s}) agree
bool every_removal_hke(const SetCollection& c);    // each c-{s} is hke
}  // namespace filters

namespace detail {
// splitmix64-style counter mix; the whole pseudorandom contract.
std::uint64_t stress_draw(std::uint64_t seed, std::uint64_t index,
                          std::uint64_t counter);
double uniform01(std::uint64_t bits);
}  // namespace detail

}  // namespace ke
