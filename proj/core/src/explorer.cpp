#include "ke/explorer.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "ke/errors.hpp"
#include "ke/independence.hpp"
#include "ke/invariants.hpp"
#include "ke/matching.hpp"
#include "ke/recognition.hpp"
#include "json_util.hpp"

namespace ke {

using nlohmann::json;

namespace detail {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stress_draw(std::uint64_t seed, std::uint64_t index,
                          std::uint64_t counter) {
  return splitmix(splitmix(splitmix(seed) ^ index) ^ counter);
}

double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

void validate(const TrialConfig& config) {
  if (config.trials < 1 || config.universe_max < 1 || config.alpha_max < 1 ||
      config.collection_size_max < 1 || config.graph_n_max < 1 ||
      config.edge_probability < 0.0 || config.edge_probability > 1.0) {
    throw Error(ErrorCode::PreconditionFails, "invalid trial config");
  }
}

TheoremId parse_theorem_id(const std::string& text) {
  std::string upper;
  for (char ch : text) upper += static_cast<char>(std::toupper(ch));
  if (upper == "BROKEN") return TheoremId::Broken;
  if (upper == "SIGNED") return TheoremId::Signed;
  if (upper == "EVEN") return TheoremId::Even;
  if (upper == "DUALITY") return TheoremId::Duality;
  if (upper == "EXISTENTIAL") return TheoremId::Existential;
  if (upper == "TRIANGLE") return TheoremId::Triangle;
  if (upper == "MONOTONE") return TheoremId::Monotone;
  if (upper == "NONNEG_M") return TheoremId::NonnegM;
  if (upper == "DAM26") return TheoremId::Dam26;
  if (upper == "HKE63") return TheoremId::Hke63;
  throw Error(ErrorCode::UnknownTheorem, text);
}

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Broken:      return "BROKEN";
    case TheoremId::Signed:      return "SIGNED";
    case TheoremId::Even:        return "EVEN";
    case TheoremId::Duality:     return "DUALITY";
    case TheoremId::Existential: return "EXISTENTIAL";
    case TheoremId::Triangle:    return "TRIANGLE";
    case TheoremId::Monotone:    return "MONOTONE";
    case TheoremId::NonnegM:     return "NONNEG_M";
    case TheoremId::Dam26:       return "DAM26";
    case TheoremId::Hke63:       return "HKE63";
  }
  return "?";
}

std::vector<TheoremId> all_theorem_ids() {
  return {TheoremId::Broken,   TheoremId::Signed,      TheoremId::Even,
          TheoremId::Duality,  TheoremId::Existential, TheoremId::Triangle,
          TheoremId::Monotone, TheoremId::NonnegM,     TheoremId::Dam26,
          TheoremId::Hke63};
}

namespace filters {

bool m_hypothesis_holds(const SetCollection& c) {
  if (c.size() < 2) return false;
  int beta = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int e_removed = e_value(c.without(c.member(i)));
    if (i == 0) {
      beta = e_removed;
    } else if (e_removed != beta) {
      return false;
    }
  }
  return true;
}

bool every_removal_hke(const SetCollection& c) {
  if (c.size() < 2) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_hke_bruteforce(c.without(c.member(i)))) return false;
  }
  return true;
}

}  // namespace filters

void enumerate_relevant_collections(
    int universe_max, int alpha, int size,
    const std::function<void(const SetCollection&)>& yield) {
  if (universe_max < 1 || universe_max > 7 || size < 1 || size > 5 ||
      alpha < 1) {
    throw Error(ErrorCode::TooLarge,
                "collection enumeration bounds are universe_max <= 7, size <= 5");
  }
  if (alpha > universe_max) return;

  // all alpha-subsets of {1..universe_max}, lexicographic
  std::vector<FiniteSet> atoms;
  std::vector<int> pickers(alpha);
  for (int i = 0; i < alpha; ++i) pickers[i] = i + 1;
  while (true) {
    atoms.push_back(FiniteSet(pickers));
    int j = alpha;
    while (j > 0 && pickers[j - 1] == universe_max - alpha + j) --j;
    if (j == 0) break;
    ++pickers[j - 1];
    for (int i = j; i < alpha; ++i) pickers[i] = pickers[i - 1] + 1;
  }
  const int atom_count = static_cast<int>(atoms.size());
  if (atom_count < size) return;

  // size-combinations of the atoms, lexicographic; atoms are already in
  // canonical member order so the collection needs no re-sorting
  std::vector<int> chosen(size);
  for (int i = 0; i < size; ++i) chosen[i] = i;
  while (true) {
    std::vector<FiniteSet> members;
    members.reserve(size);
    for (int idx : chosen) members.push_back(atoms[idx]);
    yield(SetCollection(std::move(members)));
    int j = size;
    while (j > 0 && chosen[j - 1] == atom_count - size + (j - 1)) --j;
    if (j == 0) break;
    ++chosen[j - 1];
    for (int i = j; i < size; ++i) chosen[i] = chosen[i - 1] + 1;
  }
}

std::vector<SetCollection> relevant_collections(int universe_max, int alpha,
                                                int size) {
  std::vector<SetCollection> out;
  enumerate_relevant_collections(universe_max, alpha, size,
                                 [&out](const SetCollection& c) { out.push_back(c); });
  return out;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& yield) {
  if (n < 1 || n > 6) {
    throw Error(ErrorCode::TooLarge, "exhaustive graph enumeration needs n <= 6");
  }
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) edges.push_back(slots[i]);
    }
    yield(Graph(n, std::move(edges)));
  }
}

Graph random_graph(const TrialConfig& config, std::uint64_t index) {
  validate(config);
  const int n = config.graph_n_max;
  std::vector<std::pair<int, int>> edges;
  std::uint64_t slot = 0;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v, ++slot) {
      const double roll =
          detail::uniform01(detail::stress_draw(config.seed, index, slot));
      if (roll < config.edge_probability) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

constexpr std::size_t kProbeExampleCap = 5;

json config_json(const TrialConfig& config, bool exhaustive) {
  return json{{"seed", config.seed},
              {"trials", config.trials},
              {"universe_max", config.universe_max},
              {"alpha_max", config.alpha_max},
              {"collection_size_max", config.collection_size_max},
              {"graph_n_max", config.graph_n_max},
              {"edge_probability", config.edge_probability},
              {"exhaustive", exhaustive}};
}

// Instance consumers shared by the collection-shaped theorems.
struct CollectionCheck {
  int min_size = 1;
  int exact_size = 0;  // nonzero: only this size qualifies
  std::function<bool(const SetCollection&)> qualifies;
  // returns the failed assertion, empty when the conclusion holds
  std::function<std::string(const SetCollection&)> check;
};

// deterministic random relevant collection for one trial; mirrors the
// lexicographic atom order of enumerate_relevant_collections
SetCollection draw_collection(const TrialConfig& config, std::uint64_t index,
                              int min_size, int exact_size) {
  const int alpha_bound = std::min(config.alpha_max, config.universe_max);
  std::uint64_t counter = 0;
  const int alpha_v = 1 + static_cast<int>(
      detail::stress_draw(config.seed, index, counter++) %
      static_cast<std::uint64_t>(alpha_bound));
  std::vector<std::vector<int>> atoms;
  std::vector<int> pickers(alpha_v);
  for (int i = 0; i < alpha_v; ++i) pickers[i] = i + 1;
  while (true) {
    atoms.push_back(pickers);
    int j = alpha_v;
    while (j > 0 && pickers[j - 1] == config.universe_max - alpha_v + j) --j;
    if (j == 0) break;
    ++pickers[j - 1];
    for (int i = j; i < alpha_v; ++i) pickers[i] = pickers[i - 1] + 1;
  }
  const int atom_count = static_cast<int>(atoms.size());
  int size_low = exact_size > 0 ? exact_size : min_size;
  int size_high = exact_size > 0 ? exact_size : config.collection_size_max;
  size_high = std::min(size_high, atom_count);
  size_low = std::min(size_low, size_high);
  const int size =
      size_low + static_cast<int>(detail::stress_draw(config.seed, index, counter++) %
                                  static_cast<std::uint64_t>(size_high - size_low + 1));
  std::vector<int> chosen;
  while (static_cast<int>(chosen.size()) < size) {
    const int pick = static_cast<int>(
        detail::stress_draw(config.seed, index, counter++) %
        static_cast<std::uint64_t>(atom_count));
    if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) {
      chosen.push_back(pick);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<FiniteSet> members;
  for (int idx : chosen) members.push_back(FiniteSet(atoms[idx]));
  return SetCollection(std::move(members));
}

void run_collection_stress(const CollectionCheck& suite, const TrialConfig& config,
                           bool exhaustive, StressReport& report) {
  auto consume = [&](const SetCollection& c) {
    if (suite.exact_size > 0 && static_cast<int>(c.size()) != suite.exact_size) return;
    if (static_cast<int>(c.size()) < suite.min_size) return;
    if (suite.qualifies && !suite.qualifies(c)) return;
    ++report.instances_checked;
    const std::string failed = suite.check(c);
    if (!failed.empty()) {
      report.violations.push_back(
          {json{{"collection", detail::collection_json(c)}}.dump(), failed});
    }
  };
  if (exhaustive) {
    const int alpha_bound = std::min(config.alpha_max, config.universe_max);
    for (int a = 1; a <= alpha_bound; ++a) {
      for (int size = suite.exact_size > 0 ? suite.exact_size : suite.min_size;
           size <= (suite.exact_size > 0 ? suite.exact_size
                                        : config.collection_size_max);
           ++size) {
        enumerate_relevant_collections(config.universe_max, a, size, consume);
      }
    }
  } else {
    for (int t = 0; t < config.trials; ++t) {
      consume(draw_collection(config, static_cast<std::uint64_t>(t),
                              suite.min_size, suite.exact_size));
    }
  }
}

void run_graph_stress(const std::function<void(const Graph&, StressReport&)>& consume,
                      const TrialConfig& config, bool exhaustive,
                      StressReport& report) {
  if (exhaustive) {
    for (int n = 1; n <= config.graph_n_max; ++n) {
      for_each_graph(n, [&](const Graph& g) { consume(g, report); });
    }
  } else {
    for (int t = 0; t < config.trials; ++t) {
      consume(random_graph(config, static_cast<std::uint64_t>(t)), report);
    }
  }
}

std::string check_broken(const SetCollection& c) {
  MInvariantResult r;
  try {
    r = compute_m(c);
  } catch (const Error& e) {
    return std::string("compute_m failed under its hypothesis: ") + e.what();
  }
  if (r.m != e_value(c) - r.beta) return "m != e(c) - beta";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (r.member_defects[i] != r.m) {
      return "removal defect at " + to_string(c.member(i)) + " is " +
             std::to_string(r.member_defects[i]) + ", expected m = " +
             std::to_string(r.m);
    }
    const int identity = e_value(c) - e_value(c.without(c.member(i)));
    if (r.member_defects[i] != identity) {
      return "removal defect disagrees with e(c) - e(c - {s})";
    }
  }
  bool any_removal_ke = false;
  bool all_removals_ke = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool ke = is_ke(c.without(c.member(i)));
    any_removal_ke = any_removal_ke || ke;
    all_removals_ke = all_removals_ke && ke;
  }
  if (any_removal_ke) {
    if (!all_removals_ke) return "c - {s} KE for some s but not for every s";
    if ((r.m == 0) != is_ke(c)) return "m = 0 does not match KE(c)";
  }
  return {};
}

std::string check_signed(const SetCollection& c) {
  SignedLawReport report;
  try {
    report = signed_partition_law(c);
  } catch (const Error& e) {
    return std::string("signed_partition_law failed under its hypothesis: ") +
           e.what();
  }
  if (report.pass) return {};
  for (const SignedLawEntry& entry : report.entries) {
    if (entry.defect != entry.predicted) {
      return "defect " + std::to_string(entry.defect) + " for part1 = " +
             to_string(entry.parts.part1()) + ", predicted " +
             std::to_string(entry.predicted);
    }
  }
  return "signed law report failed without a bad entry";
}

}  // namespace

StressReport stress(TheoremId id, const TrialConfig& config, bool exhaustive) {
  validate(config);
  const auto started = std::chrono::steady_clock::now();
  StressReport report;
  report.theorem_id = to_string(id);
  report.config = config;
  report.exhaustive = exhaustive;

  switch (id) {
    case TheoremId::Broken: {
      CollectionCheck suite;
      suite.min_size = 2;
      suite.qualifies = filters::m_hypothesis_holds;
      suite.check = check_broken;
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Signed: {
      CollectionCheck suite;
      suite.min_size = 2;
      suite.qualifies = filters::every_removal_hke;
      suite.check = check_signed;
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Even: {
      CollectionCheck suite;
      suite.min_size = 2;
      suite.qualifies = [](const SetCollection& c) {
        return c.size() % 2 == 0 && filters::every_removal_hke(c);
      };
      suite.check = [](const SetCollection& c) -> std::string {
        return is_hke_bruteforce(c) ? std::string{}
                                    : "even-size collection is not hke";
      };
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Duality: {
      CollectionCheck suite;
      suite.check = [](const SetCollection& c) -> std::string {
        const bool brute = is_hke_bruteforce(c);
        const bool dual = is_hke_via_duality(c).hke;
        if (brute == dual) return {};
        return "duality route says " + std::to_string(dual) +
               ", brute force says " + std::to_string(brute);
      };
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Existential: {
      CollectionCheck suite;
      suite.check = [](const SetCollection& c) -> std::string {
        const bool brute = is_hke_bruteforce(c);
        const bool existential = is_hke_via_existential(c);
        if (brute == existential) return {};
        return "existential route says " + std::to_string(existential) +
               ", brute force says " + std::to_string(brute);
      };
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Triangle: {
      CollectionCheck suite;
      suite.exact_size = 3;
      suite.check = [](const SetCollection& c) -> std::string {
        const bool shortcut =
            triangle_hke_check(c.member(0), c.member(1), c.member(2));
        const bool brute = is_hke_bruteforce(c);
        if (shortcut == brute) return {};
        return "triangle shortcut says " + std::to_string(shortcut) +
               ", brute force says " + std::to_string(brute);
      };
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Hke63: {
      CollectionCheck suite;
      suite.check = [](const SetCollection& c) -> std::string {
        const bool hke = is_hke_bruteforce(c);
        const bool split = is_ke(c) && realizable_in_some_omega(c).realizable;
        if (hke == split) return {};
        return "hke = " + std::to_string(hke) +
               " but (KE and realizable) = " + std::to_string(split);
      };
      run_collection_stress(suite, config, exhaustive, report);
      break;
    }
    case TheoremId::Dam26: {
      run_graph_stress(
          [](const Graph& g, StressReport& rep) {
            ++rep.instances_checked;
            const bool ke = is_ke_graph(g);
            const bool certified = ke_certificate_search(g).has_value();
            if (ke != certified) {
              rep.violations.push_back(
                  {json{{"graph", detail::graph_json(g)}}.dump(),
                   "is_ke_graph = " + std::to_string(ke) +
                       " but certificate found = " + std::to_string(certified)});
            }
          },
          config, exhaustive, report);
      break;
    }
    case TheoremId::Monotone: {
      const int size_cap = config.collection_size_max;
      run_graph_stress(
          [size_cap](const Graph& g, StressReport& rep) {
            const SetCollection om = omega(g);
            // candidate c over subcollections of Omega(G)
            std::vector<std::uint32_t> c_masks;
            if (om.size() <= 20) {
              for (std::uint32_t mask : subset_masks(om.size())) {
                if (std::popcount(mask) <= size_cap) c_masks.push_back(mask);
              }
            }
            // independent-set pool for refinements that are not subcollections
            std::vector<FiniteSet> pool;
            for (std::uint64_t mask = 1;
                 mask < (std::uint64_t{1} << g.vertex_count()); ++mask) {
              std::vector<int> ids;
              for (int v = 0; v < g.vertex_count(); ++v) {
                if (mask & (std::uint64_t{1} << v)) ids.push_back(v + 1);
              }
              FiniteSet s(ids);
              if (is_independent(g, s)) pool.push_back(std::move(s));
            }
            for (std::uint32_t c_mask : c_masks) {
              const SetCollection c = om.subcollection(c_mask);
              const FiniteSet c_union = c.union_all();
              const FiniteSet c_core = c.intersect_all();
              auto run_instance = [&](const SetCollection& c_prime) {
                ++rep.instances_checked;
                if (!monotonicity_check(g, c, c_prime)) {
                  rep.violations.push_back(
                      {json{{"graph", detail::graph_json(g)},
                            {"c", detail::collection_json(c)},
                            {"c_prime", detail::collection_json(c_prime)}}
                           .dump(),
                       "e(c_prime) > e(c) under refinement"});
                }
              };
              for (std::uint32_t sub : subset_masks(c.size())) {
                run_instance(c.subcollection(sub));
              }
              // singletons and pairs drawn from all independent sets
              for (std::size_t i = 0; i < pool.size(); ++i) {
                const FiniteSet& a = pool[i];
                if (a.subset_of(c_union) && c_core.subset_of(a)) {
                  run_instance(SetCollection{a});
                }
                for (std::size_t j = i + 1; j < pool.size(); ++j) {
                  const FiniteSet& b = pool[j];
                  if (a.set_union(b).subset_of(c_union) &&
                      c_core.subset_of(a.set_intersection(b))) {
                    run_instance(SetCollection{a, b});
                  }
                }
              }
            }
          },
          config, exhaustive, report);
      break;
    }
    case TheoremId::NonnegM: {
      const int size_cap = config.collection_size_max;
      run_graph_stress(
          [size_cap](const Graph& g, StressReport& rep) {
            const SetCollection om = omega(g);
            if (om.size() > 20) return;
            for (std::uint32_t mask : subset_masks(om.size(), 2)) {
              if (std::popcount(mask) > size_cap) continue;
              const SetCollection c = om.subcollection(mask);
              if (!filters::every_removal_hke(c)) continue;
              ++rep.instances_checked;
              const MInvariantResult r = nonnegative_m_check(g, c);
              if (r.m < 0) {
                rep.violations.push_back(
                    {json{{"graph", detail::graph_json(g)},
                          {"c", detail::collection_json(c)}}
                         .dump(),
                     "m = " + std::to_string(r.m) + " is negative inside Omega(G)"});
              }
            }
          },
          config, exhaustive, report);
      break;
    }
  }

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

std::string StressReport::to_jsonl() const {
  std::string out;
  for (const StressViolation& v : violations) {
    json line{{"type", "violation"},
              {"theorem", theorem_id},
              {"assertion", v.assertion},
              {"instance", json::parse(v.instance_json)}};
    out += line.dump();
    out += "\n";
  }
  json summary{{"type", "summary"},
               {"theorem", theorem_id},
               {"instances_checked", instances_checked},
               {"violations", violations.size()},
               {"pass", passed()},
               {"config", config_json(config, exhaustive)}};
  out += summary.dump();
  out += "\n";
  return out;
}

ProbeReport probe_omega_characterization(const TrialConfig& config) {
  validate(config);
  ProbeReport report;
  const int alpha_bound = std::min(config.alpha_max, config.universe_max);
  for (int a = 1; a <= alpha_bound; ++a) {
    for (int size = 1; size <= config.collection_size_max; ++size) {
      enumerate_relevant_collections(
          config.universe_max, a, size, [&report](const SetCollection& f) {
            const RealizabilityResult r = realizable_in_some_omega(f);
            const std::string serialized =
                detail::collection_json(f).dump();
            if (!r.realizable) {
              ++report.unrealizable;
              if (report.unrealizable_examples.size() < kProbeExampleCap) {
                report.unrealizable_examples.push_back(serialized);
              }
              return;
            }
            // map Omega(G_f) back to the original element labels
            const SetCollection witness_omega = omega(r.witness);
            std::vector<FiniteSet> mapped;
            for (const FiniteSet& s : witness_omega.members()) {
              std::vector<int> ids;
              for (int v : s.elements()) ids.push_back(r.labels[v - 1]);
              mapped.push_back(FiniteSet(std::move(ids)));
            }
            if (SetCollection(std::move(mapped)) == f) {
              ++report.exactly_realizable;
              if (report.exact_examples.size() < kProbeExampleCap) {
                report.exact_examples.push_back(serialized);
              }
            } else {
              ++report.properly_contained;
              if (report.contained_examples.size() < kProbeExampleCap) {
                report.contained_examples.push_back(serialized);
              }
            }
          });
    }
  }
  return report;
}

std::string ProbeReport::to_json() const {
  auto parse_all = [](const std::vector<std::string>& items) {
    json out = json::array();
    for (const std::string& item : items) out.push_back(json::parse(item));
    return out;
  };
  json out{{"type", "probe"},
           {"exactly_realizable", exactly_realizable},
           {"properly_contained", properly_contained},
           {"unrealizable", unrealizable},
           {"examples",
            json{{"exact", parse_all(exact_examples)},
                 {"properly_contained", parse_all(contained_examples)},
                 {"unrealizable", parse_all(unrealizable_examples)}}}};
  return out.dump();
}

}  // namespace ke
