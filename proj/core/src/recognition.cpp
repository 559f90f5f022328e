#include "ke/recognition.hpp"

#include <algorithm>
#include <set>

#include "ke/errors.hpp"
#include "ke/independence.hpp"
#include "ke/matching.hpp"

namespace ke {

namespace {

// Matching test of Theorem-style certificates: every vertex outside
// union(candidate) must be matched to a distinct neighbor inside
// intersect(candidate).
std::optional<Matching> saturating_matching(const Graph& g,
                                            const SetCollection& candidate) {
  const FiniteSet covered = candidate.union_all();
  const FiniteSet core = candidate.intersect_all();
  std::vector<int> outside;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!covered.contains(v)) outside.push_back(v);
  }
  auto pairs = bipartite_match(g, outside, core.elements());
  if (pairs.size() != outside.size()) return std::nullopt;
  Matching m;
  for (auto& [l, r] : pairs) {
    m.edges.push_back({std::min(l, r), std::max(l, r)});
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace

bool is_ke_graph(const Graph& g, const Limits& limits) {
  return alpha_graph(g, limits) + mu(g, limits).size == g.vertex_count();
}

std::optional<KECertificate> ke_certificate_search(const Graph& g,
                                                   const Limits& limits) {
  const SetCollection om = omega(g, limits);
  const int two_alpha = 2 * alpha(om);
  const int count = static_cast<int>(om.size());

  auto pick = [&om](const std::vector<int>& indices) {
    std::vector<FiniteSet> members;
    members.reserve(indices.size());
    for (int i : indices) members.push_back(om.member(i));
    return SetCollection(std::move(members));
  };

  // level k holds the index tuples of the hke subcollections of size k,
  // in lexicographic order
  std::vector<std::vector<int>> level;
  for (int i = 0; i < count; ++i) level.push_back({i});

  while (!level.empty()) {
    for (const auto& indices : level) {
      const SetCollection candidate = pick(indices);
      if (auto matching = saturating_matching(g, candidate)) {
        return KECertificate{candidate, std::move(*matching)};
      }
    }
    // grow: extend each tuple by a larger index; keep extensions whose every
    // sub-tuple was hke and whose own e-value closes the hke condition
    std::set<std::vector<int>> prev(level.begin(), level.end());
    std::vector<std::vector<int>> next;
    for (const auto& indices : level) {
      for (int j = indices.back() + 1; j < count; ++j) {
        std::vector<int> extended = indices;
        extended.push_back(j);
        bool hereditary = true;
        for (std::size_t drop = 0; drop + 1 < extended.size() && hereditary;
             ++drop) {
          std::vector<int> sub = extended;
          sub.erase(sub.begin() + drop);
          hereditary = prev.count(sub) > 0;
        }
        if (!hereditary) continue;
        if (e_value(pick(extended)) != two_alpha) continue;
        next.push_back(std::move(extended));
        if (next.size() > limits.max_candidates) {
          throw Error(ErrorCode::TooLarge,
                      "certificate search exceeded " +
                          std::to_string(limits.max_candidates) +
                          " candidate subcollections per level");
        }
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

RealizabilityResult realizable_in_some_omega(const SetCollection& f,
                                             const Limits& limits) {
  const int target = alpha(f);
  RealizabilityResult result;
  result.labels = f.union_all().elements();
  const int n = static_cast<int>(result.labels.size());
  if (n > limits.max_exact_n) {
    throw Error(ErrorCode::TooLarge,
                "union of " + std::to_string(n) + " elements exceeds the bound of " +
                    std::to_string(limits.max_exact_n));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool together = false;
      for (const FiniteSet& s : f.members()) {
        if (s.contains(result.labels[i]) && s.contains(result.labels[j])) {
          together = true;
          break;
        }
      }
      if (!together) edges.push_back({i + 1, j + 1});
    }
  }
  result.witness = Graph(n, std::move(edges));
  result.realizable = alpha_graph(result.witness, limits) == target;
  return result;
}

bool monotonicity_check(const Graph& g, const SetCollection& c,
                        const SetCollection& c_prime, const Limits& limits) {
  const SetCollection om = omega(g, limits);
  for (const FiniteSet& s : c.members()) {
    if (!om.contains(s)) {
      throw Error(ErrorCode::PreconditionFails,
                  to_string(s) + " is not a maximum independent set");
    }
  }
  for (const FiniteSet& s : c_prime.members()) {
    if (!is_independent(g, s)) {
      throw Error(ErrorCode::PreconditionFails,
                  to_string(s) + " is not independent");
    }
  }
  if (!refines(c_prime, c)) {
    throw Error(ErrorCode::PreconditionFails, "c_prime does not refine c");
  }
  return e_value(c_prime) <= e_value(c);
}

MInvariantResult nonnegative_m_check(const Graph& g, const SetCollection& c,
                                     const Limits& limits) {
  if (c.size() < 2) {
    throw Error(ErrorCode::CollectionTooSmall,
                "the m-invariant needs at least two members");
  }
  const SetCollection om = omega(g, limits);
  for (const FiniteSet& s : c.members()) {
    if (!om.contains(s)) {
      throw Error(ErrorCode::PreconditionFails,
                  to_string(s) + " is not a maximum independent set");
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_hke_bruteforce(c.without(c.member(i)))) {
      throw Error(ErrorCode::PreconditionFails,
                  "c - " + to_string(c.member(i)) + " is not an hke collection");
    }
  }
  return compute_m(c);
}

}  // namespace ke
