#include "ke/independence.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "ke/errors.hpp"

namespace ke {

namespace {

// Per-vertex neighbor bitmasks, bit i = vertex i+1.
std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[u - 1] |= std::uint64_t{1} << (v - 1);
    masks[v - 1] |= std::uint64_t{1} << (u - 1);
  }
  return masks;
}

void require_exact_scale(const Graph& g, const Limits& limits) {
  if (g.vertex_count() > limits.max_exact_n || g.vertex_count() > 63) {
    throw Error(ErrorCode::TooLarge,
                "exact search on " + std::to_string(g.vertex_count()) +
                    " vertices exceeds the bound of " +
                    std::to_string(std::min<int>(limits.max_exact_n, 63)));
  }
}

// Branch on a maximum-degree candidate vertex; include-first ordering finds
// large sets early, which tightens the popcount bound.
void mis_bound(std::uint64_t candidates, int current, int& best,
               const std::vector<std::uint64_t>& nbr) {
  if (current + std::popcount(candidates) <= best) return;
  if (candidates == 0) {
    best = current;
    return;
  }
  int pick = -1;
  int pick_degree = -1;
  for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(nbr[v] & candidates);
    if (d > pick_degree) {
      pick_degree = d;
      pick = v;
    }
  }
  if (pick_degree == 0) {
    // all remaining candidates are pairwise non-adjacent
    best = std::max(best, current + std::popcount(candidates));
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << pick;
  mis_bound(candidates & ~bit & ~nbr[pick], current + 1, best, nbr);
  mis_bound(candidates & ~bit, current, best, nbr);
}

void collect_independent(std::uint64_t candidates, std::uint64_t chosen,
                         int chosen_count, int target, std::size_t max_count,
                         const std::vector<std::uint64_t>& nbr,
                         std::vector<std::uint64_t>& out) {
  if (chosen_count == target) {
    if (out.size() >= max_count) {
      throw Error(ErrorCode::TooLarge,
                  "more than " + std::to_string(max_count) +
                      " maximum independent sets");
    }
    out.push_back(chosen);
    return;
  }
  if (chosen_count + std::popcount(candidates) < target) return;
  const int v = std::countr_zero(candidates);
  const std::uint64_t bit = std::uint64_t{1} << v;
  // taking the lowest candidate first yields lexicographic output order
  collect_independent(candidates & ~bit & ~nbr[v], chosen | bit,
                      chosen_count + 1, target, max_count, nbr, out);
  collect_independent(candidates & ~bit, chosen, chosen_count, target,
                      max_count, nbr, out);
}

}  // namespace

int alpha_graph(const Graph& g, const Limits& limits) {
  if (g.vertex_count() < 1) {
    throw Error(ErrorCode::EmptySet, "alpha of an empty graph");
  }
  require_exact_scale(g, limits);
  const auto nbr = neighbor_masks(g);
  const std::uint64_t all =
      (g.vertex_count() == 63) ? ~std::uint64_t{0} >> 1
                               : (std::uint64_t{1} << g.vertex_count()) - 1;
  int best = 0;
  mis_bound(all, 0, best, nbr);
  return best;
}

SetCollection omega(const Graph& g, const Limits& limits) {
  const int target = alpha_graph(g, limits);
  const auto nbr = neighbor_masks(g);
  const std::uint64_t all =
      (g.vertex_count() == 63) ? ~std::uint64_t{0} >> 1
                               : (std::uint64_t{1} << g.vertex_count()) - 1;
  std::vector<std::uint64_t> found;
  collect_independent(all, 0, 0, target, limits.max_omega, nbr, found);
  std::vector<FiniteSet> members;
  members.reserve(found.size());
  for (std::uint64_t mask : found) {
    std::vector<int> ids;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      ids.push_back(std::countr_zero(rest) + 1);
    }
    members.emplace_back(std::move(ids));
  }
  return SetCollection(std::move(members));
}

}  // namespace ke
