#pragma once

// Independent brute-force oracles. These deliberately share no code with
// the library's search routines: alpha scans every vertex subset, mu
// enumerates matchings edge by edge, omega filters the alpha scan. Keep
// them dumb; they are the ground truth the fast paths are judged against.

#include <bit>
#include <cstdint>
#include <vector>

#include "ke/collection.hpp"
#include "ke/graph.hpp"

namespace ke::oracles {

inline bool subset_independent(const Graph& g, std::uint64_t mask) {
  for (const auto& [u, v] : g.edges()) {
    const std::uint64_t pair =
        (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1));
    if ((mask & pair) == pair) return false;
  }
  return true;
}

inline int alpha_oracle(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (subset_independent(g, mask)) {
      best = std::max(best, std::popcount(mask));
    }
  }
  return best;
}

inline SetCollection omega_oracle(const Graph& g) {
  const int n = g.vertex_count();
  const int target = alpha_oracle(g);
  std::vector<FiniteSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) == target && subset_independent(g, mask)) {
      std::vector<int> ids;
      for (int v = 0; v < n; ++v) {
        if (mask & (std::uint64_t{1} << v)) ids.push_back(v + 1);
      }
      members.push_back(FiniteSet(std::move(ids)));
    }
  }
  return SetCollection(std::move(members));
}

// max matching by picking each remaining compatible edge in turn
inline int mu_oracle_step(const Graph& g, std::size_t from, std::uint64_t used) {
  int best = 0;
  for (std::size_t i = from; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    const std::uint64_t pair =
        (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (v - 1));
    if (used & pair) continue;
    best = std::max(best, 1 + mu_oracle_step(g, i + 1, used | pair));
  }
  return best;
}

inline int mu_oracle(const Graph& g) { return mu_oracle_step(g, 0, 0); }

}  // namespace ke::oracles
