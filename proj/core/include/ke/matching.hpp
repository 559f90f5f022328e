#pragma once

#include <vector>

#include "ke/graph.hpp"
#include "ke/limits.hpp"

namespace ke {

struct MuResult {
  int size = 0;
  Matching witness;
};

/// Exact maximum matching in a general graph (Edmonds' blossom algorithm),
/// with one witness matching. Throws TooLarge beyond limits.max_exact_n.
MuResult mu(const Graph& g, const Limits& limits = {});

/// Maximum bipartite matching from `left` into `right` (disjoint vertex
/// sets) along edges of g, by augmenting paths. Returns pairs
/// (left vertex, right vertex); a pair set of size |left| saturates left.
std::vector<std::pair<int, int>> bipartite_match(const Graph& g,
                                                 const std::vector<int>& left,
                                                 const std::vector<int>& right);

}  // namespace ke
