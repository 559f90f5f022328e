#pragma once

// Shared instances the suites keep coming back to.

#include "ke/collection.hpp"
#include "ke/graph.hpp"

namespace ke::fixtures {

// Three singletons: alpha 1, e = 3, m = 1, not KE.
inline SetCollection three_singletons() {
  return SetCollection{FiniteSet{1}, FiniteSet{2}, FiniteSet{3}};
}

// Non-KE triple with alpha 5 whose every pair is hke and whose m is -1.
inline SetCollection negative_m_triple() {
  return SetCollection{FiniteSet{1, 2, 3, 4, 5}, FiniteSet{4, 5, 6, 7, 8},
                       FiniteSet{3, 6, 7, 8, 9}};
}

// hke chain of three 2-sets; every subcollection has e = 4.
inline SetCollection hke_chain() {
  return SetCollection{FiniteSet{1, 2}, FiniteSet{2, 3}, FiniteSet{3, 4}};
}

// The 7-vertex graph with alpha = mu = 3 that is not KE, while the
// subgraph induced on {1..6} is KE and the one on {1,2,3,4,5,7} is not.
inline Graph seven_vertex_graph() {
  return Graph(7, {{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4},
                   {3, 6}, {4, 6}, {4, 7}, {5, 7}, {6, 7}});
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, 1});
  return Graph(n, std::move(edges));
}

inline Graph edgeless_graph(int n) { return Graph(n, {}); }

}  // namespace ke::fixtures
