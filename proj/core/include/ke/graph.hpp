#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ke/finite_set.hpp"

namespace ke {

/// Finite simple undirected graph on vertices 1..n. Edges are stored
/// canonically as (min, max) pairs, sorted and de-duplicated. Immutable
/// after construction.
class Graph {
 public:
  Graph() = default;

  // Rejects self-loops and endpoints outside 1..n; parallel edges collapse.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  FiniteSet vertex_set() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;  // 1-indexed
};

std::string to_string(const Graph& g);

/// A set of pairwise non-incident edges. Validity against a host graph is
/// checked by valid_matching.
struct Matching {
  std::vector<std::pair<int, int>> edges;  // canonical (min,max), sorted

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

bool valid_matching(const Graph& g, const Matching& m);

/// True when no edge of g joins two vertices of s. Throws VertexOutOfRange
/// if s mentions a vertex outside 1..n. The empty set is independent.
bool is_independent(const Graph& g, const FiniteSet& s);

struct InducedSubgraph {
  Graph graph;              // relabeled to 1..|s|
  std::vector<int> labels;  // labels[i] = original label of vertex i+1
};

/// Subgraph induced on a non-empty vertex set, relabeled 1..|s| in
/// increasing original-label order; labels maps back to the host graph.
InducedSubgraph induced_subgraph(const Graph& g, const FiniteSet& s);

}  // namespace ke
