#include "ke/graph.hpp"

#include <algorithm>
#include <numeric>

#include "ke/errors.hpp"

namespace ke {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) {
    throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
  }
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") leaves 1.." + std::to_string(n_));
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidElement,
                  "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(n_ + 1, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  return adjacency_[v];
}

FiniteSet Graph::vertex_set() const {
  std::vector<int> ids(n_);
  std::iota(ids.begin(), ids.end(), 1);
  return FiniteSet(std::move(ids));
}

std::string to_string(const Graph& g) {
  std::string out = "G(n=" + std::to_string(g.vertex_count()) + ", E={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out += ",";
    out += "(" + std::to_string(g.edges()[i].first) + "," +
           std::to_string(g.edges()[i].second) + ")";
  }
  return out + "})";
}

bool valid_matching(const Graph& g, const Matching& m) {
  std::vector<bool> touched(g.vertex_count() + 1, false);
  for (const auto& [u, v] : m.edges) {
    if (!g.has_edge(u, v)) return false;
    if (touched[u] || touched[v]) return false;
    touched[u] = touched[v] = true;
  }
  return true;
}

bool is_independent(const Graph& g, const FiniteSet& s) {
  for (int v : s.elements()) {
    if (v < 1 || v > g.vertex_count()) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(g.vertex_count()));
    }
  }
  for (int v : s.elements()) {
    for (int u : g.neighbors(v)) {
      if (u > v && s.contains(u)) return false;
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const FiniteSet& s) {
  if (s.empty()) {
    throw Error(ErrorCode::EmptySet, "induced subgraph on the empty set");
  }
  for (int v : s.elements()) {
    if (v < 1 || v > g.vertex_count()) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(g.vertex_count()));
    }
  }
  InducedSubgraph out;
  out.labels = s.elements();
  std::vector<int> new_id(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    new_id[out.labels[i]] = static_cast<int>(i) + 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (new_id[u] != 0 && new_id[v] != 0) {
      edges.push_back({new_id[u], new_id[v]});
    }
  }
  out.graph = Graph(static_cast<int>(out.labels.size()), std::move(edges));
  return out;
}

}  // namespace ke
