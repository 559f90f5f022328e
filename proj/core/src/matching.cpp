#include "ke/matching.hpp"

#include <algorithm>
#include <queue>

#include "ke/errors.hpp"

namespace ke {

namespace {

// Edmonds' blossom algorithm, 0-indexed. One alternating BFS tree per
// exposed vertex; odd cycles are contracted by re-basing their vertices.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : n_(g.vertex_count()), adj_(n_) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u - 1].push_back(v - 1);
      adj_[v - 1].push_back(u - 1);
    }
    mate_.assign(n_, -1);
  }

  std::vector<int> solve() {
    // greedy seed matching cuts down the number of BFS phases
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int to : adj_[v]) {
        if (mate_[to] == -1) {
          mate_[v] = to;
          mate_[to] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1) augment_from(v);
    }
    return mate_;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::vector<bool> seen(n_, false);
    int cur = a;
    while (true) {
      cur = base_[cur];
      seen[cur] = true;
      if (mate_[cur] == -1) break;
      cur = parent_[mate_[cur]];
    }
    cur = b;
    while (!seen[base_[cur]]) cur = parent_[mate_[cur]];
    return base_[cur];
  }

  void mark_path(int v, int stem, int child, std::vector<bool>& in_blossom) {
    while (base_[v] != stem) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void augment_from(int root) {
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::vector<bool> used(n_, false);
    used[root] = true;
    std::queue<int> queue;
    queue.push(root);

    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // odd cycle: contract the blossom around its lowest common base
          const int stem = lowest_common_base(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_path(v, stem, to, in_blossom);
          mark_path(to, stem, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = stem;
              if (!used[i]) {
                used[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) {
            // exposed vertex reached: flip matched/unmatched along the path
            int u = to;
            while (u != -1) {
              const int pv = parent_[u];
              const int next = mate_[pv];
              mate_[u] = pv;
              mate_[pv] = u;
              u = next;
            }
            return;
          }
          used[mate_[to]] = true;
          queue.push(mate_[to]);
        }
      }
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
};

}  // namespace

MuResult mu(const Graph& g, const Limits& limits) {
  if (g.vertex_count() < 1) {
    throw Error(ErrorCode::EmptySet, "mu of an empty graph");
  }
  if (g.vertex_count() > limits.max_exact_n) {
    throw Error(ErrorCode::TooLarge,
                "matching on " + std::to_string(g.vertex_count()) +
                    " vertices exceeds the bound of " +
                    std::to_string(limits.max_exact_n));
  }
  const std::vector<int> mate = BlossomMatcher(g).solve();
  MuResult result;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] > v) {
      result.witness.edges.push_back({v + 1, mate[v] + 1});
    }
  }
  std::sort(result.witness.edges.begin(), result.witness.edges.end());
  result.size = result.witness.size();
  return result;
}

std::vector<std::pair<int, int>> bipartite_match(const Graph& g,
                                                 const std::vector<int>& left,
                                                 const std::vector<int>& right) {
  std::vector<int> right_index(g.vertex_count() + 1, -1);
  for (std::size_t i = 0; i < right.size(); ++i) right_index[right[i]] = static_cast<int>(i);

  // crossing edges only
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (int to : g.neighbors(left[i])) {
      if (right_index[to] != -1) adj[i].push_back(right_index[to]);
    }
  }

  std::vector<int> match_right(right.size(), -1);
  std::vector<bool> visited;
  auto try_augment = [&](auto&& self, int l) -> bool {
    for (int r : adj[l]) {
      if (visited[r]) continue;
      visited[r] = true;
      if (match_right[r] == -1 || self(self, match_right[r])) {
        match_right[r] = l;
        return true;
      }
    }
    return false;
  };
  for (std::size_t l = 0; l < left.size(); ++l) {
    visited.assign(right.size(), false);
    try_augment(try_augment, static_cast<int>(l));
  }

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t r = 0; r < right.size(); ++r) {
    if (match_right[r] != -1) {
      pairs.push_back({left[match_right[r]], right[r]});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace ke
