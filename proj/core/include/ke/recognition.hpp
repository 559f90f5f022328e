#pragma once

#include <optional>
#include <vector>

#include "ke/collection.hpp"
#include "ke/graph.hpp"
#include "ke/invariants.hpp"
#include "ke/limits.hpp"

namespace ke {

/// alpha(G) + mu(G) = |V(G)|.
bool is_ke_graph(const Graph& g, const Limits& limits = {});

/// An hke subcollection of Omega(G) together with a matching of
/// V(G) - union(collection) into intersect(collection) along edges of G.
/// Exists iff G is a KE graph.
struct KECertificate {
  SetCollection collection;
  Matching matching;  // pairs one outside vertex with one core vertex each
};

/// Searches subcollections of Omega(G) smallest-first (lexicographic within
/// a size) for a certificate. hke candidates are grown level by level — a
/// k-set qualifies only if all its (k-1)-subsets did and its own e-value is
/// 2 alpha — so non-hke branches are pruned hereditarily. Returns the first
/// certificate found, or nullopt after exhausting all hke subcollections.
std::optional<KECertificate> ke_certificate_search(const Graph& g,
                                                   const Limits& limits = {});

struct RealizabilityResult {
  bool realizable = false;
  Graph witness;            // maximal compatible graph on union(f), relabeled
  std::vector<int> labels;  // labels[i] = element housed by vertex i+1
};

/// Whether f sits inside Omega(G) for SOME graph G. Decided exactly on the
/// maximal compatible graph G_f (edge {u,v} iff no member holds both):
/// every realizing graph is a subgraph of G_f, so f is realizable iff
/// alpha_graph(G_f) = alpha(f).
RealizabilityResult realizable_in_some_omega(const SetCollection& f,
                                             const Limits& limits = {});

/// For c inside Omega(g) and c_prime a collection of independent sets with
/// refines(c_prime, c): returns e(c_prime) <= e(c). Always true; a false
/// return means a bug, and the property suites treat it that way. Throws
/// PreconditionFails when the hypotheses do not hold.
bool monotonicity_check(const Graph& g, const SetCollection& c,
                        const SetCollection& c_prime, const Limits& limits = {});

/// compute_m for a c inside Omega(g) whose every single-removal is hke.
/// The caller checks result.m >= 0; inside some Omega(G) it cannot be
/// negative.
MInvariantResult nonnegative_m_check(const Graph& g, const SetCollection& c,
                                     const Limits& limits = {});

}  // namespace ke
