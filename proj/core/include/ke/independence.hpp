#pragma once

#include "ke/collection.hpp"
#include "ke/graph.hpp"
#include "ke/limits.hpp"

namespace ke {

/// Exact maximum independent set size, by branch and bound on bitmasks.
/// Throws TooLarge beyond limits.max_exact_n (hard cap 63).
int alpha_graph(const Graph& g, const Limits& limits = {});

/// Omega(G): every independent set of size alpha_graph(g), as a canonically
/// ordered collection. Throws TooLarge when more than limits.max_omega sets
/// exist.
SetCollection omega(const Graph& g, const Limits& limits = {});

}  // namespace ke
