#pragma once

// Internal glue between core types and nlohmann::json. Not installed; the
// public API speaks strings (see ke/io.hpp).

#include <json.hpp>

#include "ke/collection.hpp"
#include "ke/graph.hpp"

namespace ke::detail {

inline nlohmann::json collection_json(const SetCollection& c) {
  nlohmann::json sets = nlohmann::json::array();
  for (const FiniteSet& s : c.members()) sets.push_back(nlohmann::json(s.elements()));
  return nlohmann::json{{"sets", sets}};
}

inline nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(nlohmann::json::array({u, v}));
  }
  return nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}};
}

}  // namespace ke::detail
