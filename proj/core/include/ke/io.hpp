#pragma once

#include <string>
#include <string_view>

#include "ke/collection.hpp"
#include "ke/graph.hpp"

namespace ke {

enum class InputFormat { Auto, Json, EdgeList };

/// Canonical form {"sets": [[1,2],[2,3]]}; inner arrays strictly increasing
/// on output, any order accepted on input. Throws ParseError on malformed
/// input (including an empty sets array).
SetCollection parse_collection_json(const std::string& text);
std::string collection_to_json(const SetCollection& c);

/// {"n": 7, "edges": [[1,4],[1,5]]}. Throws ParseError.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

/// Plain text: a header line "n <count>" followed by one "u v" line per
/// edge. Blank lines and lines starting with '#' are ignored.
Graph parse_graph_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

/// Reads a whole file; throws ParseError when unreadable.
std::string read_file(const std::string& path);

/// Dispatches on format, or on the file extension when Auto
/// (.json -> JSON, anything else -> edge list; collections are always JSON).
Graph load_graph_file(const std::string& path, InputFormat format = InputFormat::Auto);
SetCollection load_collection_file(const std::string& path);

/// Content digest used to key analysis reports: "fnv1a64:" + 16 hex digits.
std::string content_digest(std::string_view bytes);

}  // namespace ke
