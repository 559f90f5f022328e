#include "ke/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "ke/errors.hpp"
#include "json_util.hpp"

namespace ke {

using nlohmann::json;

namespace {

json parse_json_text(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) {
    throw Error(ErrorCode::ParseError, "malformed JSON");
  }
  return parsed;
}

int as_vertex_id(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

SetCollection parse_collection_json(const std::string& text) {
  const json parsed = parse_json_text(text);
  if (!parsed.is_object() || !parsed.contains("sets") || !parsed["sets"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"sets\" array");
  }
  const json& sets = parsed["sets"];
  if (sets.empty()) {
    throw Error(ErrorCode::ParseError, "\"sets\" must hold at least one set");
  }
  std::vector<FiniteSet> members;
  members.reserve(sets.size());
  for (const json& entry : sets) {
    if (!entry.is_array()) {
      throw Error(ErrorCode::ParseError, "every set must be an array of ids");
    }
    std::vector<int> ids;
    ids.reserve(entry.size());
    for (const json& id : entry) ids.push_back(as_vertex_id(id, "element id"));
    try {
      members.emplace_back(std::move(ids));
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  try {
    return SetCollection(std::move(members));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string collection_to_json(const SetCollection& c) {
  return detail::collection_json(c).dump();
}

Graph parse_graph_json(const std::string& text) {
  const json parsed = parse_json_text(text);
  if (!parsed.is_object() || !parsed.contains("n") || !parsed.contains("edges") ||
      !parsed["edges"].is_array()) {
    throw Error(ErrorCode::ParseError,
                "expected an object with \"n\" and an \"edges\" array");
  }
  const int n = as_vertex_id(parsed["n"], "vertex count");
  std::vector<std::pair<int, int>> edges;
  for (const json& entry : parsed["edges"]) {
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorCode::ParseError, "every edge must be a pair [u, v]");
    }
    edges.push_back({as_vertex_id(entry[0], "endpoint"),
                     as_vertex_id(entry[1], "endpoint")});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  return detail::graph_json(g).dump();
}

Graph parse_graph_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      fields >> tag >> n;
      if (tag != "n" || fields.fail() || n < 0) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) +
                        ": expected header \"n <count>\"");
      }
      continue;
    }
    int u = 0, v = 0;
    fields >> u >> v;
    if (fields.fail()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    edges.push_back({u, v});
  }
  if (n < 0) {
    throw Error(ErrorCode::ParseError, "missing header \"n <count>\"");
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string graph_to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot read " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph_file(const std::string& path, InputFormat format) {
  const std::string text = read_file(path);
  if (format == InputFormat::Auto) {
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    format = (ext == ".json") ? InputFormat::Json : InputFormat::EdgeList;
  }
  return format == InputFormat::Json ? parse_graph_json(text)
                                     : parse_graph_edge_list(text);
}

SetCollection load_collection_file(const std::string& path) {
  return parse_collection_json(read_file(path));
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) {
    out += hex[(hash >> shift) & 0xF];
  }
  return out;
}

}  // namespace ke
