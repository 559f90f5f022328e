#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "ke/errors.hpp"
#include "ke/explorer.hpp"
#include "ke/io.hpp"

using namespace ke;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("collection JSON round trip is canonical") {
  const std::string text = R"({"sets": [[2,3],[2,1]]})";
  const SetCollection c = parse_collection_json(text);
  CHECK(c == SetCollection{FiniteSet{1, 2}, FiniteSet{2, 3}});
  // canonical output: sorted members, strictly increasing elements
  CHECK(collection_to_json(c) == R"({"sets":[[1,2],[2,3]]})");
  CHECK(parse_collection_json(collection_to_json(c)) == c);
}

TEST_CASE("collection parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_collection_json(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  };
  expect_parse_error("not json");
  expect_parse_error(R"({"sets": []})");           // empty collection
  expect_parse_error(R"({"sets": [[1],[1]]})");    // duplicate member
  expect_parse_error(R"({"sets": [[0,1]]})");      // id below 1
  expect_parse_error(R"({"sets": [[]]})");         // empty member
  expect_parse_error(R"({"sets": [[1.5]]})");      // non-integer
  expect_parse_error(R"({"wrong": 1})");
}

TEST_CASE("graph JSON round trip") {
  const Graph g = fixtures::seven_vertex_graph();
  const std::string text = graph_to_json(g);
  CHECK(text.find("\"n\":7") != std::string::npos);
  CHECK(parse_graph_json(text) == g);
  CHECK(parse_graph_json(R"({"n":3,"edges":[]})") == fixtures::edgeless_graph(3));

  CHECK_THROWS_AS(parse_graph_json(R"({"n":2,"edges":[[1,3]]})"), Error);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges":[]})"), Error);
  CHECK_THROWS_AS(parse_graph_json(R"({"n":2,"edges":[[1]]})"), Error);
}

TEST_CASE("edge list format with header") {
  const std::string text = "# comment\nn 4\n1 2\n3 4\n";
  const Graph g = parse_graph_edge_list(text);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  CHECK(parse_graph_edge_list(graph_to_edge_list(g)) == g);
  CHECK(parse_graph_edge_list("n 3\n") == fixtures::edgeless_graph(3));

  CHECK_THROWS_AS(parse_graph_edge_list("1 2\n"), Error);      // missing header
  CHECK_THROWS_AS(parse_graph_edge_list("n 3\n1 x\n"), Error); // bad edge line
  CHECK_THROWS_AS(parse_graph_edge_list(""), Error);
}

TEST_CASE("graph and collection round trips hold across generated instances") {
  TrialConfig config;
  config.seed = 5;
  config.graph_n_max = 7;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const Graph g = random_graph(config, i);
    CHECK(parse_graph_json(graph_to_json(g)) == g);
    CHECK(parse_graph_edge_list(graph_to_edge_list(g)) == g);
  }
  for (const SetCollection& c : relevant_collections(5, 2, 3)) {
    CHECK(parse_collection_json(collection_to_json(c)) == c);
  }
}

TEST_CASE("file loading dispatches on extension") {
  TempFile json_file("ke_io_test_graph.json", graph_to_json(fixtures::cycle_graph(4)));
  TempFile text_file("ke_io_test_graph.txt",
                     graph_to_edge_list(fixtures::cycle_graph(4)));
  CHECK(load_graph_file(json_file.path.string()) == fixtures::cycle_graph(4));
  CHECK(load_graph_file(text_file.path.string()) == fixtures::cycle_graph(4));
  // explicit override beats the extension
  TempFile odd_name("ke_io_test_graph.data",
                    graph_to_json(fixtures::cycle_graph(4)));
  CHECK(load_graph_file(odd_name.path.string(), InputFormat::Json) ==
        fixtures::cycle_graph(4));
  CHECK_THROWS_AS(load_graph_file("/nonexistent/file.json"), Error);

  TempFile coll_file("ke_io_test_coll.json", R"({"sets":[[1],[2]]})");
  CHECK(load_collection_file(coll_file.path.string()) ==
        SetCollection{FiniteSet{1}, FiniteSet{2}});
}

TEST_CASE("content digest is stable") {
  CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(content_digest("hello") == content_digest("hello"));
  CHECK(content_digest("hello") != content_digest("hello\n"));
  CHECK(content_digest("a").substr(0, 8) == "fnv1a64:");
}
