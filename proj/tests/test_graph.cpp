#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aaqaoa/errors.hpp"
#include "aaqaoa/graph.hpp"
#include "test_support.hpp"

using namespace aaqaoa;

TEST_CASE("binary tree on 5 vertices") {
  const auto g = full_rary_tree(2, 5);
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {1, 4}});
  CHECK(graph_label(g) == "(5,4)");
}

TEST_CASE("full r-ary trees attach children r*i+1 .. r*i+r") {
  const auto g = full_rary_tree(3, 8);
  CHECK(g.num_edges() == 7);
  for (int i = 1; i < 8; ++i) CHECK(g.has_edge((i - 1) / 3, i));
  CHECK(full_rary_tree(2, 1).num_edges() == 0);
  CHECK_THROWS_AS(full_rary_tree(0, 4), ContractError);
  CHECK_THROWS_AS(full_rary_tree(2, 0), ContractError);
}

TEST_CASE("balanced tree sizes") {
  CHECK(graph_label(balanced_tree(2, 2)) == "(7,6)");
  CHECK(graph_label(balanced_tree(3, 2)) == "(13,12)");
  CHECK(graph_label(balanced_tree(2, 3)) == "(15,14)");
  CHECK(graph_label(balanced_tree(2, 4)) == "(31,30)");
  CHECK(balanced_tree(2, 3) == full_rary_tree(2, 15));
  CHECK_THROWS_AS(balanced_tree(2, 0), ContractError);
  CHECK_THROWS_AS(balanced_tree(1, 2), ContractError);
}

TEST_CASE("star, path and cycle") {
  const auto s = star_graph(6);
  CHECK(s.num_edges() == 5);
  CHECK(s.degree(0) == 5);
  for (int v = 1; v < 6; ++v) CHECK(s.degree(v) == 1);
  CHECK(path_graph(4).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const auto c = cycle_graph(5);
  CHECK(c.num_edges() == 5);
  CHECK(c.has_edge(0, 4));
  CHECK_THROWS_AS(cycle_graph(2), ContractError);
}

TEST_CASE("vertex cap raises a resource error") {
  CHECK_THROWS_AS(full_rary_tree(2, 65), ResourceError);
  CHECK_NOTHROW(full_rary_tree(2, 65, 100));
  CHECK_THROWS_AS(balanced_tree(2, 6), ResourceError);
  CHECK_THROWS_AS(star_graph(100), ResourceError);
}

TEST_CASE("graph construction normalises and validates") {
  const Graph g(3, {{2, 1}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ContractError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ContractError);
  CHECK_THROWS_AS(Graph(-1, {}), ContractError);
  CHECK(Graph(3, {{0, 1}, {1, 0}}).num_edges() == 1);
}

TEST_CASE("connectivity and induced subgraphs") {
  CHECK(full_rary_tree(2, 9).is_connected());
  CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
  const auto sub = full_rary_tree(2, 7).induced_subgraph({1, 3, 4, 6});
  CHECK(sub.num_vertices() == 4);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("edge list parsing") {
  const auto g = parse_edge_list("# a comment\n4 3\n0 1\n# between\n1 2\n2 3\n");
  CHECK(g == path_graph(4));

  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return static_cast<int>(e.line());
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
  CHECK(line_of("3 2\n0 1\n1 5\n") == 3);
  CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
  CHECK(line_of("3 2\n0 1\n") > 0);
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(parse_edge_list("2 1\n1 0\n").edges() == std::vector<Edge>{{0, 1}});
  CHECK(line_of("") > 0);
  CHECK(line_of("3\n") == 1);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 x\n"), ContractError);
}

TEST_CASE("serialisation") {
  CHECK(serialize_edge_list(star_graph(3)) == "3 2\n0 1\n0 2\n");
  CHECK(serialize_edge_list(full_rary_tree(2, 5)) == "5 4\n0 1\n0 2\n1 3\n1 4\n");
}

TEST_CASE("round trip through the edge-list format on random trees") {
  std::mt19937_64 rng(20241017);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(1, 40);
    const auto g = testsupport::random_tree(size(rng), rng);
    CHECK(g.is_connected());
    CHECK(g.num_edges() == g.num_vertices() - 1);
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }
}
