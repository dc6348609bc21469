#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "sympow/errors.hpp"
#include "sympow/graph.hpp"
#include "sympow/oracle.hpp"
#include "sympow/serialize.hpp"
#include "test_util.hpp"

using namespace sympow;

TEST_CASE("cycle construction") {
  Graph c3 = Graph::cycle(3);
  CHECK(c3.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  Graph c5 = Graph::cycle(5);
  CHECK(c5.num_edges() == 5);
  for (int v = 1; v <= 5; ++v) CHECK(c5.vertex_degree(v) == 2);
  CHECK_THROWS_AS(Graph::cycle(2), InvalidArgument);
}

TEST_CASE("complete construction") {
  CHECK(Graph::complete(3) == Graph::cycle(3));
  CHECK(Graph::complete(4).num_edges() == 6);
  CHECK_THROWS_AS(Graph::complete(1), InvalidArgument);
}

TEST_CASE("pendant construction") {
  Graph g = Graph::cycle_with_pendant(9, 2);
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 10);
  CHECK(g.has_edge(2, 10));
  CHECK(g.vertex_degree(10) == 1);

  Graph small = Graph::cycle_with_pendant(3, 1);
  CHECK(small.num_vertices() == 4);
  CHECK(small.num_edges() == 4);

  CHECK_THROWS_AS(Graph::cycle_with_pendant(4, 1), InvalidArgument);
  CHECK_THROWS_AS(Graph::cycle_with_pendant(5, 6), InvalidArgument);
}

TEST_CASE("edge list parsing") {
  Graph g = testutil::seven_vertex_graph();
  CHECK(g.num_vertices() == 7);
  CHECK(g.num_edges() == 7);
  CHECK(g.has_edge(1, 5));
  CHECK(g.has_edge(6, 7));

  CHECK(Graph::from_edge_list("3\n1 2\n1 2\n2 3\n1 3") == Graph::cycle(3));

  CHECK_THROWS_AS(Graph::from_edge_list("3\n1 1"), ParseError);
  try {
    Graph::from_edge_list("3\n1 2\n1 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(Graph::from_edge_list("3\n1 2\nfoo bar\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list(""), ParseError);
}

TEST_CASE("cycle detection") {
  CHECK(Graph::cycle(6).is_cycle());
  CHECK(Graph::cycle(7).is_odd_cycle());
  CHECK_FALSE(Graph::cycle(6).is_odd_cycle());
  CHECK_FALSE(Graph::complete(4).is_cycle());
  CHECK_FALSE(Graph::cycle_with_pendant(5, 1).is_cycle());
  CHECK_FALSE(testutil::seven_vertex_graph().is_cycle());
  // a relabeled cycle is still recognized: 1-3-2-4-1
  Graph shuffled(4, {{1, 3}, {2, 3}, {2, 4}, {1, 4}});
  auto order = shuffled.cycle_order();
  REQUIRE(order.has_value());
  CHECK(order->size() == 4);
  CHECK(order->front() == 1);
}

TEST_CASE("minimal vertex covers of small cycles") {
  auto covers = minimal_vertex_covers(Graph::cycle(3));
  REQUIRE(covers.size() == 3);
  CHECK(covers[0].vertices == std::vector<int>{1, 2});
  CHECK(covers[1].vertices == std::vector<int>{1, 3});
  CHECK(covers[2].vertices == std::vector<int>{2, 3});

  auto c5 = minimal_vertex_covers(Graph::cycle(5));
  REQUIRE(c5.size() == 5);
  for (const auto& c : c5) CHECK(c.vertices.size() == 3);
  CHECK(c5[0].vertices == std::vector<int>{1, 2, 4});
}

TEST_CASE("C9 covers include one above the minimum size") {
  auto covers = minimal_vertex_covers(Graph::cycle(9));
  REQUIRE(covers.size() == 12);
  for (int i = 0; i < 9; ++i) CHECK(covers[i].vertices.size() == 5);
  bool found = false;
  for (const auto& c : covers)
    if (c.vertices == std::vector<int>{2, 3, 5, 6, 8, 9}) found = true;
  CHECK(found);
}

TEST_CASE("odd cycles have exactly 2n+1 minimum covers, listed first") {
  for (int n = 1; n <= 5; ++n) {
    auto covers = minimal_vertex_covers(Graph::cycle(2 * n + 1));
    int minimum_size = 0;
    for (const auto& c : covers)
      if (static_cast<int>(c.vertices.size()) == n + 1) ++minimum_size;
    CHECK(minimum_size == 2 * n + 1);
    for (int i = 0; i < 2 * n + 1; ++i)
      CHECK(covers[i].vertices.size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("covers satisfy the cover and minimality properties") {
  for (const Graph& g : {Graph::cycle(7), Graph::complete(5), Graph::cycle_with_pendant(5, 2),
                         testutil::seven_vertex_graph()}) {
    for (const auto& c : minimal_vertex_covers(g)) {
      CHECK(c.covers(g));
      CHECK(c.is_minimal(g));
    }
  }
}

TEST_CASE("cover enumeration matches the independent-set oracle") {
  std::mt19937 rng(23);
  std::vector<Graph> graphs{Graph::cycle(4),  Graph::cycle(9),
                            Graph::complete(6), Graph::cycle_with_pendant(7, 3),
                            testutil::seven_vertex_graph()};
  for (int i = 0; i < 12; ++i)
    graphs.push_back(testutil::random_graph(4 + i % 9, 0.4, rng));
  for (const auto& g : graphs) {
    CAPTURE(g.num_vertices());
    CHECK(minimal_vertex_covers(g) == naive_minimal_covers(g));
  }
}

TEST_CASE("cover matrix layout") {
  CoverMatrix m3 = cover_matrix(Graph::cycle(3));
  REQUIRE(m3.num_rows() == 3);
  for (int i = 0; i < 3; ++i) CHECK(m3.row_sum(i) == 2);
  CHECK(m3.rows[0] == std::vector<int>{1, 1, 0});

  CoverMatrix m5 = cover_matrix(Graph::cycle(5));
  REQUIRE(m5.num_rows() == 5);
  for (int i = 0; i < 5; ++i) CHECK(m5.row_sum(i) == 3);

  CoverMatrix m9 = cover_matrix(Graph::cycle(9));
  for (int i = 0; i < 9; ++i) CHECK(m9.row_sum(i) == 5);
  for (int i = 9; i < m9.num_rows(); ++i) CHECK(m9.row_sum(i) == 6);

  nlohmann::json j;
  to_json(j, m3);
  CHECK(j.dump() == R"({"rows":[[1,1,0],[1,0,1],[0,1,1]]})");
}

TEST_CASE("cover enumeration budget") {
  std::vector<Edge> edges;
  for (int i = 1; i < 25; ++i) edges.emplace_back(i, i + 1);
  CHECK_THROWS_AS(minimal_vertex_covers(Graph(25, edges)), ResourceLimit);
}
