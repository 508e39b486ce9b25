#include <doctest.h>

#include <algorithm>
#include <random>

#include "isocrit/families.hpp"
#include "isocrit/graph.hpp"
#include "isocrit/graph_io.hpp"

using namespace isocrit;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  EdgeSet edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction and validation") {
  const Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(1, 0));

  const Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(2) == 2);
  CHECK(p5 == make_path(5));

  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4 == make_cycle(4));

  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("subdivision counts and structure") {
  const Graph p4 = make_path(4);
  const auto all = subdivide(p4, p4.edges());
  CHECK(all.graph.vertex_count() == 7);
  CHECK(all.graph.edge_count() == 6);
  const auto shape = classify(all.graph);
  CHECK(shape.tree);
  CHECK(shape.diameter == 6);  // a path again

  const Graph c4 = make_cycle(4);
  const auto one = subdivide(c4, {c4.edges()[0]});
  CHECK(one.graph.vertex_count() == 5);
  CHECK(one.graph.edge_count() == 5);
  CHECK(classify(one.graph).diameter == 2);  // C_5

  // two edges of a claw: six vertices, one plain leaf, two legs of length 2
  const Graph claw = make_star(3);
  const auto wounded = subdivide(claw, {claw.edges()[0], claw.edges()[1]});
  CHECK(wounded.graph.vertex_count() == 6);
  CHECK(wounded.graph.edge_count() == 5);
  std::vector<int> degrees;
  for (int v = 0; v < 6; ++v) degrees.push_back(wounded.graph.degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 1, 2, 2, 3});

  CHECK(wounded.is_subdivision_vertex(4));
  CHECK(wounded.source_edge(4) == Edge{0, 1});
  CHECK_THROWS_AS(subdivide(p4, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(subdivide(p4, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("subdivision size invariants on random graphs") {
  std::mt19937 rng(20240517);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, 0.4);
    if (g.edge_count() == 0) continue;
    EdgeSet f;
    for (const auto& e : g.edges()) {
      if (rng() % 2) f.push_back(e);
    }
    const auto result = subdivide(g, f);
    CHECK(result.graph.vertex_count() == n + static_cast<int>(f.size()));
    CHECK(result.graph.edge_count() == g.edge_count() + static_cast<int>(f.size()));
    for (const auto& [e, w] : result.new_vertex_of) {
      CHECK(result.graph.has_edge(e.first, w));
      CHECK(result.graph.has_edge(e.second, w));
      CHECK(!result.graph.has_edge(e.first, e.second));
    }
  }
}

TEST_CASE("paths and cycles stay paths and cycles under subdivision") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const int n = 4 + static_cast<int>(rng() % 6);
    for (bool cycle : {false, true}) {
      const Graph g = cycle ? make_cycle(n) : make_path(n);
      EdgeSet f;
      for (const auto& e : g.edges()) {
        if (rng() % 2) f.push_back(e);
      }
      const Graph gf = subdivide(g, f).graph;
      const auto shape = classify(gf);
      CHECK(shape.connected);
      int max_degree = 0;
      for (int v = 0; v < gf.vertex_count(); ++v) {
        max_degree = std::max(max_degree, gf.degree(v));
      }
      CHECK(max_degree <= 2);
      CHECK(shape.tree == !cycle);
      if (cycle) CHECK(gf.edge_count() == gf.vertex_count());
    }
  }
}

TEST_CASE("closed neighbourhood") {
  const Graph p5 = make_path(5);
  CHECK(closed_neighborhood(p5, {2}) == VertexSet{1, 2, 3});
  CHECK(closed_neighborhood(p5, {}) == VertexSet{});
  const Graph c4 = make_cycle(4);
  CHECK(closed_neighborhood(c4, {0}) == VertexSet{0, 1, 3});
  CHECK_THROWS_AS(closed_neighborhood(p5, {9}), std::invalid_argument);
}

TEST_CASE("independence and packing") {
  const Graph p5 = make_path(5);
  CHECK(is_independent(p5, {0, 2, 4}));
  CHECK(!is_independent(p5, {0, 1}));
  CHECK(is_independent(p5, {3}));

  CHECK(is_k_packing(make_path(9), {0, 4}, 3));
  CHECK(!is_k_packing(make_path(5), {1, 3}, 3));
  CHECK(is_k_packing(make_path(5), {2}, 7));

  // distance infinite across components counts as far apart
  const Graph two = disjoint_union(make_path(2), make_path(2));
  CHECK(is_k_packing(two, {0, 2}, 5));

  // 1-packings are independent sets
  std::mt19937 rng(99);
  for (int round = 0; round < 100; ++round) {
    const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.4);
    VertexSet s;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (rng() % 3 == 0) s.push_back(v);
    }
    if (is_k_packing(g, s, 1)) CHECK(is_independent(g, s));
  }
}

TEST_CASE("classify structure reports") {
  const auto star = classify(make_star(4));
  CHECK(star.star);
  CHECK(star.tree);
  CHECK(star.diameter == 2);

  const auto path = classify(make_path(5));
  CHECK(!path.star);
  CHECK(path.tree);
  CHECK(path.leaves == VertexSet{0, 4});
  CHECK(path.supports == VertexSet{1, 3});
  CHECK(path.diameter == 4);

  const auto hexagon = classify(make_cycle(6));
  CHECK(!hexagon.star);
  CHECK(!hexagon.tree);
  CHECK(hexagon.connected);
  CHECK(hexagon.diameter == 3);

  CHECK(classify(make_star(0)).star);  // single vertex
  CHECK(classify(make_star(1)).star);  // single edge
  CHECK(!classify(disjoint_union(make_path(2), make_path(3))).connected);
}

TEST_CASE("graph6 fixed encodings") {
  const Graph empty5 = decode_graph6("D??");
  CHECK(empty5.vertex_count() == 5);
  CHECK(empty5.edge_count() == 0);

  CHECK(encode_graph6(build_graph(2, {{0, 1}})) == "A_");
  CHECK(decode_graph6("A_") == build_graph(2, {{0, 1}}));

  // the worked example from the format specification
  CHECK(encode_graph6(build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");

  CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("D?"), std::invalid_argument);    // truncated
  CHECK_THROWS_AS(decode_graph6("D???"), std::invalid_argument);  // too long
  CHECK_THROWS_AS(decode_graph6("A@"), std::invalid_argument);    // trailing bit set
  CHECK_THROWS_AS(decode_graph6("\x1f??"), std::invalid_argument);
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(4242);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Graph g = random_graph(rng, n, 0.3);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
  // a value above the one-byte header limit
  const Graph p70 = make_path(70);
  const std::string code = encode_graph6(p70);
  CHECK(code[0] == '~');
  CHECK(decode_graph6(code) == p70);
}

TEST_CASE("edge list format") {
  const Graph g = make_cycle(4);
  const std::string text = format_edge_list(g);
  CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(parse_edge_list(text) == g);
  CHECK_THROWS_AS(parse_edge_list(std::string("2 1\n")), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list(std::string("oops")), std::invalid_argument);
}

TEST_CASE("induced subgraphs and unions") {
  const Graph p5 = make_path(5);
  const Graph middle = induced_subgraph(p5, {1, 2, 3});
  CHECK(middle == make_path(3));
  CHECK(delete_vertices(p5, {0, 4}) == make_path(3));
  const Graph both = disjoint_union(make_path(2), make_cycle(3));
  CHECK(both.vertex_count() == 5);
  CHECK(both.edge_count() == 4);
  CHECK(components(both).size() == 2);
}
