#include "doctest.h"
#include "indcol/families.hpp"
#include "indcol/graph.hpp"
#include "indcol/graph6.hpp"
#include "reference.hpp"

using namespace indcol;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return make_graph(10, e);
}

Graph path(int n) { return generate(family::Path{n}).graph; }
Graph cycle(int n) { return generate(family::Cycle{n}).graph; }
Graph complete(int n) { return generate(family::Complete{n}).graph; }

}  // namespace

TEST_CASE("vertex sets") {
  VertexSet s(130, {0, 64, 129});
  CHECK(s.count() == 3);
  CHECK(s.test(64));
  CHECK_FALSE(s.test(63));
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
  s.reset(64);
  CHECK(s.count() == 2);
  CHECK(VertexSet::full(130).count() == 130);
  CHECK(s.complement().count() == 128);
  CHECK(s.is_subset_of(VertexSet::full(130)));
  CHECK_FALSE(s.intersects(s.complement()));
  std::vector<Vertex> seen(s.begin(), s.end());
  CHECK(seen == std::vector<Vertex>{0, 129});
}

TEST_CASE("builder rejects loops and keeps graphs symmetric") {
  GraphBuilder b(3);
  CHECK_THROWS(b.add_edge(1, 1));
  b.add_edge(0, 2).add_edge(2, 0);
  const auto g = std::move(b).build();
  CHECK(g.valid());
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(2, 0));
}

TEST_CASE("capacity is enforced") {
  CHECK_THROWS_AS(GraphBuilder(10, 5), LimitExceeded);
}

TEST_CASE("max degree") {
  CHECK(max_degree(path(4)) == 2);
  CHECK(max_degree(complete(5)) == 4);
  CHECK(max_degree(generate(parse_family("cubic")).graph) == 3);
  CHECK(max_degree(Graph{}) == 0);
}

TEST_CASE("clique number") {
  CHECK(clique_number(complete(6)) == 6);
  CHECK(clique_number(cycle(5)) == 2);
  CHECK(clique_number(petersen()) == 2);
  const auto s = generate(family::SplitGraph{4, 5, 9, 3}).graph;
  CHECK(clique_number(s) == ref::clique_number(s));
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_graph(9, 0.5, seed);
    CHECK(clique_number(g) == ref::clique_number(g));
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(generate(family::Complete{4}).graph) == 4);
  CHECK(chromatic_number(cartesian_product(generate(family::Star{3}).graph, generate(family::Star{3}).graph)) == 2);
  CHECK(chromatic_number(petersen()) == ref::chromatic_number(petersen()));
  CHECK(chromatic_number(petersen()) == 3);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_graph(9, 0.4, seed);
    CHECK(chromatic_number(g) == ref::chromatic_number(g));
  }
  CHECK_THROWS_AS(chromatic_number(path(30)), LimitExceeded);
  CHECK(greedy_color_count(petersen()) >= 3);
}

TEST_CASE("bipartition") {
  const auto b = bipartition(cycle(6));
  REQUIRE(b);
  CHECK(b->first == VertexSet(6, {0, 2, 4}));
  CHECK(b->second == VertexSet(6, {1, 3, 5}));
  CHECK_FALSE(bipartition(cycle(5)));
  const auto g1 = bipartition(generate(family::G1{3}).graph);
  REQUIRE(g1);
  CHECK(g1->first == VertexSet(6, {0, 1, 2}));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(5)));
  const auto two = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two));
  CHECK(components(two).size() == 2);
  CHECK(components(cycle(6), VertexSet(6, {0, 1, 3, 4})).size() == 2);
}

TEST_CASE("induced paths") {
  CHECK(has_induced_path(path(7), 7));
  CHECK_FALSE(has_induced_path(complete(4), 3));
  CHECK_FALSE(has_induced_path(cycle(7), 7));
  CHECK(has_induced_path(cycle(8), 7));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_graph(8, 0.35, seed);
    for (int k = 3; k <= 6; ++k) CHECK(has_induced_path(g, static_cast<std::size_t>(k)) == ref::has_induced_path(g, k));
  }
}

TEST_CASE("products and subgraphs") {
  const auto k2 = complete(2);
  CHECK(to_graph6(cartesian_product(k2, k2)) == to_graph6(make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  CHECK(induced_subgraph(cycle(6), VertexSet(6, {0, 1, 2})) == path(3));
}

TEST_CASE("random graphs are deterministic") {
  CHECK(random_graph(10, 0.5, 1).edges() == random_graph(10, 0.5, 1).edges());
  CHECK(random_graph(10, 0.5, 1).edges() != random_graph(10, 0.5, 2).edges());
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto t = random_tree(12, seed);
    CHECK(t.edge_count() == 11);
    CHECK(is_connected(t));
  }
}
