#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "indcol/errors.hpp"
#include "indcol/vertex_set.hpp"

namespace indcol {

// Dense bitset rows cost n^2/8 bytes; 8192 vertices is 8 MiB per graph.
inline constexpr std::size_t kDefaultCapacity = 8192;

using Edge = std::pair<Vertex, Vertex>;

/**
 * Undirected simple graph on vertices 0..n-1 with one adjacency bitset per
 * vertex. Immutable once built; use GraphBuilder to construct.
 */
class Graph {
 public:
  Graph() = default;

  std::size_t n() const { return rows_.size(); }
  const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  std::size_t degree(Vertex v) const { return rows_[static_cast<std::size_t>(v)].count(); }
  std::size_t edge_count() const;
  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(n()); }
  VertexSet empty_set() const { return VertexSet(n()); }

  // Symmetry, irreflexivity and in-range bits. Always true for graphs built
  // through GraphBuilder; exposed for tests.
  bool valid() const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n, std::size_t capacity = kDefaultCapacity);

  std::size_t n() const { return rows_.size(); }
  // Self-loops are rejected; repeated edges are idempotent.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  Graph build() &&;

 private:
  std::vector<VertexSet> rows_;
};

Graph make_graph(std::size_t n, const std::vector<Edge>& edges);

std::size_t max_degree(const Graph& g);

// Exact clique number by bitset branch and bound. Throws LimitExceeded when
// n exceeds `limit`.
int clique_number(const Graph& g, std::size_t limit = 64);

// Exact chromatic number by iterative k-colorability with canonical color
// classes. Throws LimitExceeded when n exceeds `limit`.
int chromatic_number(const Graph& g, std::size_t limit = 24);

// Greedy coloring in vertex order; an upper bound on the chromatic number.
int greedy_color_count(const Graph& g);

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

// BFS 2-coloring, component by component. The lowest vertex of every
// component lands in `first`. Absent iff the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_connected(const Graph& g);
// Components ordered by their lowest vertex.
std::vector<VertexSet> components(const Graph& g);
// Components of the subgraph induced by `within`.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

bool has_induced_path(const Graph& g, std::size_t k);

// Subgraph induced by `s`, relabeled so that members keep their relative order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Vertex (u, v) maps to u * h.n() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

// G(n, p) with a seeded 64-bit Mersenne twister.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Uniform random labeled tree on n vertices (Pruefer sequence).
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace indcol
