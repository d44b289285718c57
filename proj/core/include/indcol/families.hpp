#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "indcol/graph.hpp"

namespace indcol {

namespace family {

struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
// K_{1,n}: center 0, leaves 1..n.
struct Star { int n; };
// K_{k,k} minus the matching a_i b_i. A = 0..k-1, B = k..2k-1, a_i ~ b_i at i and k+i.
struct G1 { int k; };
// G1(k) plus a universal vertex with id 2k.
struct G2 { int k; };
// x = 0; Y = 1..4k; block i of Z (2k vertices) is joined to the i-th
// 2k-subset of Y in colexicographic order.
struct G3 { int k; };
// G1(k) plus two non-adjacent vertices 2k, 2k+1 joined to all of G1(k).
struct G4 { int k; };
// Three diamonds chained between v1 and v14 of `h`. H keeps ids 0..|H|-1 and
// the new vertices v2..v13 get ids |H|..|H|+11.
struct CubicGadget {
  Graph h;
  Vertex v1;
  Vertex v14;
};
// Perfect n-ary tree of depth d, breadth-first ids: children of i are n*i+1..n*i+n.
struct NaryTree { int n; int d; };
// Tree family G_k: K_1, P_2, then NaryTree(3*2^(k-3)-1, 2k-3) for k >= 3.
struct TreeGk { int k; };
// K_{1,n} box K_{1,n}.
struct StarSquare { int n; };
// Clique 0..clique_size-1, independent set after it, `cross_edges` distinct
// clique-independent edges drawn uniformly with the seed.
struct SplitGraph {
  int clique_size;
  int indep_size;
  int cross_edges;
  std::uint64_t seed;
};

}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::G1, family::G2,
                                family::G3, family::G4, family::CubicGadget, family::NaryTree, family::TreeGk,
                                family::StarSquare, family::SplitGraph>;

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

struct Generated {
  Graph graph;
  // Per-vertex labels; empty unless the family defines them (trees, split
  // graphs, G1..G4 part names, cubic gadget v-names).
  std::vector<std::string> labels;
  std::optional<SplitPartition> partition;
};

// The diamond K_4 - e on 0..3 with non-edge {0, 3}, the default H.
Graph diamond();

Generated generate(const FamilySpec& spec);

struct FamilyReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Structural self-check of a generated graph against its spec.
FamilyReport self_check(const FamilySpec& spec, const Graph& g);

// Checks the perfect n-ary tree shape implied by breadth-first numbering
// without materializing adjacency, so it also runs where generate() would
// exceed capacity (TreeGk(5) has 21 million vertices).
FamilyReport check_tree_shape(int n, int d);

// Parameters of TreeGk(k): (arity, depth). k >= 3.
std::pair<int, int> tree_gk_shape(int k);

// Sum of n^j for j = 0..d.
std::uint64_t nary_tree_size(int n, int d);

// Parses "name" or "name:a,b,..." (e.g. "path:6", "g3:1", "cubic",
// "tree:2,3", "treegk:3", "split:4,3,5,7"). Throws std::invalid_argument.
FamilySpec parse_family(const std::string& text);
std::string family_name(const FamilySpec& spec);

}  // namespace indcol
