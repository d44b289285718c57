#include "indcol/families.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace indcol {

using namespace family;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

void require_capacity(std::uint64_t n, const char* what) {
  if (n > kDefaultCapacity)
    throw LimitExceeded(Resource::capacity, kDefaultCapacity,
                        std::string(what) + " has " + std::to_string(n) + " vertices, over capacity " +
                            std::to_string(kDefaultCapacity));
}

std::vector<std::string> numbered(const std::string& prefix, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void add_matching_free_biclique(GraphBuilder& b, int k) {
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) b.add_edge(i, k + j);
}

std::vector<std::string> g1_labels(int k) {
  auto labels = numbered("a", 1, k);
  auto bs = numbered("b", 1, k);
  labels.insert(labels.end(), bs.begin(), bs.end());
  return labels;
}

// Tree child labels concatenate digits when every index is one digit and
// are dot-separated otherwise, so labels stay unambiguous.
std::string child_label(const std::string& parent, int index, int arity) {
  std::string inner = parent.substr(1, parent.size() - 2);
  if (arity > 9 && !inner.empty()) inner += '.';
  return "(" + inner + std::to_string(index) + ")";
}

Generated nary_tree(int n, int d) {
  require_positive(n, "tree arity");
  if (d < 0) throw std::invalid_argument("tree depth must be non-negative");
  const std::uint64_t size = nary_tree_size(n, d);
  require_capacity(size, "perfect n-ary tree");
  GraphBuilder b(static_cast<std::size_t>(size));
  std::vector<std::string> labels(static_cast<std::size_t>(size));
  labels[0] = "()";
  for (std::uint64_t i = 0; i < size; ++i)
    for (int c = 1; c <= n; ++c) {
      const std::uint64_t child = static_cast<std::uint64_t>(n) * i + static_cast<std::uint64_t>(c);
      if (child >= size) break;
      b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(child));
      labels[child] = child_label(labels[i], c, n);
    }
  return {std::move(b).build(), std::move(labels), std::nullopt};
}

Generated cubic_gadget(const CubicGadget& spec) {
  const Graph& h = spec.h;
  const int hn = static_cast<int>(h.n());
  auto in_range = [&](Vertex v) { return v >= 0 && v < hn; };
  if (!in_range(spec.v1) || !in_range(spec.v14) || spec.v1 == spec.v14)
    throw std::invalid_argument("cubic gadget: v1 and v14 must be distinct vertices of H");
  if (h.adjacent(spec.v1, spec.v14)) throw std::invalid_argument("cubic gadget: v1 and v14 must be non-adjacent");
  for (Vertex v = 0; v < hn; ++v) {
    const std::size_t want = (v == spec.v1 || v == spec.v14) ? 2 : 3;
    if (h.degree(v) != want)
      throw std::invalid_argument("cubic gadget: vertex " + std::to_string(v) + " of H has degree " +
                                  std::to_string(h.degree(v)) + ", expected " + std::to_string(want));
  }
  GraphBuilder b(h.n() + 12);
  for (auto [u, v] : h.edges()) b.add_edge(u, v);
  // chain[i] is the id of v_{i+1}.
  std::vector<Vertex> chain(14);
  chain[0] = spec.v1;
  chain[13] = spec.v14;
  for (int i = 1; i <= 12; ++i) chain[static_cast<std::size_t>(i)] = hn + i - 1;
  auto vid = [&](int index) { return chain[static_cast<std::size_t>(index - 1)]; };
  for (int start : {2, 6, 10}) {
    // Diamond on v_s..v_{s+3} with v_s, v_{s+3} the non-adjacent pair.
    b.add_edge(vid(start), vid(start + 1));
    b.add_edge(vid(start), vid(start + 2));
    b.add_edge(vid(start + 1), vid(start + 2));
    b.add_edge(vid(start + 1), vid(start + 3));
    b.add_edge(vid(start + 2), vid(start + 3));
  }
  for (auto [a, c] : {std::pair{1, 2}, {5, 6}, {9, 10}, {13, 14}}) b.add_edge(vid(a), vid(c));
  std::vector<std::string> labels = numbered("h", 0, hn - 1);
  for (int i = 1; i <= 14; ++i) {
    if (i == 1 || i == 14) labels[static_cast<std::size_t>(vid(i))] = "v" + std::to_string(i);
    else labels.push_back("v" + std::to_string(i));
  }
  return {std::move(b).build(), std::move(labels), std::nullopt};
}

Generated g3(int k) {
  require_positive(k, "k");
  const int ny = 4 * k;
  const int block = 2 * k;
  const std::uint64_t blocks = binomial(ny, block);
  const std::uint64_t n = 1 + static_cast<std::uint64_t>(ny) + blocks * static_cast<std::uint64_t>(block);
  require_capacity(n, "G3(k)");
  GraphBuilder b(static_cast<std::size_t>(n));
  std::vector<std::string> labels{"x"};
  for (int y = 1; y <= ny; ++y) {
    b.add_edge(0, y);
    labels.push_back("y" + std::to_string(y));
  }
  // Gosper's hack walks the 2k-subsets of a 4k-set in colexicographic order.
  std::uint64_t subset = (std::uint64_t{1} << block) - 1;
  Vertex next = 1 + ny;
  for (std::uint64_t i = 0; i < blocks; ++i) {
    for (int j = 0; j < block; ++j, ++next) {
      for (std::uint64_t m = subset; m; m &= m - 1) b.add_edge(next, 1 + std::countr_zero(m));
      labels.push_back("z" + std::to_string(i + 1) + "." + std::to_string(j + 1));
    }
    const std::uint64_t c = subset & (~subset + 1);
    const std::uint64_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return {std::move(b).build(), std::move(labels), std::nullopt};
}

Generated split_graph(const SplitGraph& s) {
  if (s.clique_size < 0 || s.indep_size < 0) throw std::invalid_argument("split graph sizes must be non-negative");
  const int c = s.clique_size, i = s.indep_size;
  if (s.cross_edges < 0 || s.cross_edges > c * i)
    throw std::invalid_argument("split graph: cross_edges must lie in [0, clique_size * indep_size]");
  const auto n = static_cast<std::size_t>(c + i);
  GraphBuilder b(n);
  for (int u = 0; u < c; ++u)
    for (int v = u + 1; v < c; ++v) b.add_edge(u, v);
  std::vector<Edge> cross;
  for (int u = 0; u < c; ++u)
    for (int v = 0; v < i; ++v) cross.emplace_back(u, c + v);
  std::mt19937_64 rng(s.seed);
  std::shuffle(cross.begin(), cross.end(), rng);
  for (int e = 0; e < s.cross_edges; ++e) b.add_edge(cross[static_cast<std::size_t>(e)].first, cross[static_cast<std::size_t>(e)].second);
  SplitPartition part{VertexSet(n), VertexSet(n)};
  std::vector<std::string> labels;
  for (int u = 0; u < c + i; ++u) {
    (u < c ? part.clique : part.independent).set(u);
    labels.push_back(u < c ? "C" + std::to_string(u + 1) : "I" + std::to_string(u - c + 1));
  }
  return {std::move(b).build(), std::move(labels), std::move(part)};
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::uint64_t nary_tree_size(int n, int d) {
  std::uint64_t total = 0, level = 1;
  for (int j = 0; j <= d; ++j) {
    total += level;
    level *= static_cast<std::uint64_t>(n);
  }
  return total;
}

std::pair<int, int> tree_gk_shape(int k) {
  if (k < 3) throw std::invalid_argument("tree_gk_shape: k must be at least 3");
  return {3 * (1 << (k - 3)) - 1, 2 * k - 3};
}

Graph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Generated generate(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const Path& p) -> Generated {
            require_positive(p.n, "n");
            GraphBuilder b(static_cast<std::size_t>(p.n));
            for (int v = 0; v + 1 < p.n; ++v) b.add_edge(v, v + 1);
            return {std::move(b).build(), numbered("v", 1, p.n), std::nullopt};
          },
          [](const Cycle& c) -> Generated {
            if (c.n < 3) throw std::invalid_argument("cycle needs n >= 3");
            GraphBuilder b(static_cast<std::size_t>(c.n));
            for (int v = 0; v < c.n; ++v) b.add_edge(v, (v + 1) % c.n);
            return {std::move(b).build(), numbered("v", 1, c.n), std::nullopt};
          },
          [](const Complete& c) -> Generated {
            require_positive(c.n, "n");
            GraphBuilder b(static_cast<std::size_t>(c.n));
            for (int u = 0; u < c.n; ++u)
              for (int v = u + 1; v < c.n; ++v) b.add_edge(u, v);
            return {std::move(b).build(), {}, std::nullopt};
          },
          [](const Star& s) -> Generated {
            require_positive(s.n, "n");
            GraphBuilder b(static_cast<std::size_t>(s.n) + 1);
            for (int v = 1; v <= s.n; ++v) b.add_edge(0, v);
            return {std::move(b).build(), {}, std::nullopt};
          },
          [](const G1& g) -> Generated {
            require_positive(g.k, "k");
            GraphBuilder b(2 * static_cast<std::size_t>(g.k));
            add_matching_free_biclique(b, g.k);
            return {std::move(b).build(), g1_labels(g.k), std::nullopt};
          },
          [](const G2& g) -> Generated {
            require_positive(g.k, "k");
            GraphBuilder b(2 * static_cast<std::size_t>(g.k) + 1);
            add_matching_free_biclique(b, g.k);
            for (int v = 0; v < 2 * g.k; ++v) b.add_edge(v, 2 * g.k);
            auto labels = g1_labels(g.k);
            labels.push_back("u");
            return {std::move(b).build(), std::move(labels), std::nullopt};
          },
          [](const G3& g) { return g3(g.k); },
          [](const G4& g) -> Generated {
            require_positive(g.k, "k");
            GraphBuilder b(2 * static_cast<std::size_t>(g.k) + 2);
            add_matching_free_biclique(b, g.k);
            for (int v = 0; v < 2 * g.k; ++v) {
              b.add_edge(v, 2 * g.k);
              b.add_edge(v, 2 * g.k + 1);
            }
            auto labels = g1_labels(g.k);
            labels.push_back("u");
            labels.push_back("v");
            return {std::move(b).build(), std::move(labels), std::nullopt};
          },
          [](const CubicGadget& c) { return cubic_gadget(c); },
          [](const NaryTree& t) { return nary_tree(t.n, t.d); },
          [](const TreeGk& t) -> Generated {
            require_positive(t.k, "k");
            if (t.k == 1) return {make_graph(1, {}), {"()"}, std::nullopt};
            if (t.k == 2) return {make_graph(2, {{0, 1}}), {"()", "(1)"}, std::nullopt};
            auto [n, d] = tree_gk_shape(t.k);
            return nary_tree(n, d);
          },
          [](const StarSquare& s) -> Generated {
            require_positive(s.n, "n");
            Graph star = generate(Star{s.n}).graph;
            return {cartesian_product(star, star), {}, std::nullopt};
          },
          [](const SplitGraph& s) { return split_graph(s); },
      },
      spec);
}

namespace {

struct Checker {
  FamilyReport report;

  void expect(bool ok, const std::string& message) {
    if (!ok) report.failures.push_back(message);
  }
  void expect_n(const Graph& g, std::uint64_t n) {
    expect(g.n() == n, "expected " + std::to_string(n) + " vertices, got " + std::to_string(g.n()));
  }
  void expect_degree(const Graph& g, Vertex v, std::size_t d) {
    expect(g.degree(v) == d,
           "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", expected " + std::to_string(d));
  }
  void check_g1_part(const Graph& g, int k, std::size_t extra_degree) {
    for (int i = 0; i < k; ++i) {
      expect(!g.adjacent(i, k + i), "matched pair a" + std::to_string(i + 1) + "b" + std::to_string(i + 1) + " is adjacent");
      expect_degree(g, i, static_cast<std::size_t>(k - 1) + extra_degree);
      expect_degree(g, k + i, static_cast<std::size_t>(k - 1) + extra_degree);
      for (int j = 0; j < k; ++j) {
        if (j != i) expect(g.adjacent(i, k + j), "missing edge a" + std::to_string(i + 1) + "b" + std::to_string(j + 1));
        if (j != i) expect(!g.adjacent(i, j) && !g.adjacent(k + i, k + j), "part A or B is not independent");
      }
    }
  }
  void check_universal(const Graph& g, Vertex u, int over) {
    for (Vertex v = 0; v < over; ++v) expect(g.adjacent(u, v), "vertex " + std::to_string(u) + " misses " + std::to_string(v));
  }
  void check_tree(const Graph& g, int n, int d) {
    const std::uint64_t size = nary_tree_size(n, d);
    expect_n(g, size);
    if (g.n() != size) return;
    expect(g.edge_count() + 1 == g.n(), "tree edge count is not n - 1");
    expect(is_connected(g), "tree is disconnected");
    // BFS depths from the root.
    std::vector<int> depth(g.n(), -1);
    depth[0] = 0;
    std::vector<Vertex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g.neighbors(queue[head]))
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(queue[head])] + 1;
          queue.push_back(w);
        }
    std::uint64_t leaves = 0;
    for (std::size_t v = 0; v < g.n(); ++v) {
      const std::size_t children = g.degree(static_cast<Vertex>(v)) - (v == 0 ? 0 : 1);
      if (children == 0) {
        ++leaves;
        expect(depth[v] == d, "leaf " + std::to_string(v) + " at depth " + std::to_string(depth[v]));
      } else {
        expect(children == static_cast<std::size_t>(n), "internal vertex " + std::to_string(v) + " has wrong arity");
      }
    }
    std::uint64_t want = 1;
    for (int j = 0; j < d; ++j) want *= static_cast<std::uint64_t>(n);
    if (d == 0) want = 1;
    expect(leaves == want, "leaf count " + std::to_string(leaves) + ", expected " + std::to_string(want));
  }
};

bool induces_diamond(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  // a, d are the non-adjacent pair.
  return g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c) && g.adjacent(b, d) && g.adjacent(c, d) &&
         !g.adjacent(a, d);
}

}  // namespace

FamilyReport check_tree_shape(int n, int d) {
  Checker c;
  const std::uint64_t size = nary_tree_size(n, d);
  std::uint64_t level_start = 0, level_size = 1, prev_start = 0, leaves = 0, internal = 0, counted = 0;
  for (int depth = 0; depth <= d; ++depth) {
    for (std::uint64_t id = level_start; id < level_start + level_size; ++id) {
      ++counted;
      const std::uint64_t first_child = static_cast<std::uint64_t>(n) * id + 1;
      const bool leaf = first_child >= size;
      if (leaf) {
        ++leaves;
        c.expect(depth == d, "leaf above the last level");
      } else {
        ++internal;
        c.expect(first_child + static_cast<std::uint64_t>(n) - 1 < size, "internal vertex with a partial child list");
        c.expect(first_child == level_start + level_size + (id - level_start) * static_cast<std::uint64_t>(n),
                 "children not on the next level");
      }
      if (id > 0) {
        const std::uint64_t parent = (id - 1) / static_cast<std::uint64_t>(n);
        c.expect(parent >= prev_start && parent < level_start, "parent not on the previous level");
      }
      if (!c.report.ok()) return c.report;
    }
    prev_start = level_start;
    level_start += level_size;
    level_size *= static_cast<std::uint64_t>(n);
  }
  c.expect(counted == size, "vertex count mismatch");
  std::uint64_t want_leaves = 1;
  for (int j = 0; j < d; ++j) want_leaves *= static_cast<std::uint64_t>(n);
  c.expect(leaves == want_leaves, "leaf count mismatch");
  c.expect(internal + leaves == size, "internal + leaves != size");
  return c.report;
}

FamilyReport self_check(const FamilySpec& spec, const Graph& g) {
  Checker c;
  c.expect(g.valid(), "adjacency is not symmetric and irreflexive");
  std::visit(
      overloaded{
          [&](const Path& p) {
            c.expect_n(g, static_cast<std::uint64_t>(p.n));
            c.expect(g.edge_count() + 1 == static_cast<std::size_t>(p.n), "path edge count");
            c.expect(is_connected(g) && max_degree(g) <= 2, "not a path");
          },
          [&](const Cycle& cy) {
            c.expect_n(g, static_cast<std::uint64_t>(cy.n));
            for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) c.expect_degree(g, v, 2);
            c.expect(is_connected(g), "cycle is disconnected");
          },
          [&](const Complete& k) {
            c.expect_n(g, static_cast<std::uint64_t>(k.n));
            for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) c.expect_degree(g, v, static_cast<std::size_t>(k.n - 1));
          },
          [&](const Star& s) {
            c.expect_n(g, static_cast<std::uint64_t>(s.n) + 1);
            c.expect_degree(g, 0, static_cast<std::size_t>(s.n));
            c.expect(g.edge_count() == static_cast<std::size_t>(s.n), "star edge count");
          },
          [&](const G1& s) {
            c.expect_n(g, 2 * static_cast<std::uint64_t>(s.k));
            if (g.n() != 2 * static_cast<std::size_t>(s.k)) return;
            c.check_g1_part(g, s.k, 0);
            c.expect(g.edge_count() == static_cast<std::size_t>(s.k * (s.k - 1)), "edge count is not k(k-1)");
            c.expect(bipartition(g).has_value(), "G1 is not bipartite");
          },
          [&](const G2& s) {
            c.expect_n(g, 2 * static_cast<std::uint64_t>(s.k) + 1);
            if (g.n() != 2 * static_cast<std::size_t>(s.k) + 1) return;
            c.check_g1_part(g, s.k, 1);
            c.check_universal(g, 2 * s.k, 2 * s.k);
          },
          [&](const G3& s) {
            const int ny = 4 * s.k, block = 2 * s.k;
            const std::uint64_t blocks = binomial(ny, block);
            c.expect_n(g, 1 + static_cast<std::uint64_t>(ny) + blocks * static_cast<std::uint64_t>(block));
            if (!c.report.ok()) return;
            c.expect_degree(g, 0, static_cast<std::size_t>(ny));
            for (Vertex y = 1; y <= ny; ++y) c.expect(g.adjacent(0, y), "x misses a vertex of Y");
            std::set<std::uint64_t> seen;
            Vertex z = 1 + ny;
            for (std::uint64_t i = 0; i < blocks; ++i) {
              std::uint64_t block_mask = 0;
              for (int j = 0; j < block; ++j, ++z) {
                std::uint64_t mask = 0;
                for (Vertex w : g.neighbors(z)) {
                  if (w < 1 || w > ny) {
                    c.expect(false, "Z vertex adjacent outside Y");
                    continue;
                  }
                  mask |= std::uint64_t{1} << (w - 1);
                }
                c.expect(std::popcount(mask) == block, "Z vertex degree is not 2k");
                if (j == 0) block_mask = mask;
                c.expect(mask == block_mask, "block members have different neighborhoods");
              }
              c.expect(seen.insert(block_mask).second, "two blocks join the same subset of Y");
            }
            // Every 2k-subset of Y is hit: distinct subsets, and there are C(4k, 2k) of them.
            c.expect(seen.size() == blocks, "not every 2k-subset of Y has a block");
          },
          [&](const G4& s) {
            c.expect_n(g, 2 * static_cast<std::uint64_t>(s.k) + 2);
            if (!c.report.ok()) return;
            c.check_g1_part(g, s.k, 2);
            const Vertex u = 2 * s.k, v = 2 * s.k + 1;
            c.expect(!g.adjacent(u, v), "u and v are adjacent");
            c.expect_degree(g, u, static_cast<std::size_t>(2 * s.k));
            c.expect_degree(g, v, static_cast<std::size_t>(2 * s.k));
            c.check_universal(g, u, 2 * s.k);
            c.check_universal(g, v, 2 * s.k);
          },
          [&](const CubicGadget& s) {
            const auto hn = static_cast<Vertex>(s.h.n());
            c.expect_n(g, s.h.n() + 12);
            if (!c.report.ok()) return;
            for (Vertex v = 0; v < static_cast<Vertex>(g.n()); ++v) c.expect_degree(g, v, 3);
            c.expect(is_connected(g), "G_H is disconnected");
            for (Vertex start : {hn, hn + 4, hn + 8})
              c.expect(induces_diamond(g, start, start + 1, start + 2, start + 3), "diamond block missing");
            c.expect(g.adjacent(s.v1, hn) && g.adjacent(hn + 3, hn + 4) && g.adjacent(hn + 7, hn + 8) &&
                         g.adjacent(hn + 11, s.v14),
                     "chain edges missing");
          },
          [&](const NaryTree& t) {
            c.check_tree(g, t.n, t.d);
            for (auto& f : check_tree_shape(t.n, t.d).failures) c.report.failures.push_back(f);
          },
          [&](const TreeGk& t) {
            if (t.k == 1) return c.expect_n(g, 1);
            if (t.k == 2) return c.expect(g.n() == 2 && g.edge_count() == 1, "TreeGk(2) is not P_2");
            auto [n, d] = tree_gk_shape(t.k);
            c.check_tree(g, n, d);
          },
          [&](const StarSquare& s) {
            const auto side = static_cast<std::size_t>(s.n) + 1;
            c.expect_n(g, side * side);
            if (!c.report.ok()) return;
            for (std::size_t a = 0; a < side; ++a)
              for (std::size_t b = 0; b < side; ++b) {
                const std::size_t want = (a == 0 ? static_cast<std::size_t>(s.n) : 1) + (b == 0 ? static_cast<std::size_t>(s.n) : 1);
                c.expect_degree(g, static_cast<Vertex>(a * side + b), want);
              }
            c.expect(bipartition(g).has_value(), "star square is not bipartite");
          },
          [&](const SplitGraph& s) {
            c.expect_n(g, static_cast<std::uint64_t>(s.clique_size + s.indep_size));
            if (!c.report.ok()) return;
            std::size_t cross = 0;
            for (auto [u, v] : g.edges()) {
              const bool cu = u < s.clique_size, cv = v < s.clique_size;
              c.expect(cu || cv, "edge inside the independent part");
              if (cu != cv) ++cross;
            }
            c.expect(cross == static_cast<std::size_t>(s.cross_edges), "cross edge count");
            for (Vertex u = 0; u < s.clique_size; ++u)
              for (Vertex v = u + 1; v < s.clique_size; ++v) c.expect(g.adjacent(u, v), "clique part not complete");
          },
      },
      spec);
  return c.report;
}

namespace {

std::vector<long long> parse_params(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("bad family parameter '" + item + "'");
    if (value < 0 || value > std::numeric_limits<int>::max())
      throw std::invalid_argument("family parameter out of range '" + item + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const auto params = colon == std::string::npos ? std::vector<long long>{} : parse_params(text.substr(colon + 1));
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (name == "path") return need(1), FamilySpec{Path{p(0)}};
  if (name == "cycle") return need(1), FamilySpec{Cycle{p(0)}};
  if (name == "complete") return need(1), FamilySpec{Complete{p(0)}};
  if (name == "star") return need(1), FamilySpec{Star{p(0)}};
  if (name == "g1") return need(1), FamilySpec{G1{p(0)}};
  if (name == "g2") return need(1), FamilySpec{G2{p(0)}};
  if (name == "g3") return need(1), FamilySpec{G3{p(0)}};
  if (name == "g4") return need(1), FamilySpec{G4{p(0)}};
  if (name == "cubic") return need(0), FamilySpec{CubicGadget{diamond(), 0, 3}};
  if (name == "tree") return need(2), FamilySpec{NaryTree{p(0), p(1)}};
  if (name == "treegk") return need(1), FamilySpec{TreeGk{p(0)}};
  if (name == "starsquare") return need(1), FamilySpec{StarSquare{p(0)}};
  if (name == "split") {
    need(4);
    return SplitGraph{p(0), p(1), p(2), static_cast<std::uint64_t>(params[3])};
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_name(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const Path& s) { return "path:" + std::to_string(s.n); },
          [](const Cycle& s) { return "cycle:" + std::to_string(s.n); },
          [](const Complete& s) { return "complete:" + std::to_string(s.n); },
          [](const Star& s) { return "star:" + std::to_string(s.n); },
          [](const G1& s) { return "g1:" + std::to_string(s.k); },
          [](const G2& s) { return "g2:" + std::to_string(s.k); },
          [](const G3& s) { return "g3:" + std::to_string(s.k); },
          [](const G4& s) { return "g4:" + std::to_string(s.k); },
          [](const CubicGadget&) { return std::string("cubic"); },
          [](const NaryTree& s) { return "tree:" + std::to_string(s.n) + "," + std::to_string(s.d); },
          [](const TreeGk& s) { return "treegk:" + std::to_string(s.k); },
          [](const StarSquare& s) { return "starsquare:" + std::to_string(s.n); },
          [](const SplitGraph& s) {
            return "split:" + std::to_string(s.clique_size) + "," + std::to_string(s.indep_size) + "," +
                   std::to_string(s.cross_edges) + "," + std::to_string(s.seed);
          },
      },
      spec);
}

}  // namespace indcol
