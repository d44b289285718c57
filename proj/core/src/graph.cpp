#include "indcol/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <random>
#include <string>

namespace indcol {

const char* to_string(Resource r) {
  switch (r) {
    case Resource::vertices: return "vertices";
    case Resource::states: return "states";
    case Resource::time: return "time";
    case Resource::capacity: return "capacity";
  }
  return "unknown";
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n(); ++u)
    for (Vertex v : rows_[u])
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

bool Graph::valid() const {
  for (std::size_t u = 0; u < n(); ++u) {
    const auto& row = rows_[u];
    if (row.universe() != n()) return false;
    if (row.test(static_cast<Vertex>(u))) return false;
    for (Vertex v : row)
      if (!rows_[static_cast<std::size_t>(v)].test(static_cast<Vertex>(u))) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(std::size_t n, std::size_t capacity) {
  if (n > capacity)
    throw LimitExceeded(Resource::capacity, capacity,
                        "graph with " + std::to_string(n) + " vertices exceeds capacity " + std::to_string(capacity));
  rows_.assign(n, VertexSet(n));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n() || static_cast<std::size_t>(v) >= n())
    throw std::out_of_range("edge endpoint out of range");
  rows_[static_cast<std::size_t>(u)].set(v);
  rows_[static_cast<std::size_t>(v)].set(u);
  return *this;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.rows_ = std::move(rows_);
  return g;
}

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.n(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> small_rows(const Graph& g) {
  std::vector<Mask> rows(g.n(), 0);
  for (std::size_t v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) rows[v] |= Mask{1} << w;
  return rows;
}

// Max clique with greedy coloring bound over candidate sets.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> rows) : rows_(std::move(rows)) {}

  int run() {
    Mask all = rows_.size() == 64 ? ~Mask{0} : (Mask{1} << rows_.size()) - 1;
    expand(0, all);
    return best_;
  }

 private:
  void expand(int size, Mask cand) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy-color the candidates; a vertex with color c bounds the clique by size + c.
    std::vector<std::pair<int, int>> order;  // (vertex, color)
    Mask uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      Mask avail = uncolored;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~(Mask{1} << v);
        avail &= ~rows_[static_cast<std::size_t>(v)];
        uncolored &= ~(Mask{1} << v);
        order.emplace_back(v, color);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, c] = *it;
      if (size + c <= best_) return;
      expand(size + 1, cand & rows_[static_cast<std::size_t>(v)]);
      cand &= ~(Mask{1} << v);
    }
  }

  std::vector<Mask> rows_;
  int best_ = 0;
};

class Colorability {
 public:
  Colorability(const std::vector<Mask>& rows, int k) : rows_(rows), k_(k), classes_(static_cast<std::size_t>(k), 0) {}

  bool run() {
    Mask all = rows_.size() == 64 ? ~Mask{0} : (Mask{1} << rows_.size()) - 1;
    return assign(all, 0);
  }

 private:
  // DSATUR branching; a fresh class may only be opened as the next unused
  // index, which keeps color classes in canonical order.
  bool assign(Mask uncolored, int used) {
    if (uncolored == 0) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (Mask m = uncolored; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int sat = 0;
      for (int c = 0; c < used; ++c)
        if (classes_[static_cast<std::size_t>(c)] & rows_[static_cast<std::size_t>(v)]) ++sat;
      int deg = std::popcount(rows_[static_cast<std::size_t>(v)] & uncolored);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    const Mask bit = Mask{1} << pick;
    for (int c = 0; c < used; ++c) {
      auto& cls = classes_[static_cast<std::size_t>(c)];
      if (cls & rows_[static_cast<std::size_t>(pick)]) continue;
      cls |= bit;
      bool ok = assign(uncolored & ~bit, used);
      cls &= ~bit;
      if (ok) return true;
    }
    if (used < k_) {
      classes_[static_cast<std::size_t>(used)] = bit;
      bool ok = assign(uncolored & ~bit, used + 1);
      classes_[static_cast<std::size_t>(used)] = 0;
      if (ok) return true;
    }
    return false;
  }

  const std::vector<Mask>& rows_;
  int k_;
  std::vector<Mask> classes_;
};

}  // namespace

int clique_number(const Graph& g, std::size_t limit) {
  limit = std::min<std::size_t>(limit, 64);
  if (g.n() > limit)
    throw LimitExceeded(Resource::vertices, limit, "clique_number: n=" + std::to_string(g.n()) + " exceeds limit");
  if (g.n() == 0) return 0;
  return CliqueSearch(small_rows(g)).run();
}

int greedy_color_count(const Graph& g) {
  std::vector<int> color(g.n(), 0);
  int used = 0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    std::vector<bool> taken(static_cast<std::size_t>(used) + 2, false);
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      if (static_cast<std::size_t>(w) < v) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = true;
    int c = 1;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
    used = std::max(used, c);
  }
  return used;
}

int chromatic_number(const Graph& g, std::size_t limit) {
  limit = std::min<std::size_t>(limit, 64);
  if (g.n() > limit)
    throw LimitExceeded(Resource::vertices, limit, "chromatic_number: n=" + std::to_string(g.n()) + " exceeds limit");
  if (g.n() == 0) return 0;
  const auto rows = small_rows(g);
  int lower = CliqueSearch(rows).run();
  int upper = greedy_color_count(g);
  for (int k = lower; k < upper; ++k)
    if (Colorability(rows, k).run()) return k;
  return upper;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<int> side(n, -1);
  Bipartition parts{VertexSet(n), VertexSet(n)};
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{static_cast<Vertex>(s)};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) (side[v] == 0 ? parts.first : parts.second).set(static_cast<Vertex>(v));
  return parts;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (remaining.any()) {
    VertexSet comp(g.n());
    VertexSet frontier(g.n());
    frontier.set(remaining.first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.n());
      for (Vertex v : frontier) next |= g.neighbors(v);
      next &= within;
      next -= comp;
      frontier = std::move(next);
    }
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

namespace {

// `forbidden` holds the closed neighborhoods of every path vertex but the last.
bool extend_induced_path(const Graph& g, Vertex last, std::size_t length, const VertexSet& forbidden, std::size_t k) {
  if (length == k) return true;
  VertexSet next_forbidden = forbidden | g.neighbors(last);
  next_forbidden.set(last);
  for (Vertex w : g.neighbors(last) - forbidden)
    if (extend_induced_path(g, w, length + 1, next_forbidden, k)) return true;
  return false;
}

}  // namespace

bool has_induced_path(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  if (k > g.n()) return false;
  for (std::size_t s = 0; s < g.n(); ++s)
    if (extend_induced_path(g, static_cast<Vertex>(s), 1, VertexSet(g.n()), k)) return true;
  return false;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> index(g.n(), -1);
  int next = 0;
  for (Vertex v : s) index[static_cast<std::size_t>(v)] = next++;
  GraphBuilder b(static_cast<std::size_t>(next), std::max<std::size_t>(kDefaultCapacity, static_cast<std::size_t>(next)));
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (w > v && s.test(w)) b.add_edge(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
  return std::move(b).build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.n();
  GraphBuilder b(g.n() * m);
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = 0; v < m; ++v) {
      const Vertex id = static_cast<Vertex>(u * m + v);
      for (Vertex w : h.neighbors(static_cast<Vertex>(v)))
        if (static_cast<std::size_t>(w) > v) b.add_edge(id, static_cast<Vertex>(u * m + static_cast<std::size_t>(w)));
      for (Vertex x : g.neighbors(static_cast<Vertex>(u)))
        if (static_cast<std::size_t>(x) > u) b.add_edge(id, static_cast<Vertex>(static_cast<std::size_t>(x) * m + v));
    }
  return std::move(b).build();
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  GraphBuilder b(n);
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (coin(rng) < p) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).build();
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  GraphBuilder b(n);
  if (n <= 1) return std::move(b).build();
  if (n == 2) return std::move(b.add_edge(0, 1)).build();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    b.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(c));
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(static_cast<Vertex>(v));
  b.add_edge(last[0], last[1]);
  return std::move(b).build();
}

}  // namespace indcol
