#include <algorithm>
#include <string>
#include <vector>

#include "indcol/solver.hpp"

namespace indcol {

namespace {

// Deliberately naive: recomputes protection from the colors on every call.
struct OracleGame {
  int n;
  Variant variant;
  std::vector<std::vector<bool>> adj;

  struct Node {
    std::vector<int> color;
    int round = 1;
    bool fresh = true;
    bool alice_to_move = true;
  };

  bool selectable(const Node& s, int v) const {
    if (s.color[v] != 0) return false;
    for (int w = 0; w < n; ++w)
      if (adj[v][w] && s.color[w] == s.round) return false;
    return true;
  }

  bool any_uncolored(const Node& s) const {
    return std::any_of(s.color.begin(), s.color.end(), [](int c) { return c == 0; });
  }

  void maybe_end_round(Node& s) const {
    if (s.fresh || !any_uncolored(s)) return;
    for (int v = 0; v < n; ++v)
      if (selectable(s, v)) return;
    s.round += 1;
    s.fresh = true;
    if (variant == Variant::a) s.alice_to_move = true;
    if (variant == Variant::b) s.alice_to_move = false;
    // AB, BA, As: the player who did not make the last selection starts,
    // which is the one already on move.
  }

  int search(const Node& s) const {
    if (!any_uncolored(s)) return s.fresh ? s.round - 1 : s.round;
    int best = s.alice_to_move ? n + 1 : -1;
    bool any_move = false;
    for (int v = 0; v < n; ++v) {
      if (!selectable(s, v)) continue;
      any_move = true;
      Node c = s;
      c.color[v] = s.round;
      c.fresh = false;
      c.alice_to_move = !s.alice_to_move;
      maybe_end_round(c);
      const int r = search(c);
      best = s.alice_to_move ? std::min(best, r) : std::max(best, r);
    }
    if (variant == Variant::alice_skip && s.alice_to_move && any_move) {
      Node c = s;
      c.alice_to_move = false;
      best = std::min(best, search(c));
    }
    return best;
  }
};

}  // namespace

int oracle_solve(const Graph& g, Variant v) {
  if (g.n() > kOracleVertexLimit)
    throw LimitExceeded(Resource::vertices, kOracleVertexLimit,
                        "oracle handles at most " + std::to_string(kOracleVertexLimit) + " vertices");
  OracleGame game{static_cast<int>(g.n()), v, {}};
  game.adj.assign(g.n(), std::vector<bool>(g.n(), false));
  for (auto [a, b] : g.edges()) {
    game.adj[a][b] = true;
    game.adj[b][a] = true;
  }
  OracleGame::Node root;
  root.color.assign(g.n(), 0);
  root.alice_to_move = v == Variant::a || v == Variant::ab || v == Variant::alice_skip;
  return game.search(root);
}

}  // namespace indcol
