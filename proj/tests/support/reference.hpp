#pragma once

// Slow, obviously-correct reference computations used as test oracles.
// They work on plain adjacency matrices and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "indcol/graph.hpp"

namespace ref {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const indcol::Graph& g) {
  const int n = static_cast<int>(g.n());
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

// Tries every assignment of k colors.
inline bool colorable(const Matrix& a, int k, std::vector<int>& col, int v = 0) {
  const int n = static_cast<int>(a.size());
  if (v == n) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = !(a[u][v] && col[u] == c);
    if (!ok) continue;
    col[v] = c;
    if (colorable(a, k, col, v + 1)) return true;
  }
  return false;
}

inline int chromatic_number(const indcol::Graph& g) {
  const auto a = matrix(g);
  std::vector<int> col(a.size(), -1);
  int k = 0;
  while (!colorable(a, k, col)) ++k;
  return k;
}

inline int clique_number(const indcol::Graph& g) {
  const auto a = matrix(g);
  const int n = static_cast<int>(a.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      for (int v = u + 1; v < n && clique; ++v)
        if ((s >> u & 1) && (s >> v & 1) && !a[u][v]) clique = false;
    if (clique) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

// All ordered k-tuples of distinct vertices.
inline bool has_induced_path(const indcol::Graph& g, int k) {
  const auto a = matrix(g);
  const int n = static_cast<int>(a.size());
  if (k > n) return false;
  std::vector<int> p;
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(p.size()) == k) return true;
    for (int v = 0; v < n; ++v) {
      if (std::find(p.begin(), p.end(), v) != p.end()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < p.size() && ok; ++i) {
        const bool want = i + 1 == p.size();
        if (a[p[i]][v] != want) ok = false;
      }
      if (!ok) continue;
      p.push_back(v);
      if (self(self)) return true;
      p.pop_back();
    }
    return false;
  };
  return rec(rec);
}

// Independence coloring game, memoized on (colors, mover, round).
// variant: 0 A, 1 B, 2 AB, 3 BA, 4 As. Returns the total number of rounds.
class IndependenceGame {
 public:
  IndependenceGame(const indcol::Graph& g, int variant) : a_(matrix(g)), variant_(variant) {}

  int value() {
    std::vector<int> col(a_.size(), 0);
    const bool bob_first = variant_ == 1 || variant_ == 3;
    return go(col, bob_first, 1);
  }

  // Value after the first player selects v.
  int value_after(int v) {
    std::vector<int> col(a_.size(), 0);
    const bool bob_first = variant_ == 1 || variant_ == 3;
    col[v] = 1;
    return go(col, !bob_first, 1);
  }

 private:
  bool selectable(const std::vector<int>& col, int v, int round) const {
    if (col[v] != 0) return false;
    for (std::size_t u = 0; u < col.size(); ++u)
      if (a_[v][u] && col[u] == round) return false;
    return true;
  }

  int go(std::vector<int>& col, bool bob, int round) {
    const int n = static_cast<int>(col.size());
    bool any_uncolored = false;
    bool any_selectable = false;
    bool started = false;
    for (int v = 0; v < n; ++v) {
      any_uncolored |= col[v] == 0;
      any_selectable |= selectable(col, v, round);
      started |= col[v] == round;
    }
    if (!any_uncolored) return started ? round : round - 1;
    if (!any_selectable) {
      // Round over; the player on move is the one who did not end it.
      bool next = bob;
      if (variant_ == 0) next = false;
      if (variant_ == 1) next = true;
      return go(col, next, round + 1);
    }
    const auto key = std::make_tuple(col, bob, round);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = bob ? 0 : 1 << 20;
    for (int v = 0; v < n; ++v) {
      if (!selectable(col, v, round)) continue;
      col[v] = round;
      const int r = go(col, !bob, round);
      col[v] = 0;
      best = bob ? std::max(best, r) : std::min(best, r);
    }
    if (!bob && variant_ == 4) best = std::min(best, go(col, true, round));
    memo_[key] = best;
    return best;
  }

  Matrix a_;
  int variant_;
  std::map<std::tuple<std::vector<int>, bool, int>, int> memo_;
};

// Classical coloring game with m colors, Alice first. True iff Alice wins.
class ColoringGame {
 public:
  ColoringGame(const indcol::Graph& g, int m) : a_(matrix(g)), m_(m) {}

  bool alice_wins() {
    std::vector<int> col(a_.size(), 0);
    return go(col, false);
  }

 private:
  bool go(std::vector<int>& col, bool bob) {
    const int n = static_cast<int>(col.size());
    bool done = true;
    for (int v = 0; v < n; ++v) {
      if (col[v] != 0) continue;
      done = false;
      if (options(col, v).empty()) return false;
    }
    if (done) return true;
    if (auto it = memo_.find({col, bob}); it != memo_.end()) return it->second;
    bool result = bob;
    for (int v = 0; v < n && result == bob; ++v) {
      if (col[v] != 0) continue;
      for (int c : options(col, v)) {
        col[v] = c;
        const bool r = go(col, !bob);
        col[v] = 0;
        if (r != bob) {
          result = r;
          break;
        }
      }
    }
    memo_[{col, bob}] = result;
    return result;
  }

  std::vector<int> options(const std::vector<int>& col, int v) const {
    std::vector<int> out;
    for (int c = 1; c <= m_; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < col.size() && ok; ++u) ok = !(a_[v][u] && col[u] == c);
      if (ok) out.push_back(c);
    }
    return out;
  }

  Matrix a_;
  int m_;
  std::map<std::pair<std::vector<int>, bool>, bool> memo_;
};

inline int game_chromatic_number(const indcol::Graph& g) {
  int m = 1;
  while (!ColoringGame(g, m).alice_wins()) ++m;
  return m;
}

// Marking game: plain minimax over orders, Alice first minimizing the
// largest number of marked neighbors a vertex has when it gets marked.
inline int game_coloring_number(const indcol::Graph& g) {
  const auto a = matrix(g);
  const int n = static_cast<int>(a.size());
  std::vector<bool> marked(n, false);
  auto rec = [&](auto&& self, bool bob, int depth) -> int {
    if (depth == n) return 0;
    int best = bob ? -1 : 1 << 20;
    for (int v = 0; v < n; ++v) {
      if (marked[v]) continue;
      int back = 0;
      for (int u = 0; u < n; ++u) back += a[v][u] && marked[u];
      marked[v] = true;
      const int r = std::max(back, self(self, !bob, depth + 1));
      marked[v] = false;
      best = bob ? std::max(best, r) : std::min(best, r);
    }
    return best;
  };
  return 1 + rec(rec, false, 0);
}

}  // namespace ref
