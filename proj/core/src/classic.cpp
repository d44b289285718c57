#include "indcol/classic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "absl/container/flat_hash_map.h"

namespace indcol {

namespace {

using Mask = std::uint64_t;

void check_size(const Graph& g, const SolveLimits& limits, std::size_t hard_cap) {
  const std::size_t cap = std::min(limits.max_vertices, hard_cap);
  if (g.n() > cap)
    throw LimitExceeded(Resource::vertices, cap,
                        "graph has " + std::to_string(g.n()) + " vertices, limit is " + std::to_string(cap));
}

class Budget {
 public:
  explicit Budget(const SolveLimits& limits) : limits_(limits) {
    if (limits.time_budget.count() > 0) deadline_ = std::chrono::steady_clock::now() + limits.time_budget;
  }

  void tick(std::size_t stored) {
    if (stored >= limits_.max_states)
      throw LimitExceeded(Resource::states, limits_.max_states,
                          "memo table reached " + std::to_string(limits_.max_states) + " states");
    if (limits_.time_budget.count() > 0 && (++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw LimitExceeded(Resource::time, static_cast<std::size_t>(limits_.time_budget.count()),
                          "time budget exhausted");
  }

 private:
  SolveLimits limits_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> adj(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) adj[v] = g.neighbors(static_cast<Vertex>(v)).words()[0];
  return adj;
}

// Color labels packed 4 bits per vertex; classes renumbered by lowest vertex.
class ColoringGame {
 public:
  ColoringGame(const Graph& g, int m, const SolveLimits& limits)
      : n_(static_cast<int>(g.n())), m_(m), adj_(masks_of(g)), budget_(limits) {}

  bool alice_wins() {
    std::array<int, 16> labels{};
    return win(labels, 0);
  }

 private:
  static std::uint64_t pack(const std::array<int, 16>& labels, int n) {
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v) key |= static_cast<std::uint64_t>(labels[v]) << (4 * v);
    return key;
  }

  void canonicalize(std::array<int, 16>& labels) const {
    std::array<int, 16> remap{};
    int next = 0;
    for (int v = 0; v < n_; ++v) {
      const int c = labels[v];
      if (c == 0) continue;
      if (remap[c] == 0) remap[c] = ++next;
      labels[v] = remap[c];
    }
  }

  bool win(const std::array<int, 16>& labels, int colored) {
    if (colored == n_) return true;
    const std::uint64_t key = pack(labels, n_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    budget_.tick(memo_.size());

    int used = 0;
    for (int v = 0; v < n_; ++v) used = std::max(used, labels[v]);
    // Per vertex: which labels its neighbors carry.
    std::array<unsigned, 16> seen{};
    bool dead = false;
    for (int v = 0; v < n_ && !dead; ++v) {
      if (labels[v] != 0) continue;
      for (Mask nb = adj_[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
        const int c = labels[std::countr_zero(nb)];
        if (c) seen[v] |= 1U << c;
      }
      if (std::popcount(seen[v]) >= m_) dead = true;
    }

    bool result;
    if (dead) {
      result = false;
    } else {
      const bool alice = colored % 2 == 0;
      result = !alice;
      for (int v = 0; v < n_ && result != alice; ++v) {
        if (labels[v] != 0) continue;
        // All unused colors are interchangeable, so one stands for them all.
        const int top = std::min(used + 1, m_);
        for (int c = 1; c <= top; ++c) {
          if (seen[v] >> c & 1U) continue;
          auto child = labels;
          child[v] = c;
          canonicalize(child);
          if (win(child, colored + 1) == alice) {
            result = alice;
            break;
          }
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  int n_;
  int m_;
  std::vector<Mask> adj_;
  Budget budget_;
  absl::flat_hash_map<std::uint64_t, bool> memo_;
};

class MarkingGame {
 public:
  MarkingGame(const Graph& g, const SolveLimits& limits)
      : n_(static_cast<int>(g.n())), adj_(masks_of(g)), budget_(limits) {}

  // Largest back-degree still to come; the key needs no best-so-far because
  // max(b, opt_v x_v) = opt_v max(b, x_v).
  int value(Mask marked) {
    const int count = std::popcount(marked);
    if (count == n_) return 0;
    if (auto it = memo_.find(marked); it != memo_.end()) return it->second;
    budget_.tick(memo_.size());
    const bool alice = count % 2 == 0;
    int best = alice ? n_ : -1;
    for (int v = 0; v < n_; ++v) {
      const Mask bit = Mask{1} << v;
      if (marked & bit) continue;
      const int back = std::popcount(adj_[static_cast<std::size_t>(v)] & marked);
      const int score = std::max(back, value(marked | bit));
      best = alice ? std::min(best, score) : std::max(best, score);
    }
    memo_.emplace(marked, best);
    return best;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
  Budget budget_;
  absl::flat_hash_map<Mask, int> memo_;
};

}  // namespace

SolveLimits coloring_game_limits() {
  SolveLimits l;
  l.max_vertices = 12;
  return l;
}

SolveLimits marking_game_limits() {
  SolveLimits l;
  l.max_vertices = 14;
  return l;
}

bool alice_wins_coloring_game(const Graph& g, int m, const SolveLimits& limits) {
  check_size(g, limits, 15);
  if (m < 1) throw std::invalid_argument("color count must be positive");
  if (g.n() == 0) return true;
  if (m > 15) m = 15;  // more colors than vertices changes nothing
  return ColoringGame(g, m, limits).alice_wins();
}

int game_chromatic_number(const Graph& g, const SolveLimits& limits) {
  check_size(g, limits, 15);
  if (g.n() == 0) return 0;
  for (int m = chromatic_number(g);; ++m)
    if (alice_wins_coloring_game(g, m, limits)) return m;
}

int game_coloring_number(const Graph& g, const SolveLimits& limits) {
  check_size(g, limits, 63);
  if (g.n() == 0) return 0;
  return 1 + MarkingGame(g, limits).value(0);
}

}  // namespace indcol
