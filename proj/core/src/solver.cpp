#include "indcol/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "absl/container/flat_hash_map.h"
#include "absl/hash/hash.h"

namespace indcol {

namespace {

using Mask = std::uint64_t;
constexpr Mask kFlag = Mask{1} << 63;

struct Pos {
  Mask u = 0;
  Mask p = 0;
  Player mover = Player::alice;
  bool fresh = true;
};

struct Key {
  Mask a;  // U, fresh in bit 63
  Mask b;  // P, mover in bit 63

  bool operator==(const Key&) const = default;
  template <typename H>
  friend H AbslHashValue(H h, const Key& k) {
    return H::combine(std::move(h), k.a, k.b);
  }
};

Key key_of(const Pos& s) {
  return {s.u | (s.fresh ? kFlag : 0), s.p | (s.mover == Player::bob ? kFlag : 0)};
}

struct Bounds {
  std::uint8_t lo;
  std::uint8_t hi;
};

Mask low_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

struct Solver::Impl {
  Variant variant;
  SolveLimits limits;
  std::size_t n = 0;
  Graph graph;
  std::vector<Mask> adj;
  absl::flat_hash_map<Key, Bounds> memo;
  SolveStats stats;
  std::chrono::steady_clock::time_point deadline;
  bool timed = false;

  Impl(const Graph& g, Variant v, SolveLimits l) : variant(v), limits(l), n(g.n()), graph(g) {
    const std::size_t cap = std::min(limits.max_vertices, kSolverHardVertexLimit);
    if (n > cap)
      throw LimitExceeded(Resource::vertices, cap,
                          "graph has " + std::to_string(n) + " vertices, limit is " + std::to_string(cap));
    adj.resize(n);
    for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(static_cast<Vertex>(v)).words()[0];
  }

  void start_clock() {
    timed = limits.time_budget.count() > 0;
    if (timed) deadline = std::chrono::steady_clock::now() + limits.time_budget;
  }

  Pos play(const Pos& s, int v) const {
    Pos c;
    c.u = s.u & ~(Mask{1} << v);
    c.p = (s.p | adj[static_cast<std::size_t>(v)]) & c.u;
    c.mover = other(s.mover);
    c.fresh = false;
    if (c.u != 0 && (c.u & ~c.p) == 0) {
      c.p = 0;
      c.fresh = true;
      c.mover = next_starter(variant, c.mover);
    }
    return c;
  }

  static Pos pass(const Pos& s) {
    Pos c = s;
    c.mover = Player::bob;
    return c;
  }

  bool pass_allowed(const Pos& s) const {
    return variant == Variant::alice_skip && s.mover == Player::alice && (s.u & ~s.p) != 0;
  }

  int residual_degree(int v, Mask u) const { return std::popcount(adj[static_cast<std::size_t>(v)] & u); }

  // Bounds on rounds not yet started.
  Bounds static_bounds(const Pos& s) const {
    if (s.u == 0) return {0, 0};
    int lo = 0;
    int hi = 0;
    bool edge_in_u = false;
    bool edge_in_p = false;
    for (Mask m = s.u; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = residual_degree(v, s.u);
      if (d > 0) edge_in_u = true;
      if (s.fresh) {
        hi = std::max(hi, d + 1);
      } else if (s.p >> v & 1) {
        hi = std::max(hi, d + 1);
        if (adj[static_cast<std::size_t>(v)] & s.p) edge_in_p = true;
      } else {
        hi = std::max(hi, d);
      }
    }
    if (s.fresh) {
      lo = 1 + (edge_in_u ? 1 : 0);
    } else {
      lo = (s.p != 0 ? 1 : 0) + (edge_in_p ? 1 : 0);
    }
    return {static_cast<std::uint8_t>(lo), static_cast<std::uint8_t>(std::max(lo, hi))};
  }

  Bounds known_bounds(const Pos& s) const {
    Bounds b = static_bounds(s);
    if (auto it = memo.find(key_of(s)); it != memo.end()) {
      b.lo = std::max(b.lo, it->second.lo);
      b.hi = std::min(b.hi, it->second.hi);
    }
    return b;
  }

  void tick() {
    ++stats.nodes_expanded;
    if (memo.size() >= limits.max_states)
      throw LimitExceeded(Resource::states, limits.max_states,
                          "memo table reached " + std::to_string(limits.max_states) + " states");
    if (timed && (stats.nodes_expanded & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
      throw LimitExceeded(Resource::time, static_cast<std::size_t>(limits.time_budget.count()),
                          "time budget of " + std::to_string(limits.time_budget.count()) + " ms exhausted");
  }

  struct Child {
    Pos pos;
    int offset;  // rounds started by the move itself
  };

  std::vector<Child> children(const Pos& s) const {
    std::vector<Child> out;
    const int offset = s.fresh ? 1 : 0;
    std::vector<std::pair<int, int>> order;
    for (Mask m = s.u & ~s.p; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      order.push_back({residual_degree(v, s.u), v});
    }
    if (s.mover == Player::alice) {
      std::stable_sort(order.begin(), order.end(), [](auto x, auto y) { return x.first > y.first; });
    } else {
      std::stable_sort(order.begin(), order.end(), [](auto x, auto y) { return x.first < y.first; });
    }
    out.reserve(order.size() + 1);
    for (auto [d, v] : order) out.push_back({play(s, v), offset});
    if (pass_allowed(s)) out.push_back({pass(s), 0});
    return out;
  }

  // True iff Alice can hold the rounds not yet started to at most t.
  bool le(const Pos& s, int t) {
    if (t < 0) return false;
    const Bounds b = known_bounds(s);
    if (b.hi <= t) return true;
    if (b.lo > t) return false;
    tick();

    const auto kids = children(s);
    const bool alice = s.mover == Player::alice;
    bool result = !alice;
    bool decided = false;
    for (const auto& c : kids) {
      const Bounds cb = known_bounds(c.pos);
      const int target = t - c.offset;
      if (alice && cb.hi <= target) {
        result = true;
        decided = true;
        break;
      }
      if (!alice && cb.lo > target) {
        result = false;
        decided = true;
        break;
      }
    }
    if (!decided) {
      for (const auto& c : kids) {
        const bool ok = le(c.pos, t - c.offset);
        if (alice && ok) {
          result = true;
          break;
        }
        if (!alice && !ok) {
          result = false;
          break;
        }
      }
    }

    auto [it, inserted] = memo.try_emplace(key_of(s), b);
    if (!inserted) {
      it->second.lo = std::max(it->second.lo, b.lo);
      it->second.hi = std::min(it->second.hi, b.hi);
    }
    if (result) {
      it->second.hi = std::min<std::uint8_t>(it->second.hi, static_cast<std::uint8_t>(t));
    } else {
      it->second.lo = std::max<std::uint8_t>(it->second.lo, static_cast<std::uint8_t>(t + 1));
    }
    stats.states_stored = memo.size();
    return result;
  }

  int value(const Pos& s) {
    if (s.u == 0) return 0;
    Bounds b = known_bounds(s);
    for (int t = b.lo; t < b.hi; ++t)
      if (le(s, t)) return t;
    return b.hi;
  }

  Pos pos_of(const GameState& s) const {
    if (s.variant() != variant) throw std::invalid_argument("state variant does not match the solver");
    if (!(*s.graph() == graph)) throw std::invalid_argument("state graph does not match the solver");
    Pos p;
    p.u = n == 0 ? 0 : s.uncolored().words()[0];
    p.p = n == 0 ? 0 : s.protected_set().words()[0];
    p.mover = s.mover();
    p.fresh = s.fresh();
    return p;
  }
};

Solver::Solver(const Graph& g, Variant v, SolveLimits limits) : impl_(std::make_unique<Impl>(g, v, limits)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

Variant Solver::variant() const { return impl_->variant; }
const SolveStats& Solver::stats() const { return impl_->stats; }

int Solver::game_value() {
  impl_->start_clock();
  Pos root;
  root.u = low_mask(impl_->n);
  root.mover = first_mover(impl_->variant);
  return impl_->value(root);
}

int Solver::remaining(const GameState& s) {
  impl_->start_clock();
  const Pos p = impl_->pos_of(s);
  if (p.u == 0) return 0;
  return impl_->value(p) + (p.fresh ? 0 : 1);
}

std::vector<MoveValue> Solver::move_values(const GameState& s) {
  impl_->start_clock();
  const Pos p = impl_->pos_of(s);
  std::vector<MoveValue> out;
  for (Mask m = p.u & ~p.p; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    out.push_back({Move::at(v), 1 + impl_->value(impl_->play(p, v))});
  }
  if (impl_->pass_allowed(p)) out.push_back({Move::pass(), impl_->value(Impl::pass(p)) + (p.fresh ? 0 : 1)});
  return out;
}

Evaluation Solver::best_move(const GameState& s) {
  impl_->start_clock();
  const Pos p = impl_->pos_of(s);
  if (p.u == 0) return {0, std::nullopt};
  const int current = p.fresh ? 0 : 1;
  const int value = impl_->value(p) + current;
  const bool alice = p.mover == Player::alice;
  // Test each move, in tie-break order, for attaining the value.
  auto attains = [&](const Pos& child, int offset) {
    const int target = value - current - offset;
    return alice ? impl_->le(child, target) : !impl_->le(child, target - 1);
  };
  const int offset = p.fresh ? 1 : 0;
  for (Mask m = p.u & ~p.p; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (attains(impl_->play(p, v), offset)) return {value, Move::at(v)};
  }
  if (impl_->pass_allowed(p) && attains(Impl::pass(p), 0)) return {value, Move::pass()};
  throw std::logic_error("no move attains the position value");
}

int solve(const Graph& g, Variant v, const SolveLimits& limits) { return Solver(g, v, limits).game_value(); }

std::array<int, 5> solve_all_variants(const Graph& g, const SolveLimits& limits) {
  std::array<int, 5> out{};
  for (std::size_t i = 0; i < kAllVariants.size(); ++i) out[i] = solve(g, kAllVariants[i], limits);
  return out;
}

Evaluation best_move(const GameState& s, const SolveLimits& limits) {
  return Solver(*s.graph(), s.variant(), limits).best_move(s);
}

}  // namespace indcol
