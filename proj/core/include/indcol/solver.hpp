#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "indcol/game.hpp"

namespace indcol {

struct SolveLimits {
  std::size_t max_vertices = 24;
  // Memo entries; one entry is ~24 bytes plus table overhead.
  std::size_t max_states = 8'000'000;
  // Zero means unlimited.
  std::chrono::milliseconds time_budget{0};
};

// Masks are 64-bit, one bit reserved for flags.
inline constexpr std::size_t kSolverHardVertexLimit = 63;

struct Evaluation {
  // Rounds still to come, counting the current round iff it has started.
  int value = 0;
  // Absent at terminal states.
  std::optional<Move> best_move;
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::size_t states_stored = 0;
};

struct MoveValue {
  Move move;
  // Same convention as Evaluation::value, measured from the state before the move.
  int value = 0;
};

/**
 * Exact minimax solver for one graph and variant. The memo table lives as
 * long as the object, so repeated queries on positions of the same game are
 * cheap. Not thread-safe.
 */
class Solver {
 public:
  Solver(const Graph& g, Variant v, SolveLimits limits = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  Variant variant() const;

  // Optimal number of rounds of the whole game.
  int game_value();
  int remaining(const GameState& s);
  // Ties go to the lowest vertex; pass comes after every vertex.
  Evaluation best_move(const GameState& s);
  // Legal vertices ascending, then pass when allowed.
  std::vector<MoveValue> move_values(const GameState& s);

  const SolveStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Throws LimitExceeded naming the exhausted resource.
int solve(const Graph& g, Variant v, const SolveLimits& limits = {});
// Indexed like kAllVariants: A, B, AB, BA, As.
std::array<int, 5> solve_all_variants(const Graph& g, const SolveLimits& limits = {});
Evaluation best_move(const GameState& s, const SolveLimits& limits = {});

inline constexpr std::size_t kOracleVertexLimit = 8;

// Plain depth-first minimax straight from the rules. No memo, no bounds.
int oracle_solve(const Graph& g, Variant v);

using Strategy = std::function<Move(const GameState&)>;

struct PlayoutResult {
  Transcript transcript;
  int rounds = 0;
  std::vector<int> coloring;
};

// Runs the game to the end. An illegal move from a strategy surfaces as IllegalMove.
PlayoutResult play_out(const Graph& g, Variant v, const Strategy& alice, const Strategy& bob);

// best_move on a solver shared between calls.
Strategy optimal_strategy(std::shared_ptr<Solver> solver);

}  // namespace indcol
