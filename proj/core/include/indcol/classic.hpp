#pragma once

#include "indcol/solver.hpp"

namespace indcol {

// Default limits: 12 vertices for the coloring game, 14 for the marking game.
SolveLimits coloring_game_limits();
SolveLimits marking_game_limits();

/**
 * Classical coloring game with colors 1..m: Alice first, moves compulsory,
 * any uncolored vertex with any color not on a neighbor. Alice wins iff the
 * whole graph gets colored; Bob wins as soon as a vertex sees all m colors.
 */
bool alice_wins_coloring_game(const Graph& g, int m, const SolveLimits& limits = coloring_game_limits());

// Least m for which Alice wins, searched upward from the chromatic number.
int game_chromatic_number(const Graph& g, const SolveLimits& limits = coloring_game_limits());

// 1 + the optimal maximum back-degree of the marking game, Alice first and minimizing.
int game_coloring_number(const Graph& g, const SolveLimits& limits = marking_game_limits());

}  // namespace indcol
