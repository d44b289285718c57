#include <stdexcept>

#include "indcol/solver.hpp"

namespace indcol {

PlayoutResult play_out(const Graph& g, Variant v, const Strategy& alice, const Strategy& bob) {
  GameState s = initial_state(std::make_shared<const Graph>(g), v);
  PlayoutResult out;
  // Every vertex move can be preceded by at most one pass.
  const std::size_t max_steps = 2 * g.n() + 1;
  std::size_t steps = 0;
  while (!is_terminal(s)) {
    if (++steps > max_steps) throw std::logic_error("playout did not terminate");
    const Move m = s.mover() == Player::alice ? alice(s) : bob(s);
    s = apply_move(s, m, &out.transcript);
  }
  out.rounds = s.rounds_used();
  out.coloring = coloring(s);
  return out;
}

Strategy optimal_strategy(std::shared_ptr<Solver> solver) {
  return [solver](const GameState& s) { return *solver->best_move(s).best_move; };
}

}  // namespace indcol
