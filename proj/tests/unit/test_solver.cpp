#include "doctest.h"
#include "indcol/families.hpp"
#include "indcol/graph6.hpp"
#include "indcol/solver.hpp"
#include "reference.hpp"

using namespace indcol;

namespace {

Graph fam(const std::string& spec) { return generate(parse_family(spec)).graph; }

int idx(Variant v) { return static_cast<int>(v); }

}  // namespace

TEST_CASE("known values") {
  CHECK(solve(fam("path:6"), Variant::a) == 3);
  CHECK(solve(fam("path:6"), Variant::b) == 2);
  CHECK(solve(fam("cycle:6"), Variant::b) == 2);
  CHECK(solve(fam("cycle:6"), Variant::a) == 3);
  for (Variant v : kAllVariants) CHECK(solve(fam("complete:5"), v) == 5);
  CHECK(solve(fam("g1:4"), Variant::a) == 4);
  CHECK(solve(fam("g4:3"), Variant::b) == 3);
  CHECK(solve(fam("tree:2,3"), Variant::alice_skip) >= 3);
}

TEST_CASE("trivial values") {
  for (Variant v : kAllVariants) {
    CHECK(solve(fam("path:2"), v) == 2);
    CHECK(solve(make_graph(5, {}), v) == 1);
    CHECK(solve(Graph{}, v) == 0);
  }
}

TEST_CASE("solve_all_variants") {
  CHECK(solve_all_variants(fam("cycle:4")) == std::array<int, 5>{2, 2, 2, 2, 2});
  const auto ss = solve_all_variants(fam("starsquare:3"));
  CHECK(ss[idx(Variant::a)] == 2);
  CHECK(ss[idx(Variant::ab)] == 2);
  CHECK(ss[idx(Variant::b)] <= 4);
  CHECK(ss[idx(Variant::ba)] <= 4);
}

TEST_CASE("exact values agree with the reference game on random graphs") {
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const auto n = 1 + seed % 8;
    const auto g = random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
    CAPTURE(to_graph6(g));
    const auto values = solve_all_variants(g);
    for (Variant v : kAllVariants) {
      CAPTURE(to_string(v));
      CHECK(values[idx(v)] == ref::IndependenceGame(g, idx(v)).value());
      ++compared;
    }
  }
  CHECK(compared == 2500);
}

TEST_CASE("library oracle agrees with the reference game") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_graph(1 + seed % 7, 0.4, seed);
    for (Variant v : kAllVariants) CHECK(oracle_solve(g, v) == ref::IndependenceGame(g, idx(v)).value());
  }
  CHECK_THROWS_AS(oracle_solve(fam("path:9"), Variant::a), LimitExceeded);
}

TEST_CASE("bounds and orderings on random graphs") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto g = random_graph(4 + seed % 9, 0.35, seed);
    const auto values = solve_all_variants(g);
    const int chi = chromatic_number(g);
    const int upper = static_cast<int>(max_degree(g)) + 1;
    for (Variant v : kMainVariants) {
      CHECK(values[idx(v)] >= chi);
      CHECK(values[idx(v)] <= upper);
    }
    const int as = values[idx(Variant::alice_skip)];
    CHECK(as <= values[idx(Variant::ab)]);
    CHECK(as <= values[idx(Variant::ba)]);
    CHECK(as <= values[idx(Variant::b)]);
    if (has_induced_path(g, 7))
      for (Variant v : kMainVariants) CHECK(values[idx(v)] >= 3);
  }
}

TEST_CASE("determinism") {
  const auto g = random_graph(14, 0.3, 77);
  Solver a(g, Variant::ba);
  Solver b(g, Variant::ba);
  CHECK(a.game_value() == b.game_value());
  CHECK(a.stats().nodes_expanded == b.stats().nodes_expanded);
  const auto s = initial_state(g, Variant::ba);
  CHECK(a.best_move(s).best_move == b.best_move(s).best_move);
}

TEST_CASE("best move on P5 under A") {
  const auto g = std::make_shared<const Graph>(fam("path:5"));
  const auto s = initial_state(g, Variant::a);
  Solver solver(*g, Variant::a);
  const auto values = solver.move_values(s);
  REQUIRE(values.size() == 5);
  CHECK(values[2].move == Move::at(2));
  CHECK(values[2].value == 2);
  for (const auto& mv : values) {
    CHECK(mv.value >= 2);
    CHECK(mv.value <= 3);
    CHECK(mv.value == ref::IndependenceGame(*g, 0).value_after(mv.move.vertex));
  }
  const auto e = solver.best_move(s);
  CHECK(e.value == 2);
  REQUIRE(e.best_move);
  const auto after = apply_move(s, *e.best_move);
  CHECK(after.round() - 1 + solver.remaining(after) == 2);
}

TEST_CASE("forced and near-terminal moves") {
  // K2 after one move: the other vertex, one more round.
  const auto k2 = std::make_shared<const Graph>(fam("path:2"));
  const auto s = apply_move(initial_state(k2, Variant::a), Move::at(0));
  const auto e = best_move(s);
  CHECK(e.best_move == Move::at(1));
  CHECK(e.value == 1);

  // P4 under A: 1 then 3 closes round 1, Alice takes 0 and only 2 is left.
  const auto p4 = std::make_shared<const Graph>(fam("path:4"));
  auto t = apply_move(initial_state(p4, Variant::a), Move::at(1));
  t = apply_move(t, Move::at(3));
  REQUIRE(legal_moves(t).vertices.count() == 2);
  t = apply_move(t, Move::at(0));
  REQUIRE(legal_moves(t).vertices.count() == 1);
  const auto forced = best_move(t);
  CHECK(forced.best_move == Move::at(2));

  const auto done = apply_move(t, Move::at(2));
  CHECK(is_terminal(done));
  CHECK_FALSE(best_move(done).best_move);
  CHECK(best_move(done).value == 0);
}

TEST_CASE("move values match the reference from every child") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = std::make_shared<const Graph>(random_graph(6, 0.45, seed));
    for (Variant v : kAllVariants) {
      Solver solver(*g, v);
      const auto s = initial_state(g, v);
      const int total = solver.game_value();
      int best = s.mover() == Player::alice ? 1 << 20 : -1;
      for (const auto& mv : solver.move_values(s)) {
        const auto child = apply_move(s, mv.move);
        CHECK(mv.value == child.round() - 1 + solver.remaining(child));
        best = s.mover() == Player::alice ? std::min(best, mv.value) : std::max(best, mv.value);
      }
      CHECK(best == total);
    }
  }
}

TEST_CASE("playouts with optimal strategies reach the game value") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_graph(9, 0.3, seed);
    for (Variant v : kAllVariants) {
      auto solver = std::make_shared<Solver>(g, v);
      const int value = solver->game_value();
      const auto strat = optimal_strategy(solver);
      const auto r = play_out(g, v, strat, strat);
      CHECK(r.rounds == value);
      for (auto [a, b] : g.edges()) CHECK(r.coloring[a] != r.coloring[b]);
    }
  }
}

TEST_CASE("limits") {
  SolveLimits small;
  small.max_vertices = 10;
  try {
    solve(fam("path:12"), Variant::a, small);
    FAIL("expected LimitExceeded");
  } catch (const LimitExceeded& e) {
    CHECK(e.resource() == Resource::vertices);
    CHECK(e.limit() == 10);
  }
  SolveLimits few;
  few.max_states = 5;
  CHECK_THROWS_AS(solve(random_graph(16, 0.2, 3), Variant::b, few), LimitExceeded);
  SolveLimits huge;
  huge.max_vertices = 200;
  CHECK_THROWS_AS(solve(fam("path:70"), Variant::a, huge), LimitExceeded);
}

TEST_CASE("solver rejects states from other games") {
  Solver solver(fam("path:4"), Variant::a);
  CHECK_THROWS_AS(solver.best_move(initial_state(fam("path:4"), Variant::b)), std::invalid_argument);
  CHECK_THROWS_AS(solver.best_move(initial_state(fam("path:5"), Variant::a)), std::invalid_argument);
}
