#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indcol/graph.hpp"

namespace indcol {

enum class Player : std::uint8_t { alice, bob };

constexpr Player other(Player p) { return p == Player::alice ? Player::bob : Player::alice; }

// Who starts the game and each later round:
//   a, b         the same player starts every round;
//   ab, ba       the first round is started by Alice (ab) or Bob (ba), later
//                rounds by the player who did not end the previous one;
//   alice_skip   like ab, and Alice may pass any move.
enum class Variant : std::uint8_t { a, b, ab, ba, alice_skip };

inline constexpr std::array<Variant, 5> kAllVariants{Variant::a, Variant::b, Variant::ab, Variant::ba, Variant::alice_skip};
inline constexpr std::array<Variant, 4> kMainVariants{Variant::a, Variant::b, Variant::ab, Variant::ba};

// Literal tags "A", "B", "AB", "BA", "As".
std::string_view to_string(Variant v);
std::string_view to_string(Player p);
// Case-insensitive; also accepts "alice_skip" / "skip" for As.
Variant parse_variant(std::string_view text);
Player parse_player(std::string_view text);

Player first_mover(Variant v);
// Starter of the next round, given the player to move when the round ended.
Player next_starter(Variant v, Player mover_at_round_end);

struct Move {
  Vertex vertex = -1;

  static Move pass() { return {}; }
  static Move at(Vertex v) { return {v}; }
  bool is_pass() const { return vertex < 0; }
  bool operator==(const Move&) const = default;
};

std::string to_string(Move m);

/**
 * A position of the independence coloring game. Values are immutable;
 * apply_move returns a new state. `protected_set` holds the uncolored
 * vertices adjacent to something chosen in the current round, and `fresh`
 * is true until the first selection of the current round.
 */
class GameState {
 public:
  const std::shared_ptr<const Graph>& graph() const { return graph_; }
  Variant variant() const { return variant_; }
  const VertexSet& uncolored() const { return uncolored_; }
  const VertexSet& protected_set() const { return protected_; }
  Player mover() const { return mover_; }
  bool fresh() const { return fresh_; }
  // Color of the current round (1-based).
  int round() const { return round_; }
  // Rounds in which at least one vertex has been colored.
  int rounds_used() const { return fresh_ ? round_ - 1 : round_; }
  // 0 for uncolored vertices, otherwise the 1-based color.
  int color_of(Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const GameState& other) const;

 private:
  friend GameState initial_state(std::shared_ptr<const Graph>, Variant);
  friend class MoveApplier;

  std::shared_ptr<const Graph> graph_;
  Variant variant_ = Variant::a;
  VertexSet uncolored_;
  VertexSet protected_;
  Player mover_ = Player::alice;
  bool fresh_ = true;
  int round_ = 1;
  std::vector<int> colors_;
};

GameState initial_state(std::shared_ptr<const Graph> g, Variant v);
GameState initial_state(const Graph& g, Variant v);

struct LegalMoves {
  VertexSet vertices;
  bool pass_allowed = false;
};

LegalMoves legal_moves(const GameState& s);

class IllegalMove : public std::logic_error {
 public:
  enum class Reason { game_over, out_of_range, already_colored, protected_vertex, pass_not_allowed };

  IllegalMove(Reason reason, Vertex vertex, std::optional<Vertex> protected_by, const std::string& message)
      : std::logic_error(message), reason_(reason), vertex_(vertex), protected_by_(protected_by) {}

  Reason reason() const { return reason_; }
  Vertex vertex() const { return vertex_; }
  // For protected vertices: a neighbor colored in the current round.
  std::optional<Vertex> protected_by() const { return protected_by_; }

 private:
  Reason reason_;
  Vertex vertex_;
  std::optional<Vertex> protected_by_;
};

std::string_view to_string(IllegalMove::Reason r);

struct TranscriptEntry {
  enum class Action { vertex, pass, round_end };

  std::optional<Player> actor;  // absent for round_end
  Action action = Action::vertex;
  Vertex vertex = -1;
  // Round of the move; for round_end, the round that just closed.
  int round = 0;

  bool operator==(const TranscriptEntry&) const = default;
};

using Transcript = std::vector<TranscriptEntry>;

std::string_view to_string(TranscriptEntry::Action a);

// Applies m, then closes the round while no uncolored vertex is selectable.
// Appends the move and any round end to `log` when given. Throws IllegalMove.
GameState apply_move(const GameState& s, Move m, Transcript* log = nullptr);

bool is_terminal(const GameState& s);

// Per-vertex color (0 = uncolored).
std::vector<int> coloring(const GameState& s);

// Replays a transcript's vertex and pass actions from the initial state.
GameState replay(std::shared_ptr<const Graph> g, Variant v, const Transcript& t);

// One JSON object per line: {"actor":..,"action":..,"vertex":..,"round":..}.
std::string transcript_to_jsonl(const Transcript& t);

}  // namespace indcol
