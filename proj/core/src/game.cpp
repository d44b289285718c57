#include "indcol/game.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace indcol {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::a: return "A";
    case Variant::b: return "B";
    case Variant::ab: return "AB";
    case Variant::ba: return "BA";
    case Variant::alice_skip: return "As";
  }
  return "?";
}

std::string_view to_string(Player p) { return p == Player::alice ? "alice" : "bob"; }

namespace {

std::string lowered(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Variant parse_variant(std::string_view text) {
  const auto s = lowered(text);
  if (s == "a") return Variant::a;
  if (s == "b") return Variant::b;
  if (s == "ab") return Variant::ab;
  if (s == "ba") return Variant::ba;
  if (s == "as" || s == "alice_skip" || s == "aliceskip" || s == "skip") return Variant::alice_skip;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

Player parse_player(std::string_view text) {
  const auto s = lowered(text);
  if (s == "alice" || s == "a") return Player::alice;
  if (s == "bob" || s == "b") return Player::bob;
  throw std::invalid_argument("unknown player '" + std::string(text) + "'");
}

Player first_mover(Variant v) {
  return (v == Variant::b || v == Variant::ba) ? Player::bob : Player::alice;
}

Player next_starter(Variant v, Player mover_at_round_end) {
  switch (v) {
    case Variant::a: return Player::alice;
    case Variant::b: return Player::bob;
    default: return mover_at_round_end;
  }
}

std::string to_string(Move m) { return m.is_pass() ? "pass" : std::to_string(m.vertex); }

std::string_view to_string(IllegalMove::Reason r) {
  switch (r) {
    case IllegalMove::Reason::game_over: return "game_over";
    case IllegalMove::Reason::out_of_range: return "out_of_range";
    case IllegalMove::Reason::already_colored: return "already_colored";
    case IllegalMove::Reason::protected_vertex: return "protected";
    case IllegalMove::Reason::pass_not_allowed: return "pass_not_allowed";
  }
  return "?";
}

std::string_view to_string(TranscriptEntry::Action a) {
  switch (a) {
    case TranscriptEntry::Action::vertex: return "vertex";
    case TranscriptEntry::Action::pass: return "pass";
    case TranscriptEntry::Action::round_end: return "round_end";
  }
  return "?";
}

bool GameState::operator==(const GameState& o) const {
  return *graph_ == *o.graph_ && variant_ == o.variant_ && uncolored_ == o.uncolored_ && protected_ == o.protected_ &&
         mover_ == o.mover_ && fresh_ == o.fresh_ && round_ == o.round_ && colors_ == o.colors_;
}

GameState initial_state(std::shared_ptr<const Graph> g, Variant v) {
  GameState s;
  const std::size_t n = g->n();
  s.graph_ = std::move(g);
  s.variant_ = v;
  s.uncolored_ = VertexSet::full(n);
  s.protected_ = VertexSet(n);
  s.mover_ = first_mover(v);
  s.fresh_ = true;
  s.round_ = 1;
  s.colors_.assign(n, 0);
  return s;
}

GameState initial_state(const Graph& g, Variant v) { return initial_state(std::make_shared<const Graph>(g), v); }

LegalMoves legal_moves(const GameState& s) {
  LegalMoves out{s.uncolored() - s.protected_set(), false};
  out.pass_allowed = s.variant() == Variant::alice_skip && s.mover() == Player::alice && out.vertices.any();
  return out;
}

bool is_terminal(const GameState& s) { return s.uncolored().empty(); }

std::vector<int> coloring(const GameState& s) { return s.colors(); }

class MoveApplier {
 public:
  static GameState apply(const GameState& s, Move m, Transcript* log) {
    const Graph& g = *s.graph_;
    if (is_terminal(s)) throw IllegalMove(IllegalMove::Reason::game_over, m.vertex, std::nullopt, "the game is over");
    GameState next = s;
    if (m.is_pass()) {
      if (!legal_moves(s).pass_allowed)
        throw IllegalMove(IllegalMove::Reason::pass_not_allowed, -1, std::nullopt,
                          std::string(to_string(s.mover_)) + " may not pass here");
      next.mover_ = Player::bob;
      if (log) log->push_back({s.mover_, TranscriptEntry::Action::pass, -1, s.round_});
    } else {
      const Vertex v = m.vertex;
      if (v < 0 || static_cast<std::size_t>(v) >= g.n())
        throw IllegalMove(IllegalMove::Reason::out_of_range, v, std::nullopt,
                          "vertex " + std::to_string(v) + " does not exist");
      if (!s.uncolored_.test(v))
        throw IllegalMove(IllegalMove::Reason::already_colored, v, std::nullopt,
                          "vertex " + std::to_string(v) + " is already colored");
      if (s.protected_.test(v)) {
        Vertex by = -1;
        for (Vertex w : g.neighbors(v))
          if (s.colors_[static_cast<std::size_t>(w)] == s.round_) {
            by = w;
            break;
          }
        throw IllegalMove(IllegalMove::Reason::protected_vertex, v, by,
                          "vertex " + std::to_string(v) + " is protected by neighbor " + std::to_string(by));
      }
      next.uncolored_.reset(v);
      next.protected_ |= g.neighbors(v);
      next.protected_ &= next.uncolored_;
      next.colors_[static_cast<std::size_t>(v)] = s.round_;
      next.mover_ = other(s.mover_);
      next.fresh_ = false;
      if (log) log->push_back({s.mover_, TranscriptEntry::Action::vertex, v, s.round_});
    }
    // The round closes as soon as nothing uncolored is selectable.
    while (!next.fresh_ && next.uncolored_.any() && next.uncolored_.is_subset_of(next.protected_)) {
      if (log) log->push_back({std::nullopt, TranscriptEntry::Action::round_end, -1, next.round_});
      next.protected_.clear();
      next.fresh_ = true;
      ++next.round_;
      next.mover_ = next_starter(next.variant_, next.mover_);
    }
    return next;
  }
};

GameState apply_move(const GameState& s, Move m, Transcript* log) { return MoveApplier::apply(s, m, log); }

GameState replay(std::shared_ptr<const Graph> g, Variant v, const Transcript& t) {
  GameState s = initial_state(std::move(g), v);
  for (const auto& e : t) {
    if (e.action == TranscriptEntry::Action::round_end) continue;
    s = apply_move(s, e.action == TranscriptEntry::Action::pass ? Move::pass() : Move::at(e.vertex));
  }
  return s;
}

std::string transcript_to_jsonl(const Transcript& t) {
  std::string out;
  for (const auto& e : t) {
    nlohmann::ordered_json j;
    j["actor"] = e.actor ? nlohmann::ordered_json(std::string(to_string(*e.actor))) : nlohmann::ordered_json(nullptr);
    j["action"] = std::string(to_string(e.action));
    j["vertex"] = e.action == TranscriptEntry::Action::vertex ? nlohmann::ordered_json(e.vertex) : nlohmann::ordered_json(nullptr);
    j["round"] = e.round;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace indcol
