#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indcol/game.hpp"
#include "indcol/layout.hpp"
#include "indcol/solver.hpp"

namespace indcol {

enum class HumanRole { alice, bob, observer };

std::string_view to_string(HumanRole r);
HumanRole parse_human_role(std::string_view text);

struct CreateRequest {
  // Exactly one of graph6 / family is non-empty. family uses parse_family syntax.
  std::string graph6;
  std::string family;
  Variant variant = Variant::a;
  HumanRole role = HumanRole::observer;
};

struct StateView {
  std::string id;
  std::uint64_t counter = 0;
  Variant variant = Variant::a;
  HumanRole role = HumanRole::observer;
  std::string graph6;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<Point> layout;
  std::vector<std::string> labels;
  std::vector<int> colors;
  std::vector<Vertex> uncolored;
  std::vector<Vertex> protected_vertices;
  std::vector<Vertex> legal;
  bool pass_allowed = false;
  Player mover = Player::alice;
  bool fresh = true;
  int round = 1;
  int rounds_used = 0;
  bool terminal = false;
  bool human_to_move = false;
  Transcript transcript;
};

// Values below are total rounds of the game under optimal play from then on.
struct EngineReply {
  StateView state;
  int value = 0;
  Move move;
};

struct EvalView {
  std::string id;
  std::uint64_t counter = 0;
  int value = 0;
  std::vector<MoveValue> moves;
};

struct FamilyView {
  std::string name;
  std::string graph6;
  std::vector<Point> layout;
  std::vector<std::string> labels;
};

class ServiceError : public std::runtime_error {
 public:
  enum class Code { bad_request, not_found, out_of_turn, illegal_move, infeasible, stale };

  ServiceError(Code code, const std::string& message) : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }
  int http_status() const;

  std::optional<IllegalMove::Reason> illegal_reason;
  std::optional<Vertex> vertex;
  std::optional<Vertex> protected_by;
  std::optional<Resource> resource;
  std::optional<std::size_t> limit;
  std::optional<std::uint64_t> counter;

 private:
  Code code_;
};

std::string_view to_string(ServiceError::Code c);

struct ServiceOptions {
  SolveLimits limits{24, 2'000'000, std::chrono::milliseconds{10'000}};
  std::chrono::seconds idle_timeout{3600};
  std::uint64_t layout_seed = 1;
  // Injectable for tests; steady_clock::now when empty.
  std::function<std::chrono::steady_clock::time_point()> clock;
};

/**
 * In-memory game sessions. Thread-safe: actions on one session are
 * serialized, different sessions proceed independently. Every mutation
 * bumps the session's action counter; callers may pass the counter they
 * last saw and get a `stale` error if it moved on.
 */
class SessionService {
 public:
  explicit SessionService(ServiceOptions options = {});
  ~SessionService();

  StateView create_session(const CreateRequest& request);
  StateView get_state(const std::string& id);
  StateView submit_move(const std::string& id, Move move, std::optional<std::uint64_t> expected = {});
  EngineReply engine_move(const std::string& id, std::optional<std::uint64_t> expected = {});
  EvalView evaluate_moves(const std::string& id);

  // Drops sessions idle longer than the timeout; returns how many.
  std::size_t expire_idle();
  std::size_t session_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

FamilyView family_view(const std::string& spec, std::uint64_t seed = 1);

// Wire encoding. Field order is fixed.
std::string to_json(const StateView& v);
std::string to_json(const EngineReply& r);
std::string to_json(const EvalView& e);
std::string to_json(const FamilyView& f);
std::string to_json(const ServiceError& e);

// Throw ServiceError(bad_request) on malformed bodies.
CreateRequest parse_create_request(std::string_view body);
struct MoveRequest {
  Move move;
  std::optional<std::uint64_t> expected;
};
MoveRequest parse_move_request(std::string_view body);
// Optional {"counter": n} of an engine request; empty body allowed.
std::optional<std::uint64_t> parse_counter(std::string_view body);

}  // namespace indcol
