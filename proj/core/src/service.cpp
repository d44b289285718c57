#include "indcol/service.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>

#include "indcol/families.hpp"
#include "indcol/graph6.hpp"
#include "json.hpp"

namespace indcol {

using json = nlohmann::ordered_json;

std::string_view to_string(HumanRole r) {
  switch (r) {
    case HumanRole::alice: return "alice";
    case HumanRole::bob: return "bob";
    case HumanRole::observer: return "observer";
  }
  return "?";
}

HumanRole parse_human_role(std::string_view text) {
  if (text == "alice" || text == "Alice") return HumanRole::alice;
  if (text == "bob" || text == "Bob") return HumanRole::bob;
  if (text == "observer" || text == "Observer" || text == "none") return HumanRole::observer;
  throw std::invalid_argument("unknown role '" + std::string(text) + "'");
}

std::string_view to_string(ServiceError::Code c) {
  switch (c) {
    case ServiceError::Code::bad_request: return "bad_request";
    case ServiceError::Code::not_found: return "not_found";
    case ServiceError::Code::out_of_turn: return "out_of_turn";
    case ServiceError::Code::illegal_move: return "illegal_move";
    case ServiceError::Code::infeasible: return "infeasible";
    case ServiceError::Code::stale: return "stale";
  }
  return "?";
}

int ServiceError::http_status() const {
  switch (code_) {
    case Code::bad_request: return 400;
    case Code::not_found: return 404;
    case Code::out_of_turn: return 409;
    case Code::stale: return 409;
    case Code::illegal_move: return 422;
    case Code::infeasible: return 422;
  }
  return 500;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Session {
  std::string id;
  Variant variant = Variant::a;
  HumanRole role = HumanRole::observer;
  std::shared_ptr<const Graph> graph;
  std::string graph6;
  std::vector<Point> layout;
  std::vector<std::string> labels;
  GameState state;
  Transcript transcript;
  std::uint64_t counter = 0;
  std::shared_ptr<Solver> solver;
  std::atomic<Clock::rep> last_access{0};
  std::shared_mutex mu;
};

ServiceError infeasible(const LimitExceeded& e) {
  ServiceError err(ServiceError::Code::infeasible, std::string("exact solve infeasible: ") + e.what());
  err.resource = e.resource();
  err.limit = e.limit();
  return err;
}

bool human_owns(HumanRole role, Player p) {
  return (role == HumanRole::alice && p == Player::alice) || (role == HumanRole::bob && p == Player::bob);
}

StateView view_of(const Session& s) {
  StateView v;
  v.id = s.id;
  v.counter = s.counter;
  v.variant = s.variant;
  v.role = s.role;
  v.graph6 = s.graph6;
  v.n = s.graph->n();
  v.edges = s.graph->edges();
  v.layout = s.layout;
  v.labels = s.labels;
  v.colors = s.state.colors();
  v.uncolored = s.state.uncolored().to_vector();
  v.protected_vertices = s.state.protected_set().to_vector();
  v.terminal = is_terminal(s.state);
  if (!v.terminal) {
    const auto legal = legal_moves(s.state);
    v.legal = legal.vertices.to_vector();
    v.pass_allowed = legal.pass_allowed;
  }
  v.mover = s.state.mover();
  v.fresh = s.state.fresh();
  v.round = s.state.round();
  v.rounds_used = s.state.rounds_used();
  v.human_to_move = !v.terminal && human_owns(s.role, v.mover);
  v.transcript = s.transcript;
  return v;
}

json move_json(Move m) {
  json j;
  if (m.is_pass()) {
    j["pass"] = true;
  } else {
    j["vertex"] = m.vertex;
  }
  return j;
}

json transcript_json(const Transcript& t) {
  json arr = json::array();
  for (const auto& e : t) {
    json j;
    j["actor"] = e.actor ? json(std::string(to_string(*e.actor))) : json(nullptr);
    j["action"] = std::string(to_string(e.action));
    j["vertex"] = e.action == TranscriptEntry::Action::vertex ? json(e.vertex) : json(nullptr);
    j["round"] = e.round;
    arr.push_back(std::move(j));
  }
  return arr;
}

json layout_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (auto p : pts) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

json state_json(const StateView& v) {
  json j;
  j["id"] = v.id;
  j["counter"] = v.counter;
  j["variant"] = std::string(to_string(v.variant));
  j["humanRole"] = std::string(to_string(v.role));
  j["graph6"] = v.graph6;
  j["n"] = v.n;
  json edges = json::array();
  for (auto [a, b] : v.edges) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  j["layout"] = layout_json(v.layout);
  j["labels"] = v.labels;
  j["colors"] = v.colors;
  j["uncolored"] = v.uncolored;
  j["protected"] = v.protected_vertices;
  j["legal"] = v.legal;
  j["passAllowed"] = v.pass_allowed;
  j["mover"] = std::string(to_string(v.mover));
  j["fresh"] = v.fresh;
  j["round"] = v.round;
  j["roundsUsed"] = v.rounds_used;
  j["terminal"] = v.terminal;
  j["humanToMove"] = v.human_to_move;
  j["transcript"] = transcript_json(v.transcript);
  return j;
}

json parse_body(std::string_view body) {
  if (body.empty()) return json::object();
  try {
    auto j = json::parse(body);
    if (!j.is_object()) throw ServiceError(ServiceError::Code::bad_request, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

struct SessionService::Impl {
  ServiceOptions options;
  mutable std::shared_mutex map_mu;
  std::map<std::string, std::shared_ptr<Session>> sessions;
  std::mutex rng_mu;
  std::mt19937_64 rng{std::random_device{}()};

  Clock::time_point now() const { return options.clock ? options.clock() : Clock::now(); }

  std::string fresh_id() {
    std::lock_guard lock(rng_mu);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 2; ++i) {
      std::uint64_t x = rng();
      for (int k = 0; k < 16; ++k, x >>= 4) id += kHex[x & 15];
    }
    return id;
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::shared_lock lock(map_mu);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw ServiceError(ServiceError::Code::not_found, "unknown session '" + id + "'");
    it->second->last_access = now().time_since_epoch().count();
    return it->second;
  }

  static void check_counter(const Session& s, std::optional<std::uint64_t> expected) {
    if (expected && *expected != s.counter) {
      ServiceError err(ServiceError::Code::stale, "action counter is " + std::to_string(s.counter) +
                                                      ", request expected " + std::to_string(*expected));
      err.counter = s.counter;
      throw err;
    }
  }

  Solver& solver_for(Session& s) {
    if (!s.solver) {
      try {
        s.solver = std::make_shared<Solver>(*s.graph, s.variant, options.limits);
      } catch (const LimitExceeded& e) {
        throw infeasible(e);
      }
    }
    return *s.solver;
  }
};

SessionService::SessionService(ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
}

SessionService::~SessionService() = default;

StateView SessionService::create_session(const CreateRequest& request) {
  if (request.graph6.empty() == request.family.empty())
    throw ServiceError(ServiceError::Code::bad_request, "give exactly one of graph6 and family");
  auto s = std::make_shared<Session>();
  try {
    if (!request.graph6.empty()) {
      s->graph = std::make_shared<const Graph>(from_graph6(request.graph6));
    } else {
      auto gen = generate(parse_family(request.family));
      s->labels = std::move(gen.labels);
      s->graph = std::make_shared<const Graph>(std::move(gen.graph));
    }
  } catch (const LimitExceeded& e) {
    ServiceError err(ServiceError::Code::bad_request, std::string("capacity exceeded: ") + e.what());
    err.resource = e.resource();
    err.limit = e.limit();
    throw err;
  } catch (const ParseError& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("bad graph6: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("bad family: ") + e.what());
  }
  s->variant = request.variant;
  s->role = request.role;
  s->graph6 = to_graph6(*s->graph);
  s->layout = layout(*s->graph, impl_->options.layout_seed);
  s->state = initial_state(s->graph, s->variant);
  s->last_access = impl_->now().time_since_epoch().count();
  expire_idle();
  std::unique_lock lock(impl_->map_mu);
  do {
    s->id = impl_->fresh_id();
  } while (impl_->sessions.count(s->id));
  impl_->sessions.emplace(s->id, s);
  return view_of(*s);
}

StateView SessionService::get_state(const std::string& id) {
  auto s = impl_->find(id);
  std::shared_lock lock(s->mu);
  return view_of(*s);
}

StateView SessionService::submit_move(const std::string& id, Move move, std::optional<std::uint64_t> expected) {
  auto s = impl_->find(id);
  std::unique_lock lock(s->mu);
  Impl::check_counter(*s, expected);
  if (!is_terminal(s->state) && s->role != HumanRole::observer && !human_owns(s->role, s->state.mover()))
    throw ServiceError(ServiceError::Code::out_of_turn,
                       "it is the engine's turn (" + std::string(to_string(s->state.mover())) + ")");
  try {
    s->state = apply_move(s->state, move, &s->transcript);
  } catch (const IllegalMove& e) {
    ServiceError err(ServiceError::Code::illegal_move, e.what());
    err.illegal_reason = e.reason();
    if (e.vertex() >= 0) err.vertex = e.vertex();
    err.protected_by = e.protected_by();
    err.counter = s->counter;
    throw err;
  }
  ++s->counter;
  return view_of(*s);
}

EngineReply SessionService::engine_move(const std::string& id, std::optional<std::uint64_t> expected) {
  auto s = impl_->find(id);
  std::unique_lock lock(s->mu);
  Impl::check_counter(*s, expected);
  if (is_terminal(s->state)) {
    ServiceError err(ServiceError::Code::illegal_move, "the game is over");
    err.illegal_reason = IllegalMove::Reason::game_over;
    err.counter = s->counter;
    throw err;
  }
  if (human_owns(s->role, s->state.mover()))
    throw ServiceError(ServiceError::Code::out_of_turn, "it is the human player's turn");
  Evaluation eval;
  try {
    eval = impl_->solver_for(*s).best_move(s->state);
  } catch (const LimitExceeded& e) {
    throw infeasible(e);
  }
  const int total = s->state.round() - 1 + eval.value;
  s->state = apply_move(s->state, *eval.best_move, &s->transcript);
  ++s->counter;
  return {view_of(*s), total, *eval.best_move};
}

EvalView SessionService::evaluate_moves(const std::string& id) {
  auto s = impl_->find(id);
  std::unique_lock lock(s->mu);
  EvalView out;
  out.id = s->id;
  out.counter = s->counter;
  if (is_terminal(s->state)) {
    out.value = s->state.rounds_used();
    return out;
  }
  try {
    Solver& solver = impl_->solver_for(*s);
    const int base = s->state.round() - 1;
    out.value = base + solver.remaining(s->state);
    out.moves = solver.move_values(s->state);
    for (auto& mv : out.moves) mv.value += base;
  } catch (const LimitExceeded& e) {
    throw infeasible(e);
  }
  return out;
}

std::size_t SessionService::expire_idle() {
  const auto cutoff = (impl_->now() - impl_->options.idle_timeout).time_since_epoch().count();
  std::unique_lock lock(impl_->map_mu);
  return std::erase_if(impl_->sessions, [&](const auto& kv) { return kv.second->last_access.load() < cutoff; });
}

std::size_t SessionService::session_count() const {
  std::shared_lock lock(impl_->map_mu);
  return impl_->sessions.size();
}

FamilyView family_view(const std::string& spec, std::uint64_t seed) {
  try {
    const auto fam = parse_family(spec);
    auto gen = generate(fam);
    return {family_name(fam), to_graph6(gen.graph), layout(gen.graph, seed), std::move(gen.labels)};
  } catch (const LimitExceeded& e) {
    ServiceError err(ServiceError::Code::bad_request, std::string("capacity exceeded: ") + e.what());
    err.resource = e.resource();
    err.limit = e.limit();
    throw err;
  } catch (const std::invalid_argument& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("bad family: ") + e.what());
  }
}

std::string to_json(const StateView& v) { return state_json(v).dump(); }

std::string to_json(const EngineReply& r) {
  json j;
  j["counter"] = r.state.counter;
  j["state"] = state_json(r.state);
  j["value"] = r.value;
  j["move"] = move_json(r.move);
  return j.dump();
}

std::string to_json(const EvalView& e) {
  json j;
  j["id"] = e.id;
  j["counter"] = e.counter;
  j["value"] = e.value;
  json moves = json::array();
  for (const auto& mv : e.moves) {
    json m;
    m["move"] = move_json(mv.move);
    m["value"] = mv.value;
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  return j.dump();
}

std::string to_json(const FamilyView& f) {
  json j;
  j["name"] = f.name;
  j["graph6"] = f.graph6;
  j["layout"] = layout_json(f.layout);
  j["labels"] = f.labels;
  return j.dump();
}

std::string to_json(const ServiceError& e) {
  json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  if (e.illegal_reason) j["reason"] = std::string(to_string(*e.illegal_reason));
  if (e.vertex) j["vertex"] = *e.vertex;
  if (e.protected_by) j["protectedBy"] = *e.protected_by;
  if (e.resource) j["resource"] = to_string(*e.resource);
  if (e.limit) j["limit"] = *e.limit;
  if (e.counter) j["counter"] = *e.counter;
  return j.dump();
}

CreateRequest parse_create_request(std::string_view body) {
  const json j = parse_body(body);
  CreateRequest r;
  try {
    if (j.contains("graph6")) r.graph6 = j.at("graph6").get<std::string>();
    if (j.contains("family")) r.family = j.at("family").get<std::string>();
    if (j.contains("variant")) r.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("humanRole")) r.role = parse_human_role(j.at("humanRole").get<std::string>());
  } catch (const json::exception& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("bad field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ServiceError(ServiceError::Code::bad_request, e.what());
  }
  return r;
}

MoveRequest parse_move_request(std::string_view body) {
  const json j = parse_body(body);
  MoveRequest r;
  try {
    const bool pass = j.contains("pass") && j.at("pass").get<bool>();
    const bool vertex = j.contains("vertex");
    if (pass == vertex) throw ServiceError(ServiceError::Code::bad_request, "give either vertex or pass:true");
    r.move = pass ? Move::pass() : Move::at(j.at("vertex").get<int>());
    if (vertex && r.move.vertex < 0) throw ServiceError(ServiceError::Code::bad_request, "vertex must be non-negative");
    if (j.contains("counter")) r.expected = j.at("counter").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("bad field: ") + e.what());
  }
  return r;
}

std::optional<std::uint64_t> parse_counter(std::string_view body) {
  const json j = parse_body(body);
  try {
    if (j.contains("counter")) return j.at("counter").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ServiceError(ServiceError::Code::bad_request, std::string("bad field: ") + e.what());
  }
  return std::nullopt;
}

}  // namespace indcol
