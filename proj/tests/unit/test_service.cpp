#include <thread>

#include "doctest.h"
#include "indcol/service.hpp"
#include "json.hpp"

using namespace indcol;
using json = nlohmann::json;

namespace {

CreateRequest family(const std::string& spec, Variant v, HumanRole role = HumanRole::observer) {
  CreateRequest r;
  r.family = spec;
  r.variant = v;
  r.role = role;
  return r;
}

ServiceError::Code code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ServiceError& e) {
    return e.code();
  }
  FAIL("expected ServiceError");
  return ServiceError::Code::bad_request;
}

}  // namespace

TEST_CASE("creating sessions") {
  SessionService svc;
  const auto p6 = svc.create_session(family("path:6", Variant::a, HumanRole::alice));
  CHECK(p6.mover == Player::alice);
  CHECK(p6.human_to_move);
  CHECK(p6.n == 6);
  CHECK(p6.id.size() == 32);
  CHECK(p6.counter == 0);

  CreateRequest k3;
  k3.graph6 = "Bw";
  k3.variant = Variant::ba;
  k3.role = HumanRole::bob;
  const auto s = svc.create_session(k3);
  CHECK(s.n == 3);
  CHECK(s.edges.size() == 3);
  CHECK(s.mover == Player::bob);
  CHECK(s.id != p6.id);
  CHECK(svc.session_count() == 2);

  const auto p4 = svc.create_session(family("path:4", Variant::a));
  CHECK(p4.uncolored.size() == 4);
  CHECK(p4.legal.size() == 4);
  CHECK(p4.layout.size() == 4);
}

TEST_CASE("bad create requests") {
  SessionService svc;
  CHECK(code_of([&] { svc.create_session(CreateRequest{}); }) == ServiceError::Code::bad_request);
  CreateRequest bad;
  bad.graph6 = "B!";
  CHECK(code_of([&] { svc.create_session(bad); }) == ServiceError::Code::bad_request);
  CHECK(code_of([&] { svc.create_session(family("treegk:5", Variant::a)); }) == ServiceError::Code::bad_request);
  CHECK(code_of([&] { svc.get_state("ffff"); }) == ServiceError::Code::not_found);
}

TEST_CASE("round end is applied before the state is shown") {
  SessionService svc;
  const auto s = svc.create_session(family("path:3", Variant::a));
  const auto t = svc.submit_move(s.id, Move::at(1));
  CHECK(t.round == 2);
  CHECK(t.legal.size() == 2);
  CHECK(t.counter == 1);
}

TEST_CASE("evaluation on P5") {
  SessionService svc;
  const auto s = svc.create_session(family("path:5", Variant::a));
  const auto e = svc.evaluate_moves(s.id);
  CHECK(e.value == 2);
  REQUIRE(e.moves.size() == 5);
  CHECK(e.moves[2].value == 2);
  for (const auto& mv : e.moves) {
    CHECK(mv.value >= 2);
    CHECK(mv.value <= 3);
  }
}

TEST_CASE("engine moves") {
  SessionService svc;
  const auto s = svc.create_session(family("path:4", Variant::a, HumanRole::alice));
  CHECK(code_of([&] { svc.engine_move(s.id); }) == ServiceError::Code::out_of_turn);
  svc.submit_move(s.id, Move::at(1));
  // Only vertex 3 is selectable for Bob.
  const auto r = svc.engine_move(s.id);
  CHECK(r.move == Move::at(3));
  CHECK(r.state.counter == 2);
  CHECK(r.value == 2);
  CHECK(code_of([&] { svc.engine_move(s.id); }) == ServiceError::Code::out_of_turn);
}

TEST_CASE("human moves out of turn are rejected") {
  SessionService svc;
  const auto s = svc.create_session(family("cycle:6", Variant::b, HumanRole::alice));
  CHECK(s.mover == Player::bob);
  CHECK_FALSE(s.human_to_move);
  CHECK(code_of([&] { svc.submit_move(s.id, Move::at(0)); }) == ServiceError::Code::out_of_turn);
}

TEST_CASE("illegal moves carry the protecting neighbor") {
  SessionService svc;
  const auto s = svc.create_session(family("path:4", Variant::a));
  svc.submit_move(s.id, Move::at(1));
  try {
    svc.submit_move(s.id, Move::at(2));
    FAIL("expected an error");
  } catch (const ServiceError& e) {
    CHECK(e.code() == ServiceError::Code::illegal_move);
    CHECK(e.http_status() == 422);
    CHECK(e.illegal_reason == IllegalMove::Reason::protected_vertex);
    CHECK(e.protected_by == 1);
    const auto j = json::parse(to_json(e));
    CHECK(j["error"] == "illegal_move");
    CHECK(j["reason"] == "protected");
    CHECK(j["protectedBy"] == 1);
  }
  CHECK(svc.get_state(s.id).counter == 1);
}

TEST_CASE("stale counters") {
  SessionService svc;
  const auto s = svc.create_session(family("path:5", Variant::a));
  svc.submit_move(s.id, Move::at(2), 0);
  try {
    svc.submit_move(s.id, Move::at(0), 0);
    FAIL("expected stale");
  } catch (const ServiceError& e) {
    CHECK(e.code() == ServiceError::Code::stale);
    CHECK(e.http_status() == 409);
    CHECK(e.counter == 1);
  }
  CHECK(svc.submit_move(s.id, Move::at(0), 1).counter == 2);
}

TEST_CASE("terminal sessions") {
  SessionService svc;
  const auto s = svc.create_session(family("path:2", Variant::a));
  svc.submit_move(s.id, Move::at(0));
  const auto t = svc.submit_move(s.id, Move::at(1));
  CHECK(t.terminal);
  CHECK(t.rounds_used == 2);
  const auto e = svc.evaluate_moves(s.id);
  CHECK(e.moves.empty());
  CHECK(e.value == 2);
  CHECK(code_of([&] { svc.engine_move(s.id); }) == ServiceError::Code::illegal_move);
}

TEST_CASE("large graphs are playable but not solvable") {
  SessionService svc;
  const auto s = svc.create_session(family("g3:2", Variant::a));
  CHECK(s.n == 289);
  try {
    svc.evaluate_moves(s.id);
    FAIL("expected infeasible");
  } catch (const ServiceError& e) {
    CHECK(e.code() == ServiceError::Code::infeasible);
    CHECK(std::string(e.what()).find("exact solve infeasible") != std::string::npos);
    CHECK(e.resource == Resource::vertices);
  }
  CHECK(svc.submit_move(s.id, Move::at(0)).counter == 1);
}

TEST_CASE("idle sessions expire") {
  auto now = std::chrono::steady_clock::time_point{} + std::chrono::hours(10);
  ServiceOptions opt;
  opt.idle_timeout = std::chrono::seconds(60);
  opt.clock = [&] { return now; };
  SessionService svc(opt);
  const auto a = svc.create_session(family("path:3", Variant::a));
  now += std::chrono::seconds(30);
  const auto b = svc.create_session(family("path:3", Variant::a));
  now += std::chrono::seconds(40);
  CHECK(svc.expire_idle() == 1);
  CHECK(code_of([&] { svc.get_state(a.id); }) == ServiceError::Code::not_found);
  svc.get_state(b.id);
  now += std::chrono::seconds(59);
  CHECK(svc.expire_idle() == 0);
  now += std::chrono::seconds(2);
  CHECK(svc.expire_idle() == 1);
  CHECK(svc.session_count() == 0);
}

TEST_CASE("concurrent sessions") {
  SessionService svc;
  std::vector<std::thread> threads;
  std::atomic<int> finished{0};
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&] {
      const auto s = svc.create_session(family("cycle:7", Variant::ab));
      auto st = s;
      while (!st.terminal) st = svc.engine_move(s.id).state;
      if (st.rounds_used == 3) ++finished;
    });
  for (auto& t : threads) t.join();
  CHECK(finished == 4);
}

TEST_CASE("wire encoding") {
  SessionService svc;
  const auto s = svc.create_session(family("path:3", Variant::alice_skip, HumanRole::alice));
  const auto j = json::parse(to_json(s));
  const std::vector<std::string> keys{"id",     "counter",  "variant",   "humanRole",  "graph6", "n",
                                      "edges",  "layout",   "labels",    "colors",     "uncolored",
                                      "protected", "legal", "passAllowed", "mover",    "fresh",  "round",
                                      "roundsUsed", "terminal", "humanToMove", "transcript"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  std::sort(got.begin(), got.end());
  auto want = keys;
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(j["variant"] == "As");
  CHECK(j["passAllowed"] == true);
  CHECK(j["mover"] == "alice");

  const auto t = json::parse(to_json(svc.submit_move(s.id, Move::pass())));
  CHECK(t["transcript"][0]["action"] == "pass");

  const auto e = json::parse(to_json(svc.evaluate_moves(s.id)));
  CHECK(e["counter"] == 1);
  CHECK(e["moves"].is_array());
  CHECK(e["moves"][0].contains("move"));

  const auto f = json::parse(to_json(family_view("g4:2")));
  CHECK(f["graph6"].is_string());
  CHECK(f["layout"].size() == 6);
}

TEST_CASE("request parsing") {
  const auto c = parse_create_request(R"({"family":"cycle:6","variant":"B","humanRole":"alice"})");
  CHECK(c.family == "cycle:6");
  CHECK(c.variant == Variant::b);
  CHECK(c.role == HumanRole::alice);
  CHECK(parse_move_request(R"({"vertex":3})").move == Move::at(3));
  CHECK(parse_move_request(R"({"pass":true,"counter":4})").expected == 4u);
  CHECK_FALSE(parse_counter(""));
  CHECK(parse_counter(R"({"counter":2})") == 2u);
  CHECK_THROWS_AS(parse_move_request(R"({"vertex":1,"pass":true})"), ServiceError);
  CHECK_THROWS_AS(parse_move_request(R"({})"), ServiceError);
  CHECK_THROWS_AS(parse_move_request("not json"), ServiceError);
  CHECK_THROWS_AS(parse_create_request(R"({"variant":"Z"})"), ServiceError);
}
