// indcol: command line front end for the independence coloring game solvers.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "indcol/classic.hpp"
#include "indcol/corpus.hpp"
#include "indcol/families.hpp"
#include "indcol/graph6.hpp"
#include "indcol/http_server.hpp"
#include "indcol/service.hpp"
#include "indcol/solver.hpp"
#include "indcol/verify.hpp"
#include "json.hpp"

using namespace indcol;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::size_t limit_vertices = SolveLimits{}.max_vertices;
  std::size_t limit_states = SolveLimits{}.max_states;
  long long time_budget_ms = 0;
  std::string format = "human";
  unsigned workers = 1;

  bool records() const { return format == "records"; }
  SolveLimits limits() const {
    return {limit_vertices, limit_states, std::chrono::milliseconds{time_budget_ms}};
  }
};

struct GraphInput {
  std::vector<std::string> positional;
  std::vector<std::string> graph6;
  std::string file;
  std::string family;

  void add_options(CLI::App* app) {
    app->add_option("graphs", positional, "graph6 strings (stdin when no input is given)");
    app->add_option("--graph6,-g", graph6, "graph6 string");
    app->add_option("--file,-f", file, "file with one graph6 per line");
    app->add_option("--family", family, "family spec, e.g. path:6, g4:3, tree:2,3");
  }

  std::vector<CorpusEntry> load() const {
    std::vector<CorpusEntry> out;
    for (const auto& s : positional) out.push_back({s, from_graph6(s)});
    for (const auto& s : graph6) out.push_back({s, from_graph6(s)});
    if (!file.empty()) {
      auto more = read_corpus(std::filesystem::path(file));
      out.insert(out.end(), more.begin(), more.end());
    }
    if (!family.empty()) {
      auto g = generate(parse_family(family)).graph;
      out.push_back({to_graph6(g), std::move(g)});
    }
    if (positional.empty() && graph6.empty() && file.empty() && family.empty()) out = read_corpus(std::cin);
    return out;
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Variant> variants_from(const std::vector<std::string>& names) {
  std::vector<Variant> out;
  for (const auto& n : names) {
    if (n == "all") {
      out.insert(out.end(), kAllVariants.begin(), kAllVariants.end());
    } else if (n == "main") {
      out.insert(out.end(), kMainVariants.begin(), kMainVariants.end());
    } else {
      out.push_back(parse_variant(n));
    }
  }
  return out;
}

int run_solve(const Globals& g, const GraphInput& in, const std::vector<std::string>& variant_names) {
  const auto variants = variants_from(variant_names);
  int status = 0;
  for (const auto& e : in.load()) {
    std::ostringstream row;
    row << std::left << std::setw(12) << e.graph6;
    for (Variant v : variants) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        Solver solver(e.graph, v, g.limits());
        const int value = solver.game_value();
        if (g.records()) {
          json j;
          j["graph6"] = e.graph6;
          j["variant"] = std::string(to_string(v));
          j["value"] = value;
          j["nodes_expanded"] = solver.stats().nodes_expanded;
          j["elapsed_ms"] = ms_since(t0);
          std::cout << j.dump() << "\n";
        } else {
          row << " " << to_string(v) << "=" << value;
        }
      } catch (const LimitExceeded& ex) {
        status = 1;
        if (g.records()) {
          json j;
          j["graph6"] = e.graph6;
          j["variant"] = std::string(to_string(v));
          j["error"] = "limit_exceeded";
          j["resource"] = to_string(ex.resource());
          j["limit"] = ex.limit();
          std::cout << j.dump() << "\n";
        } else {
          row << " " << to_string(v) << "=? (" << ex.what() << ")";
        }
      }
    }
    if (!g.records()) std::cout << row.str() << "\n";
  }
  return status;
}

int run_classic(const Globals& g, const GraphInput& in, const std::string& game) {
  if (game != "chig" && game != "colg") throw CLI::ValidationError("--game", "expected chig or colg");
  int status = 0;
  for (const auto& e : in.load()) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveLimits limits = game == "chig" ? coloring_game_limits() : marking_game_limits();
    limits.max_states = g.limit_states;
    limits.time_budget = std::chrono::milliseconds{g.time_budget_ms};
    if (g.limit_vertices != SolveLimits{}.max_vertices) limits.max_vertices = g.limit_vertices;
    json j;
    j["graph6"] = e.graph6;
    j["game"] = game;
    try {
      const int value = game == "chig" ? game_chromatic_number(e.graph, limits) : game_coloring_number(e.graph, limits);
      j["value"] = value;
      j["elapsed_ms"] = ms_since(t0);
      if (g.records()) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << std::left << std::setw(12) << e.graph6 << " " << (game == "chig" ? "chi_g" : "col_g") << "="
                  << value << "\n";
      }
    } catch (const LimitExceeded& ex) {
      status = 1;
      j["error"] = "limit_exceeded";
      j["resource"] = to_string(ex.resource());
      j["limit"] = ex.limit();
      if (g.records()) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << std::left << std::setw(12) << e.graph6 << " ? (" << ex.what() << ")\n";
      }
    }
  }
  return status;
}

int run_generate(const Globals& g, const std::vector<std::string>& specs, bool labels) {
  for (const auto& spec : specs) {
    const auto fam = parse_family(spec);
    const auto gen = generate(fam);
    const auto report = self_check(fam, gen.graph);
    if (g.records()) {
      json j;
      j["family"] = family_name(fam);
      j["graph6"] = to_graph6(gen.graph);
      j["n"] = gen.graph.n();
      j["edges"] = gen.graph.edge_count();
      if (labels) j["labels"] = gen.labels;
      j["self_check"] = report.ok();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << to_graph6(gen.graph) << "\n";
      if (labels)
        for (std::size_t v = 0; v < gen.labels.size(); ++v) std::cout << "# " << v << " " << gen.labels[v] << "\n";
    }
    if (!report.ok()) {
      for (const auto& f : report.failures) std::cerr << "self-check: " << f << "\n";
      return 1;
    }
  }
  return 0;
}

void print_report(const Globals& g, const CheckReport& r, double elapsed) {
  if (g.records()) {
    json j;
    j["check"] = r.check_id;
    j["attempted"] = r.attempted;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["skipped"] = r.skipped;
    j["elapsed_ms"] = elapsed;
    std::cout << j.dump() << "\n";
    for (const auto& w : r.failures) {
      json f;
      f["check"] = r.check_id;
      f["kind"] = "failure";
      f["instance"] = w.instance;
      f["detail"] = w.detail;
      std::cout << f.dump() << "\n";
    }
    for (const auto& w : r.skips) {
      json f;
      f["check"] = r.check_id;
      f["kind"] = "skip";
      f["instance"] = w.instance;
      f["reason"] = w.detail;
      std::cout << f.dump() << "\n";
    }
    return;
  }
  std::cout << std::left << std::setw(20) << r.check_id << (r.ok() ? "PASS" : "FAIL") << "  attempted "
            << r.attempted << ", passed " << r.passed << ", failed " << r.failed << ", skipped " << r.skipped << "  ("
            << std::fixed << std::setprecision(0) << elapsed << " ms)\n";
  for (const auto& w : r.failures) std::cout << "    failure  " << w.instance << ": " << w.detail << "\n";
  for (const auto& w : r.skips) std::cout << "    skipped  " << w.instance << ": " << w.detail << "\n";
  if (const auto* m = r.minimal_failure()) std::cout << "    minimal counterexample: " << m->instance << "\n";
}

int run_verify(const Globals& g, std::vector<std::string> checks, const std::string& corpus_path) {
  if (checks.empty() || (checks.size() == 1 && checks[0] == "all")) checks = check_ids();
  const auto corpus = read_corpus(std::filesystem::path(corpus_path));
  VerifyOptions opt{g.limits(), g.workers, g.seed};
  int status = 0;
  for (const auto& id : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto report = run_check(id, corpus, opt);
    print_report(g, report, ms_since(t0));
    if (!report.ok()) status = 1;
  }
  return status;
}

int run_tables(const Globals& g) {
  int status = 0;
  auto row = [&](const std::string& name, const Graph& graph, int first, int second) {
    const int a = solve(graph, Variant::a, g.limits());
    const int ab = solve(graph, Variant::ab, g.limits());
    const int b = solve(graph, Variant::b, g.limits());
    const int ba = solve(graph, Variant::ba, g.limits());
    const bool ok = a == first && ab == first && b == second && ba == second;
    if (!ok) status = 1;
    if (g.records()) {
      json j;
      j["graph"] = name;
      j["A"] = a;
      j["AB"] = ab;
      j["B"] = b;
      j["BA"] = ba;
      j["closed_A"] = first;
      j["closed_AB"] = first;
      j["closed_B"] = second;
      j["closed_BA"] = second;
      j["match"] = ok;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << std::left << std::setw(5) << name << " A:" << a << " AB:" << ab << " B:" << b << " BA:" << ba
                << "   closed form A:" << first << " AB:" << first << " B:" << second << " BA:" << second
                << (ok ? "" : "   MISMATCH") << "\n";
    }
  };
  for (int n = 1; n <= 10; ++n)
    row("P" + std::to_string(n), generate(family::Path{n}).graph, n == 1 ? 1 : n <= 5 ? 2 : 3,
        n == 1 ? 1 : n <= 6 ? 2 : 3);
  for (int n = 3; n <= 10; ++n)
    row("C" + std::to_string(n), generate(family::Cycle{n}).graph, n == 4 ? 2 : 3, (n == 4 || n == 6) ? 2 : 3);
  return status;
}

void print_board(const GameState& s) {
  std::cout << "round " << s.round() << ", " << to_string(s.mover()) << " to move\n  colored:";
  for (std::size_t v = 0; v < s.colors().size(); ++v)
    if (s.colors()[v]) std::cout << " " << v << ":" << s.colors()[v];
  std::cout << "\n  protected:";
  for (Vertex v : s.protected_set()) std::cout << " " << v;
  const auto legal = legal_moves(s);
  std::cout << "\n  legal:";
  for (Vertex v : legal.vertices) std::cout << " " << v;
  if (legal.pass_allowed) std::cout << " pass";
  std::cout << "\n";
}

int run_play(const Globals& g, const GraphInput& in, const std::string& variant_name, const std::string& side) {
  const auto entries = in.load();
  if (entries.size() != 1) throw CLI::ValidationError("play", "give exactly one graph");
  const Variant v = parse_variant(variant_name);
  const Player human = parse_player(side);
  auto graph = std::make_shared<const Graph>(entries[0].graph);
  Solver solver(*graph, v, g.limits());
  GameState s = initial_state(graph, v);
  Transcript log;
  std::cout << "graph " << entries[0].graph6 << " (" << graph->n() << " vertices), variant " << to_string(v)
            << ", you are " << to_string(human) << "\n";
  while (!is_terminal(s)) {
    print_board(s);
    Move m;
    if (s.mover() == human) {
      std::cout << "> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\n";
        return 1;
      }
      if (line == "quit" || line == "q") return 1;
      try {
        m = line == "pass" || line == "p" ? Move::pass() : Move::at(std::stoi(line));
        s = apply_move(s, m, &log);
      } catch (const IllegalMove& e) {
        std::cout << "illegal: " << e.what() << "\n";
      } catch (const std::exception&) {
        std::cout << "enter a vertex id, 'pass' or 'quit'\n";
      }
      continue;
    }
    const auto eval = solver.best_move(s);
    std::cout << "engine plays " << to_string(*eval.best_move) << " (game value " << s.round() - 1 + eval.value
              << ")\n";
    s = apply_move(s, *eval.best_move, &log);
  }
  std::cout << "game over after " << s.rounds_used() << " rounds\n";
  if (g.records()) std::cout << transcript_to_jsonl(log);
  return 0;
}

int run_serve(const Globals& g, const std::string& host, int port, const std::string& assets) {
  ServiceOptions opt;
  opt.limits = g.limits();
  if (opt.limits.time_budget.count() == 0) opt.limits.time_budget = std::chrono::milliseconds{10'000};
  opt.layout_seed = g.seed;
  SessionService service(opt);
  std::optional<std::filesystem::path> mount;
  if (!assets.empty()) mount = assets;
  HttpServer server(service, mount);
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for independence coloring games"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for random instances and layouts");
  app.add_option("--limit-vertices", g.limit_vertices, "largest graph the exact solver accepts");
  app.add_option("--limit-states", g.limit_states, "memo table size limit");
  app.add_option("--time-budget", g.time_budget_ms, "time budget per solve in ms (0 = none)");
  app.add_option("--format", g.format, "human or records")->check(CLI::IsMember({"human", "records"}));
  app.add_option("--workers", g.workers, "worker threads for corpus checks")->check(CLI::PositiveNumber);

  GraphInput solve_in;
  std::vector<std::string> variants{"all"};
  auto* solve_cmd = app.add_subcommand("solve", "exact game values");
  solve_in.add_options(solve_cmd);
  solve_cmd->add_option("--variant,-v", variants, "A, B, AB, BA, As, main or all");

  GraphInput classic_in;
  std::string game = "chig";
  auto* classic_cmd = app.add_subcommand("classic", "game chromatic number (chig) or game coloring number (colg)");
  classic_in.add_options(classic_cmd);
  classic_cmd->add_option("--game", game, "chig or colg");

  std::vector<std::string> families;
  bool labels = false;
  auto* gen_cmd = app.add_subcommand("generate", "emit graph6 for family members");
  gen_cmd->add_option("family", families, "family specs")->required();
  gen_cmd->add_flag("--labels", labels, "also print vertex labels");

  std::vector<std::string> checks;
  std::string corpus = INDCOL_DEFAULT_CORPUS;
  auto* verify_cmd = app.add_subcommand("verify", "run checks; exit status 1 on any failure");
  verify_cmd->add_option("--check,-c", checks, "check id (repeatable, default all)");
  verify_cmd->add_option("--corpus", corpus, "graph6 corpus");
  verify_cmd->add_flag("--list", [&](std::int64_t) {
    for (const auto& id : check_ids()) std::cout << id << "\n";
    std::exit(0);
  }, "list check ids");

  app.add_subcommand("tables", "path and cycle tables next to the closed forms");

  GraphInput play_in;
  std::string play_variant = "A";
  std::string side = "alice";
  auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
  play_in.add_options(play_cmd);
  play_cmd->add_option("--variant,-v", play_variant, "variant");
  play_cmd->add_option("--as", side, "alice or bob");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string assets;
  auto* serve_cmd = app.add_subcommand("serve", "start the session service");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--assets", assets, "directory with the built explorer");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(g, solve_in, variants);
    if (*classic_cmd) return run_classic(g, classic_in, game);
    if (*gen_cmd) return run_generate(g, families, labels);
    if (*verify_cmd) return run_verify(g, checks, corpus);
    if (app.got_subcommand("tables")) return run_tables(g);
    if (*play_cmd) return run_play(g, play_in, play_variant, side);
    if (*serve_cmd) return run_serve(g, host, port, assets);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
