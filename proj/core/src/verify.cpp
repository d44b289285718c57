#include "indcol/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "absl/container/flat_hash_map.h"
#include "indcol/classic.hpp"
#include "indcol/graph6.hpp"

namespace indcol {

void CheckReport::fail(std::string instance, std::string detail) {
  ++attempted;
  ++failed;
  failures.push_back({std::move(instance), std::move(detail)});
}

void CheckReport::skip(std::string instance, std::string reason) {
  ++attempted;
  ++skipped;
  skips.push_back({std::move(instance), std::move(reason)});
}

void CheckReport::absorb(const CheckReport& other) {
  attempted += other.attempted;
  passed += other.passed;
  failed += other.failed;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  skips.insert(skips.end(), other.skips.begin(), other.skips.end());
}

const Witness* CheckReport::minimal_failure() const {
  const Witness* best = nullptr;
  for (const auto& w : failures) {
    if (!best || std::pair(w.instance.size(), w.instance) < std::pair(best->instance.size(), best->instance)) best = &w;
  }
  return best;
}

namespace {

void require_connected_with_edge(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
}

bool dominates(const Graph& g, Vertex x, const VertexSet& part) { return part.is_subset_of(g.neighbors(x)); }

std::string values_text(const std::array<int, 5>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << to_string(kAllVariants[i]) << "=" << v[i];
  return out.str();
}

int at(const std::array<int, 5>& v, Variant x) {
  return v[static_cast<std::size_t>(std::find(kAllVariants.begin(), kAllVariants.end(), x) - kAllVariants.begin())];
}

// Runs `body` on every corpus entry across a pool, then merges the partial
// reports in graph6 order so the result does not depend on scheduling.
template <typename Body>
CheckReport fan_out(const std::string& id, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt,
                    Body body) {
  std::vector<CheckReport> parts(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      try {
        body(corpus[i], parts[i]);
      } catch (const LimitExceeded& e) {
        parts[i].skip(corpus[i].graph6, std::string("limit exceeded: ") + e.what());
      } catch (const std::exception& e) {
        parts[i].fail(corpus[i].graph6, std::string("error: ") + e.what());
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(opt.workers, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return corpus[a].graph6 < corpus[b].graph6; });
  CheckReport out;
  out.check_id = id;
  for (auto i : order) out.absorb(parts[i]);
  return out;
}

// Records one instance, turning solver limits into skips.
template <typename Body>
void instance(CheckReport& r, const std::string& name, Body body) {
  try {
    std::string why;
    if (body(why)) {
      r.pass();
    } else {
      r.fail(name, why);
    }
  } catch (const LimitExceeded& e) {
    r.skip(name, std::string("limit exceeded: ") + e.what());
  }
}

std::array<int, 4> main_values(const Graph& g, const SolveLimits& limits) {
  return {solve(g, Variant::a, limits), solve(g, Variant::b, limits), solve(g, Variant::ab, limits),
          solve(g, Variant::ba, limits)};
}

}  // namespace

bool predicate_chi2_first_player(const Graph& g) {
  require_connected_with_edge(g);
  const auto bp = bipartition(g);
  if (!bp) return false;
  for (Vertex x : bp->first)
    if (dominates(g, x, bp->second)) return true;
  for (Vertex x : bp->second)
    if (dominates(g, x, bp->first)) return true;
  return false;
}

bool predicate_chi2_second_player(const Graph& g) {
  require_connected_with_edge(g);
  const auto bp = bipartition(g);
  if (!bp) return false;
  auto covered = [&](const VertexSet& part, const VertexSet& opposite) {
    for (Vertex x : part) {
      bool found = false;
      for (Vertex y : part) {
        if ((g.neighbors(x) | g.neighbors(y)) == opposite) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  return covered(bp->first, bp->second) && covered(bp->second, bp->first);
}

int hammer_case(const Graph& g, const SplitPartition& p) {
  for (Vertex x : p.independent)
    if (p.clique.is_subset_of(g.neighbors(x))) return 1;
  for (Vertex x : p.clique)
    if (!g.neighbors(x).intersects(p.independent)) return 2;
  return 3;
}

Generated split_sample(int clique_size, int indep_size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int max_edges = clique_size * indep_size;
  const int edges = static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges + 1));
  return generate(family::SplitGraph{clique_size, indep_size, edges, seed});
}

CheckReport check_oracle(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  return fan_out("oracle", corpus, opt, [&](const CorpusEntry& e, CheckReport& r) {
    if (e.graph.n() > kOracleVertexLimit) {
      r.skip(e.graph6, "oracle handles at most 8 vertices");
      return;
    }
    for (Variant v : kAllVariants) {
      const int fast = solve(e.graph, v, opt.limits);
      const int slow = oracle_solve(e.graph, v);
      if (fast == slow) {
        r.pass();
      } else {
        r.fail(e.graph6, std::string(to_string(v)) + ": solve=" + std::to_string(fast) + " oracle=" + std::to_string(slow));
      }
    }
  });
}

CheckReport check_characterizations(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  return fan_out("characterizations", corpus, opt, [&](const CorpusEntry& e, CheckReport& r) {
    if (e.graph.edge_count() == 0 || !is_connected(e.graph)) {
      r.skip(e.graph6, "characterizations need a connected graph with an edge");
      return;
    }
    const bool first = predicate_chi2_first_player(e.graph);
    const bool second = predicate_chi2_second_player(e.graph);
    const auto v = main_values(e.graph, opt.limits);
    const bool a2 = v[0] == 2, b2 = v[1] == 2, ab2 = v[2] == 2, ba2 = v[3] == 2;
    if (first == a2 && a2 == ab2 && second == b2 && b2 == ba2) {
      r.pass();
    } else {
      std::ostringstream d;
      d << "first=" << first << " second=" << second << " A=" << v[0] << " B=" << v[1] << " AB=" << v[2]
        << " BA=" << v[3];
      r.fail(e.graph6, d.str());
    }
  });
}

CheckReport check_bounds(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  return fan_out("bounds", corpus, opt, [&](const CorpusEntry& e, CheckReport& r) {
    const int chi = chromatic_number(e.graph);
    const int top = static_cast<int>(max_degree(e.graph)) + 1;
    const bool edgeless = e.graph.edge_count() == 0;
    const auto all = solve_all_variants(e.graph, opt.limits);
    bool ok = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const bool main = kAllVariants[i] != Variant::alice_skip;
      if (main && (all[i] < chi || all[i] > top)) ok = false;
      if (e.graph.n() > 0 && (all[i] == 1) != edgeless) ok = false;
    }
    if (ok) {
      r.pass();
    } else {
      r.fail(e.graph6, "chi=" + std::to_string(chi) + " delta+1=" + std::to_string(top) + " " + values_text(all));
    }
  });
}

CheckReport check_skip_dominance(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  return fan_out("skip-dominance", corpus, opt, [&](const CorpusEntry& e, CheckReport& r) {
    const auto all = solve_all_variants(e.graph, opt.limits);
    const int as = at(all, Variant::alice_skip);
    if (as <= std::min({at(all, Variant::ab), at(all, Variant::ba), at(all, Variant::b)})) {
      r.pass();
    } else {
      r.fail(e.graph6, values_text(all));
    }
  });
}

CheckReport check_p7(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  return fan_out("p7", corpus, opt, [&](const CorpusEntry& e, CheckReport& r) {
    if (!has_induced_path(e.graph, 7)) {
      r.pass();
      return;
    }
    const auto v = main_values(e.graph, opt.limits);
    if (*std::min_element(v.begin(), v.end()) >= 3) {
      r.pass();
    } else {
      r.fail(e.graph6, "induced P7 but A=" + std::to_string(v[0]) + " B=" + std::to_string(v[1]) +
                           " AB=" + std::to_string(v[2]) + " BA=" + std::to_string(v[3]));
    }
  });
}

CheckReport check_playout(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  return fan_out("playout", corpus, opt, [&](const CorpusEntry& e, CheckReport& r) {
    for (Variant v : kAllVariants) {
      auto solver = std::make_shared<Solver>(e.graph, v, opt.limits);
      const int value = solver->game_value();
      const auto strategy = optimal_strategy(solver);
      const auto result = play_out(e.graph, v, strategy, strategy);
      bool proper = true;
      for (auto [a, b] : e.graph.edges())
        if (result.coloring[static_cast<std::size_t>(a)] == result.coloring[static_cast<std::size_t>(b)]) proper = false;
      int colors = 0;
      for (int c : result.coloring) colors = std::max(colors, c);
      if (result.rounds == value && colors == value && proper) {
        r.pass();
      } else {
        r.fail(e.graph6, std::string(to_string(v)) + ": value=" + std::to_string(value) +
                             " playout=" + std::to_string(result.rounds) + (proper ? "" : " improper"));
      }
    }
  });
}

CheckReport check_split_theorem(int clique_size, int indep_size, std::uint64_t seed_begin, std::uint64_t seed_end,
                                const VerifyOptions& opt) {
  CheckReport r;
  r.check_id = "split";
  for (std::uint64_t seed = seed_begin; seed < seed_end; ++seed) {
    const auto gen = split_sample(clique_size, indep_size, seed);
    const std::string name = "split:" + std::to_string(clique_size) + "," + std::to_string(indep_size) + " seed " +
                             std::to_string(seed) + " " + to_graph6(gen.graph);
    instance(r, name, [&](std::string& why) {
      const int omega = clique_number(gen.graph);
      const int kase = hammer_case(gen.graph, *gen.partition);
      const auto v = main_values(gen.graph, opt.limits);
      std::ostringstream d;
      d << "case " << kase << " omega=" << omega << " A=" << v[0] << " B=" << v[1] << " AB=" << v[2]
        << " BA=" << v[3];
      why = d.str();
      if (v[0] != omega) return false;
      for (int i = 1; i < 4; ++i)
        if (v[static_cast<std::size_t>(i)] != omega && v[static_cast<std::size_t>(i)] != omega + 1) return false;
      return true;
    });
  }
  return r;
}

CheckReport check_value_tables(const VerifyOptions& opt) {
  CheckReport r;
  r.check_id = "tables";
  auto expect = [&](const std::string& name, const Graph& g, Variant v, int want) {
    instance(r, name + " " + std::string(to_string(v)), [&](std::string& why) {
      const int got = solve(g, v, opt.limits);
      why = "expected " + std::to_string(want) + ", got " + std::to_string(got);
      return got == want;
    });
  };
  for (int n = 1; n <= 10; ++n) {
    const Graph g = generate(family::Path{n}).graph;
    const int first = n == 1 ? 1 : n <= 5 ? 2 : 3;
    const int second = n == 1 ? 1 : n <= 6 ? 2 : 3;
    const std::string name = "path:" + std::to_string(n);
    expect(name, g, Variant::a, first);
    expect(name, g, Variant::ab, first);
    expect(name, g, Variant::b, second);
    expect(name, g, Variant::ba, second);
  }
  for (int n = 3; n <= 10; ++n) {
    const Graph g = generate(family::Cycle{n}).graph;
    const int first = n == 4 ? 2 : 3;
    const int second = (n == 4 || n == 6) ? 2 : 3;
    const std::string name = "cycle:" + std::to_string(n);
    expect(name, g, Variant::a, first);
    expect(name, g, Variant::ab, first);
    expect(name, g, Variant::b, second);
    expect(name, g, Variant::ba, second);
  }
  return r;
}

CheckReport check_family_lemmas(const VerifyOptions& opt) {
  CheckReport r;
  r.check_id = "lemmas";
  enum class Rel { eq, ge, le };
  auto claim = [&](const std::string& fam, const Graph& g, Variant v, Rel rel, int bound) {
    const char* op = rel == Rel::eq ? "=" : rel == Rel::ge ? ">=" : "<=";
    const std::string name = fam + " " + std::string(to_string(v)) + op + std::to_string(bound);
    instance(r, name, [&](std::string& why) {
      const int got = solve(g, v, opt.limits);
      why = "got " + std::to_string(got);
      return rel == Rel::eq ? got == bound : rel == Rel::ge ? got >= bound : got <= bound;
    });
  };
  for (int k = 1; k <= 5; ++k) {
    const std::string fam = "g1:" + std::to_string(k);
    const Graph g = generate(family::G1{k}).graph;
    claim(fam, g, Variant::a, Rel::eq, k);
    claim(fam, g, Variant::ab, Rel::ge, k);
    claim(fam, g, Variant::b, Rel::eq, 2);
    claim(fam, g, Variant::ba, Rel::eq, 2);
  }
  for (int k = 1; k <= 4; ++k) {
    const std::string fam = "g2:" + std::to_string(k);
    const Graph g = generate(family::G2{k}).graph;
    claim(fam, g, Variant::ab, Rel::eq, 3);
    claim(fam, g, Variant::b, Rel::eq, 3);
    claim(fam, g, Variant::a, Rel::ge, k + 1);
    claim(fam, g, Variant::ba, Rel::ge, k + 1);
  }
  for (int k = 1; k <= 3; ++k) {
    const std::string fam = "g3:" + std::to_string(k);
    const Graph g = generate(family::G3{k}).graph;
    instance(r, fam + " first-player predicate", [&](std::string& why) {
      why = "x does not dominate Y";
      return predicate_chi2_first_player(g);
    });
    if (k == 1) {
      claim(fam, g, Variant::a, Rel::eq, 2);
      claim(fam, g, Variant::ab, Rel::eq, 2);
      claim(fam, g, Variant::ba, Rel::le, 4);
      claim(fam, g, Variant::b, Rel::ge, k);
    } else {
      const std::string reason = "exact solve infeasible (n=" + std::to_string(g.n()) + ")";
      for (const char* c : {" A=2", " AB=2", " BA<=4", " B>=k"}) r.skip(fam + c, reason);
    }
  }
  for (int k = 1; k <= 4; ++k) {
    const std::string fam = "g4:" + std::to_string(k);
    claim(fam, generate(family::G4{k}).graph, Variant::b, Rel::eq, 3);
  }
  return r;
}

CheckReport check_classic_comparisons(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  CheckReport r;
  r.check_id = "classic";
  for (int k = 1; k <= 3; ++k) {
    const Graph g = generate(family::G4{k}).graph;
    instance(r, "g4:" + std::to_string(k) + " chi_g=" + std::to_string(k + 2), [&](std::string& why) {
      const int got = game_chromatic_number(g);
      why = "got " + std::to_string(got);
      return got == k + 2;
    });
  }
  std::vector<CorpusEntry> trees;
  for (const auto& e : corpus)
    if (e.graph.n() >= 1 && e.graph.n() <= 7 && e.graph.edge_count() + 1 == e.graph.n() && is_connected(e.graph))
      trees.push_back(e);
  r.absorb(fan_out("classic", trees, opt, [&](const CorpusEntry& e, CheckReport& part) {
    const int chi = chromatic_number(e.graph);
    const int chig = game_chromatic_number(e.graph);
    const int colg = game_coloring_number(e.graph);
    if (chi <= chig && chig <= colg && colg <= 4) {
      part.pass();
    } else {
      part.fail(e.graph6, "chi=" + std::to_string(chi) + " chi_g=" + std::to_string(chig) +
                              " col_g=" + std::to_string(colg));
    }
  }));
  for (int n = 1; n <= 3; ++n) {
    const Graph g = generate(family::StarSquare{n}).graph;
    const std::string fam = "starsquare:" + std::to_string(n);
    instance(r, fam + " A=AB=2, B<=4, BA<=4", [&](std::string& why) {
      const auto v = main_values(g, opt.limits);
      why = "A=" + std::to_string(v[0]) + " B=" + std::to_string(v[1]) + " AB=" + std::to_string(v[2]) +
            " BA=" + std::to_string(v[3]);
      return v[0] == 2 && v[2] == 2 && v[1] <= 4 && v[3] <= 4;
    });
    instance(r, fam + " chi <= col_g <= delta+1", [&](std::string& why) {
      SolveLimits wide = marking_game_limits();
      wide.max_vertices = g.n();
      const int colg = game_coloring_number(g, wide);
      const int chi = chromatic_number(g);
      why = "col_g=" + std::to_string(colg);
      return chi <= colg && colg <= static_cast<int>(max_degree(g)) + 1;
    });
  }
  return r;
}

CheckReport check_trees(int random_trees, const VerifyOptions& opt) {
  CheckReport r;
  r.check_id = "trees";
  const Graph t23 = generate(family::NaryTree{2, 3}).graph;
  instance(r, "tree:2,3 As>=3", [&](std::string& why) {
    const int got = solve(t23, Variant::alice_skip, opt.limits);
    why = "got " + std::to_string(got);
    return got >= 3;
  });
  for (int k = 1; k <= 5; ++k) {
    const std::string name = "treegk:" + std::to_string(k) + " structure";
    FamilyReport fr;
    if (k <= 4) {
      const family::TreeGk spec{k};
      fr = self_check(spec, generate(spec).graph);
    } else {
      const auto [n, d] = tree_gk_shape(k);
      fr = check_tree_shape(n, d);
    }
    if (fr.ok()) {
      r.pass();
    } else {
      r.fail(name, fr.failures.front());
    }
  }
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < random_trees; ++i) {
    const auto n = static_cast<std::size_t>(2 + rng() % 11);
    const Graph g = random_tree(n, rng());
    const std::string name = "random tree " + to_graph6(g);
    instance(r, name, [&](std::string& why) {
      const auto v = main_values(g, opt.limits);
      const int as = solve(g, Variant::alice_skip, opt.limits);
      const bool p7 = has_induced_path(g, 7);
      why = "As=" + std::to_string(as) + " A=" + std::to_string(v[0]) + " B=" + std::to_string(v[1]) +
            " AB=" + std::to_string(v[2]) + " BA=" + std::to_string(v[3]) + (p7 ? " induced P7" : "");
      const int low = *std::min_element(v.begin(), v.end());
      return low >= as && (!p7 || low >= 3);
    });
  }
  return r;
}

namespace {

using Mask = std::uint64_t;

class FirstRound {
 public:
  FirstRound(const Graph& g, const SolveLimits& limits) : g_(g), limits_(limits), n_(static_cast<int>(g.n())) {
    for (std::size_t v = 0; v < g.n(); ++v) adj_.push_back(g.neighbors(static_cast<Vertex>(v)).words()[0]);
  }

  int run() {
    if (n_ == 0) return 0;
    return search(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1, 0, true);
  }

 private:
  int payoff(Mask rest) {
    int worst = 0;
    while (rest) {
      Mask comp = rest & (~rest + 1);
      for (Mask frontier = comp; frontier;) {
        Mask grow = 0;
        for (Mask f = frontier; f; f &= f - 1) grow |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = grow & rest & ~comp;
        comp |= frontier;
      }
      rest &= ~comp;
      auto [it, fresh] = components_.try_emplace(comp, 0);
      if (fresh) {
        VertexSet members(g_.n());
        for (Mask m = comp; m; m &= m - 1) members.set(std::countr_zero(m));
        it->second = solve(induced_subgraph(g_, members), Variant::alice_skip, limits_);
      }
      worst = std::max(worst, it->second);
    }
    return 1 + worst;
  }

  int search(Mask u, Mask p, bool alice) {
    const std::pair<Mask, Mask> key{u, p | (alice ? Mask{1} << 63 : 0)};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= limits_.max_states)
      throw LimitExceeded(Resource::states, limits_.max_states, "first-round search exceeded the state limit");
    int best = alice ? 1 << 20 : -1;
    for (Mask m = u & ~p; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const Mask u2 = u & ~(Mask{1} << v);
      const Mask p2 = (p | adj_[static_cast<std::size_t>(v)]) & u2;
      const int value = (u2 & ~p2) == 0 ? payoff(u2) : search(u2, p2, !alice);
      best = alice ? std::min(best, value) : std::max(best, value);
    }
    if (alice) best = std::min(best, search(u, p, false));
    memo_.emplace(key, best);
    return best;
  }

  const Graph& g_;
  SolveLimits limits_;
  int n_;
  std::vector<Mask> adj_;
  absl::flat_hash_map<std::pair<Mask, Mask>, int> memo_;
  absl::flat_hash_map<Mask, int> components_;
};

}  // namespace

int first_round_component_bound(const Graph& g, const SolveLimits& limits) {
  const std::size_t cap = std::min(limits.max_vertices, kSolverHardVertexLimit);
  if (g.n() > cap) throw LimitExceeded(Resource::vertices, cap, "graph exceeds the vertex limit");
  return FirstRound(g, limits).run();
}

CheckReport check_component_lemma(const std::vector<CorpusEntry>& sample, const VerifyOptions& opt) {
  return fan_out("component-lemma", sample, opt, [&](const CorpusEntry& e, CheckReport& r) {
    const int bound = first_round_component_bound(e.graph, opt.limits);
    const auto all = solve_all_variants(e.graph, opt.limits);
    bool ok = true;
    for (Variant v : {Variant::alice_skip, Variant::ab, Variant::ba, Variant::b})
      if (at(all, v) < bound) ok = false;
    if (ok) {
      r.pass();
    } else {
      r.fail(e.graph6, "forced bound " + std::to_string(bound) + " " + values_text(all));
    }
  });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"tables", "oracle", "characterizations", "bounds", "skip-dominance", "p7",
                                            "playout", "split", "lemmas", "classic", "trees", "component-lemma"};
  return ids;
}

CheckReport run_check(const std::string& id, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  if (id == "tables") return check_value_tables(opt);
  if (id == "oracle") return check_oracle(corpus, opt);
  if (id == "characterizations") return check_characterizations(corpus, opt);
  if (id == "bounds") return check_bounds(corpus, opt);
  if (id == "skip-dominance") return check_skip_dominance(corpus, opt);
  if (id == "p7") return check_p7(corpus, opt);
  if (id == "playout") return check_playout(corpus, opt);
  if (id == "lemmas") return check_family_lemmas(opt);
  if (id == "classic") return check_classic_comparisons(corpus, opt);
  if (id == "trees") return check_trees(200, opt);
  if (id == "split") {
    // 50 graphs: clique and independent sides each 2..6, so n <= 12.
    CheckReport r;
    r.check_id = "split";
    for (std::uint64_t s = 0; s < 50; ++s) {
      const int c = 2 + static_cast<int>(s % 5);
      const int i = 2 + static_cast<int>((s / 5) % 5);
      r.absorb(check_split_theorem(c, i, opt.seed + s, opt.seed + s + 1, opt));
    }
    return r;
  }
  if (id == "component-lemma") {
    std::vector<CorpusEntry> sample;
    const Graph t = generate(family::TreeGk{3}).graph;
    sample.push_back({to_graph6(t), t});
    sample.insert(sample.end(), corpus.begin(), corpus.end());
    return check_component_lemma(sample, opt);
  }
  throw std::invalid_argument("unknown check '" + id + "'");
}

}  // namespace indcol
