#include "doctest.h"
#include "indcol/families.hpp"
#include "indcol/graph6.hpp"
#include "indcol/verify.hpp"

using namespace indcol;

namespace {

Graph fam(const std::string& spec) { return generate(parse_family(spec)).graph; }

std::vector<CorpusEntry> sample(std::initializer_list<const char*> specs) {
  std::vector<CorpusEntry> out;
  for (const char* s : specs) {
    auto g = fam(s);
    out.push_back({to_graph6(g), std::move(g)});
  }
  return out;
}

// Brute force for the second-player predicate: every vertex of each part has
// a partner (possibly itself) in its own part whose neighborhoods together
// cover the other part.
bool brute_second(const Graph& g) {
  const auto b = *bipartition(g);
  auto side_ok = [&](const VertexSet& own, const VertexSet& other) {
    for (Vertex x : own) {
      bool found = false;
      for (Vertex y : own) found |= other.is_subset_of(g.neighbors(x) | g.neighbors(y));
      if (!found) return false;
    }
    return true;
  };
  return side_ok(b.first, b.second) && side_ok(b.second, b.first);
}

}  // namespace

TEST_CASE("first-player predicate") {
  CHECK(predicate_chi2_first_player(fam("star:5")));
  CHECK_FALSE(predicate_chi2_first_player(fam("cycle:6")));
  CHECK_FALSE(predicate_chi2_first_player(fam("cycle:5")));
  for (int k = 1; k <= 3; ++k) CHECK(predicate_chi2_first_player(fam("g3:" + std::to_string(k))));
  CHECK_THROWS_AS(predicate_chi2_first_player(make_graph(3, {})), std::invalid_argument);
  CHECK_THROWS_AS(predicate_chi2_first_player(make_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("second-player predicate") {
  for (int k = 3; k <= 5; ++k) CHECK(predicate_chi2_second_player(fam("g1:" + std::to_string(k))));
  // G1(2) is two disjoint edges.
  CHECK_THROWS_AS(predicate_chi2_second_player(fam("g1:2")), std::invalid_argument);
  // 0 pairs with 2 and 3 with 1, so P4 satisfies the condition; its B-value is 2.
  CHECK(predicate_chi2_second_player(fam("path:4")));
  CHECK(brute_second(fam("path:4")));
  CHECK(solve(fam("path:4"), Variant::b) == 2);
  CHECK(predicate_chi2_second_player(fam("cycle:6")));
  CHECK(brute_second(fam("cycle:6")));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto t = random_tree(2 + seed % 9, seed);
    CHECK(predicate_chi2_second_player(t) == brute_second(t));
  }
}

TEST_CASE("Hammer cases") {
  // Complete split graph: every independent vertex sees the whole clique.
  const auto complete = generate(family::SplitGraph{3, 2, 6, 1});
  CHECK(hammer_case(complete.graph, *complete.partition) == 1);
  const auto bare = generate(family::SplitGraph{3, 2, 0, 1});
  CHECK(hammer_case(bare.graph, *bare.partition) == 2);
  // Each clique vertex has an independent neighbor, none sees the whole clique.
  const auto g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}});
  SplitPartition p{VertexSet(5, {0, 1, 2}), VertexSet(5, {3, 4})};
  CHECK(hammer_case(g, p) == 3);
}

TEST_CASE("split samples are reproducible and within size") {
  const auto a = split_sample(4, 3, 9);
  const auto b = split_sample(4, 3, 9);
  CHECK(a.graph == b.graph);
  CHECK(a.graph.n() == 7);
  CHECK(a.graph.edge_count() <= 6 + 12);
}

TEST_CASE("check reports") {
  CheckReport r;
  r.check_id = "x";
  r.pass();
  r.fail("DhC", "bad");
  r.fail("Bw", "bad");
  r.skip("G?????", "too big");
  CHECK(r.attempted == 4);
  CHECK(r.attempted == r.passed + r.failed + r.skipped);
  CHECK(r.skipped == 1);
  CHECK_FALSE(r.ok());
  REQUIRE(r.minimal_failure());
  CHECK(r.minimal_failure()->instance == "Bw");
  CheckReport total;
  total.absorb(r);
  total.absorb(r);
  CHECK(total.failed == 4);
  CHECK(total.failures.size() == 4);
}

TEST_CASE("corpus checks on a small sample") {
  const auto c = sample({"path:5", "cycle:5", "cycle:6", "star:4", "complete:4", "g1:3", "g2:2", "tree:2,2"});
  VerifyOptions opt;
  opt.workers = 2;
  CHECK(check_oracle(c, opt).ok());
  CHECK(check_characterizations(c, opt).ok());
  CHECK(check_bounds(c, opt).ok());
  CHECK(check_skip_dominance(c, opt).ok());
  CHECK(check_p7(c, opt).ok());
  CHECK(check_playout(c, opt).ok());
  CHECK(check_component_lemma(c, opt).ok());
  CHECK(check_oracle(c, opt).attempted == c.size() * 5);
}

TEST_CASE("oversized corpus entries are skipped, not failed") {
  const auto c = sample({"path:12"});
  const auto r = check_oracle(c);
  CHECK(r.ok());
  CHECK(r.skipped == 1);
}

TEST_CASE("worker count does not change results") {
  const auto c = sample({"path:7", "cycle:7", "g2:3", "g4:2", "star:6", "tree:2,2"});
  VerifyOptions one;
  VerifyOptions four;
  four.workers = 4;
  const auto a = check_bounds(c, one);
  const auto b = check_bounds(c, four);
  CHECK(a.passed == b.passed);
  CHECK(a.attempted == b.attempted);
}

TEST_CASE("component bound") {
  CHECK(first_round_component_bound(fam("path:2")) == 2);
  CHECK(first_round_component_bound(fam("tree:2,3")) >= 3);
  CHECK(first_round_component_bound(fam("complete:4")) == 4);
}

TEST_CASE("split theorem on a few seeds") { CHECK(check_split_theorem(4, 3, 1, 6).ok()); }

TEST_CASE("check ids") {
  const auto& ids = check_ids();
  CHECK(std::find(ids.begin(), ids.end(), "characterizations") != ids.end());
  CHECK_THROWS(run_check("nope", {}));
}
