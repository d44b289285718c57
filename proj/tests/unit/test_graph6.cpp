#include <fstream>
#include <sstream>

#include "doctest.h"
#include "indcol/corpus.hpp"
#include "indcol/graph6.hpp"

using namespace indcol;

namespace {

struct Reference {
  std::string graph6;
  std::size_t n;
  std::vector<Edge> edges;
};

// Encodings written by an independent encoder (networkx).
std::vector<Reference> load_reference() {
  std::ifstream in(INDCOL_REFERENCE_TSV);
  REQUIRE(in);
  std::vector<Reference> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Reference r;
    std::string edges;
    std::getline(row, r.graph6, '\t');
    row >> r.n;
    row.ignore(1);
    std::getline(row, edges);
    std::istringstream es(edges);
    std::string e;
    while (es >> e) {
      const auto dash = e.find('-');
      r.edges.push_back({std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1))});
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("small examples") {
  const auto k3 = from_graph6("Bw");
  CHECK(k3.n() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(to_graph6(k3) == "Bw");
  const auto k1 = from_graph6("@");
  CHECK(k1.n() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(to_graph6(k1) == "@");
  CHECK(from_graph6("?").n() == 0);
}

TEST_CASE("reference encodings decode and re-encode") {
  const auto refs = load_reference();
  CHECK(refs.size() >= 10);
  for (const auto& r : refs) {
    CAPTURE(r.graph6);
    const auto g = from_graph6(r.graph6);
    CHECK(g.n() == r.n);
    CHECK(g.edges() == r.edges);
    CHECK(to_graph6(make_graph(r.n, r.edges)) == r.graph6);
  }
}

TEST_CASE("long length prefix") {
  GraphBuilder b(70);
  for (int v = 1; v < 70; ++v) b.add_edge(0, v);
  const auto g = std::move(b).build();
  const auto s = to_graph6(g);
  CHECK(s.substr(0, 4) == "~?@E");
  CHECK(from_graph6(s) == g);
}

TEST_CASE("random round trips") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = random_graph(1 + seed % 40, 0.3, seed);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B!"), ParseError);
  CHECK_THROWS_AS(from_graph6("Bww"), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  // K3 body with a padding bit set
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);
  CHECK_THROWS_AS(from_graph6("~??~"), ParseError);
  CHECK_THROWS_AS(from_graph6("D~{", 4), LimitExceeded);
}

TEST_CASE("corpus reader") {
  std::istringstream in("# comment\nBw\n\n@\nCh\n");
  const auto c = read_corpus(in);
  REQUIRE(c.size() == 3);
  CHECK(c[2].graph.edge_count() == 3);

  std::istringstream bad("Bw\nB!\n");
  try {
    read_corpus(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("connected corpus n <= 7") {
  const auto c = read_corpus(std::filesystem::path(INDCOL_CORPUS));
  CHECK(c.size() == 996);
  std::array<int, 8> by_n{};
  for (const auto& e : c) {
    CHECK(is_connected(e.graph));
    ++by_n[e.graph.n()];
  }
  CHECK(by_n == std::array<int, 8>{0, 1, 1, 2, 6, 21, 112, 853});
}
