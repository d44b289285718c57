#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indcol/corpus.hpp"
#include "indcol/families.hpp"
#include "indcol/solver.hpp"

namespace indcol {

struct Witness {
  std::string instance;  // graph6 or family name
  std::string detail;
};

struct CheckReport {
  std::string check_id;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<Witness> failures;
  std::vector<Witness> skips;  // detail holds the reason

  bool ok() const { return failed == 0; }
  void pass() { ++attempted, ++passed; }
  void fail(std::string instance, std::string detail);
  void skip(std::string instance, std::string reason);
  // Appends counts and witnesses of `other`.
  void absorb(const CheckReport& other);
  // Failure with the fewest vertices, then the lexicographically least graph6.
  const Witness* minimal_failure() const;
};

struct VerifyOptions {
  SolveLimits limits;
  unsigned workers = 1;
  std::uint64_t seed = 1;
};

// Bipartite with parts (X1, X2) and some vertex of one part adjacent to all of the other.
// Throws std::invalid_argument unless g is connected with an edge.
bool predicate_chi2_first_player(const Graph& g);
// Bipartite and for every x in a part some y in the same part (y = x allowed)
// with N(x) | N(y) equal to the other part.
bool predicate_chi2_second_player(const Graph& g);

// Hammer's classification of a split partition (C, I):
//   1  some x in I is adjacent to all of C;
//   2  some x in C has no neighbor in I;
//   3  otherwise.
int hammer_case(const Graph& g, const SplitPartition& p);

// Split graph with sizes fixed and cross edges drawn from the seed.
Generated split_sample(int clique_size, int indep_size, std::uint64_t seed);

CheckReport check_oracle(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
CheckReport check_characterizations(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
CheckReport check_bounds(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
CheckReport check_skip_dominance(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
CheckReport check_p7(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
CheckReport check_playout(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
// Seeds [seed_begin, seed_end).
CheckReport check_split_theorem(int clique_size, int indep_size, std::uint64_t seed_begin, std::uint64_t seed_end,
                                const VerifyOptions& opt = {});
// Path tables n = 1..10 and cycle tables n = 3..10, four main variants.
CheckReport check_value_tables(const VerifyOptions& opt = {});
// G1(k) k <= 5, G2(k) k <= 4, G3(1..3), G4(k) k <= 4.
CheckReport check_family_lemmas(const VerifyOptions& opt = {});
// G4(k) chi_g for k <= 3, trees of the corpus, StarSquare(n <= 3).
CheckReport check_classic_comparisons(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});
// T(2,3), TreeGk structure for k <= 5, and `random_trees` seeded trees with n <= 12.
CheckReport check_trees(int random_trees = 200, const VerifyOptions& opt = {});

/**
 * Instance form of the component lemma. The first round is searched under
 * Alice-skip rules with payoff 1 + max over components H of G - C^1 of the
 * Alice-skip value of H. Bob can force a component of that value, so the
 * lemma requires As, AB, BA and B to be at least the payoff.
 */
int first_round_component_bound(const Graph& g, const SolveLimits& limits = {});
CheckReport check_component_lemma(const std::vector<CorpusEntry>& sample, const VerifyOptions& opt = {});

// Ids accepted by run_check, in a stable order.
const std::vector<std::string>& check_ids();
// Corpus-based checks use `corpus`; others ignore it.
CheckReport run_check(const std::string& id, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt = {});

}  // namespace indcol
