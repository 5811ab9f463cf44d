#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sequiv/blanchfield.hpp"

namespace sequiv {

struct ChainParams {
  // Move weights; reduce only counts when a reduction site exists, enlarge
  // only while under the size cap.
  int enlarge_weight = 30;
  int reduce_weight = 30;
  int congruence_weight = 40;
  long v_bound = 2;          // enlargement vector entries in [-v_bound, v_bound]
  int congruence_ops = 1;    // elementary operations per congruence move
  long congruence_coeff = 2; // transvection coefficient bound
  std::size_t size_cap_slack = 4;  // matrices never exceed start size + slack
};

// Replayable random walk of n moves from a; deterministic per seed.
MoveChain random_chain(const SeifertMatrix& a, std::size_t n, const ChainParams& params,
                       std::uint64_t seed);

struct SearchBudget {
  std::size_t depth = 5;     // per search direction
  std::size_t nodes = 100000;
};

// Lexicographically minimal row-major entry sequence over all simultaneous
// row/column permutations, plus the minimizing permutation. Exact for
// size <= 8; larger matrices fall back to the identity permutation (the
// canonicalization is a dedup optimization, never a semantics change).
std::pair<std::string, std::vector<std::size_t>> permutation_canonical(const IntMat& m);

// Bidirectional breadth-first search over the move graph, canonicalizing
// nodes by simultaneous-permutation class. Returns a replay-verified chain
// from a to b, or nothing within budget (which proves nothing: the move
// graph is infinite).
std::optional<MoveChain> chain_search(const SeifertMatrix& a, const SeifertMatrix& b,
                                      const SearchBudget& budget = {});

struct CompareBudget {
  SearchBudget search;
  IsometryBounds isometry;
  ChainParams chain;  // bounds used when enumerating moves in the search
};

struct CompareReport {
  std::vector<InvariantDiff> invariant_diffs;
  Verdict pairing_verdict;
  std::optional<MoveChain> chain_witness;
};

// Invariant filter, then chain search, then bounded isometry search.
// Inequivalence is never claimed without a named separating invariant;
// Unknown propagates honestly.
CompareReport compare(const SeifertMatrix& a, const SeifertMatrix& b,
                      const CompareBudget& budget = {});

struct CorpusEntry {
  std::string name;
  SeifertMatrix matrix;
  MoveChain origin;
  InvariantReport invariants;
};

struct CorpusParams {
  std::size_t per_seed = 100;
  std::size_t max_moves = 6;
  ChainParams chain;
  std::uint64_t seed = 20260811;
};

using NamedMatrix = std::pair<std::string, SeifertMatrix>;

// unknot (0x0), trefoil [[-1,1],[0,-1]], figure-eight [[1,1],[0,-1]].
std::vector<NamedMatrix> default_seeds();

// Deterministic corpus: per-entry seeds derive from the seed name and index,
// so regeneration is byte-identical.
std::vector<CorpusEntry> corpus_generate(const std::vector<NamedMatrix>& seeds,
                                         const CorpusParams& params);

}  // namespace sequiv
