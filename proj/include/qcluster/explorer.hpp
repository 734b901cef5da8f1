#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcluster/seed.hpp"

namespace qcl {

/// Mutation word, 0-based indices, applied left to right.
using Word = std::vector<std::size_t>;

/// "1,2,1" (1-based); the empty word prints as "".
std::string word_to_string(const Word& w);
/// Parses "1,2,1" into 0-based indices; throws Parse.
Word parse_word(const std::string& text);

inline constexpr std::uint64_t kDefaultNodeBudget = 100000;

struct ExploreOptions {
  unsigned depth = 1;
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned jobs = 1;
  /// Also count seeds modulo relabelling.
  bool count_up_to_permutation = false;
  /// Called once per distinct seed, in BFS / lexicographic order.
  std::function<void(const Word&, const QuantumSeed&)> visitor;
};

struct Counterexample {
  Word word;
  std::string property;
  std::string detail;
};

struct EdgeChecks {
  std::uint64_t involution = 0;
  std::uint64_t compatibility = 0;
};

struct ExplorationReport {
  std::string mode;  // "seed" or "matrix"
  std::string root_digest;
  unsigned depth = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes_visited = 0;
  std::uint64_t distinct_seeds = 0;
  std::optional<std::uint64_t> distinct_up_to_permutation;
  std::optional<bool> all_integrable;  // absent in matrix mode
  bool all_sign_coherent = true;
  bool complete = true;  // false when the node budget cut the search short
  bool closed = false;   // no unseen seed is reachable by one more mutation
  std::vector<Counterexample> counterexamples;
  EdgeChecks edge_checks;

  /// 1 on any counterexample, else 4 when incomplete, else 0.
  int exit_code() const;
  /// Canonical JSON, stable byte-for-byte for identical inputs.
  std::string to_json() const;
};

/// BFS over mutation words of length <= depth, deduplicated by exact seed
/// equality. Records integrability and sign-coherence per seed and checks
/// involution and D-invariance on every edge.
ExplorationReport explore(const QuantumSeed& root, const ExploreOptions& options);

/// Matrix-only BFS; reports every non-sign-coherent matrix reached.
ExplorationReport check_total_sign_coherence(const IntMatrix& B, const ExploreOptions& options);

struct PeriodicityResult {
  bool returns_to_start = false;
  bool up_to_permutation = false;
  std::vector<std::size_t> permutation;  // empty unless up_to_permutation
};

PeriodicityResult periodicity_scan(const QuantumSeed& seed, const Word& word);

}  // namespace qcl
