// Acceptance gate. Runs the ten acceptance criteria and prints one
// PASS/FAIL line for each; exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qcluster/classical.hpp"
#include "qcluster/explorer.hpp"
#include "qcluster/lattice.hpp"
#include "support.hpp"

using namespace qcl;
using qcl::testing::ratio;
using qcl::testing::uniform;

namespace {

constexpr double kTimeLimitSeconds = 60.0;
constexpr unsigned kSeedDepth = 8;
constexpr unsigned kMatrixDepth = 10;
constexpr int kLaurentWords = 1000;
constexpr std::size_t kMaxWordLength = 10;
constexpr int kSingleMutationSeeds = 200;
constexpr int kBcdTrials = 500;
constexpr int kCentralizerSeeds = 100;
constexpr int kDuplicationSeeds = 100;
constexpr unsigned kDuplicateDepth = 4;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

struct FiniteType {
  const char* name;
  IntMatrix B;
  Diagonal D;
};

const std::vector<FiniteType>& finite_types() {
  static const std::vector<FiniteType> types{
      {"A1xA1", IntMatrix{{0, 0}, {0, 0}}, Diagonal{1, 1}},
      {"A2", IntMatrix{{0, 1}, {-1, 0}}, Diagonal{1, 1}},
      {"B2", IntMatrix{{0, 1}, {-2, 0}}, Diagonal{2, 1}},
      {"G2", IntMatrix{{0, 1}, {-3, 0}}, Diagonal{3, 1}},
  };
  return types;
}

QuantumSeed principal_seed(const FiniteType& t) {
  const std::size_t n = t.B.rows();
  const IntMatrix I = IntMatrix::identity(n);
  return QuantumSeed::initial(stack(t.B, I), lambda_from_bcd(t.B, I, t.D));
}

// Everything criterion 1 produced, reused by criteria 4 and 6.
struct SeedRun {
  const FiniteType* type;
  QuantumSeed root;
  ExplorationReport report;
  std::map<Word, QuantumSeed> seeds;
  double seconds;
};

std::vector<SeedRun> seed_runs;
std::vector<std::pair<IntMatrix, ExplorationReport>> matrix_runs;

std::size_t random_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
}

Outcome criterion_1() {
  Outcome out;
  double slowest = 0;
  for (const auto& t : finite_types()) {
    SeedRun run{&t, principal_seed(t), {}, {}, 0};
    ExploreOptions options;
    options.depth = kSeedDepth;
    options.visitor = [&run](const Word& w, const QuantumSeed& s) { run.seeds.emplace(w, s); };
    const auto start = std::chrono::steady_clock::now();
    run.report = explore(run.root, options);
    run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, run.seconds);
    const std::string tag = std::string(t.name) + ": ";
    out.require(run.report.all_integrable == true, tag + "allIntegrable is not true");
    out.require(run.report.all_sign_coherent, tag + "allSignCoherent is false");
    out.require(run.report.exit_code() == 0, tag + "exit code " + std::to_string(run.report.exit_code()));
    out.require(run.seconds < kTimeLimitSeconds, tag + "took " + std::to_string(run.seconds) + " s");
    seed_runs.push_back(std::move(run));
  }
  if (out.pass) {
    out.detail = "seeds";
    for (const auto& r : seed_runs)
      out.detail += " " + std::string(r.type->name) + "=" + std::to_string(r.report.distinct_seeds);
    char buf[64];
    std::snprintf(buf, sizeof buf, ", slowest %.3f s", slowest);
    out.detail += buf;
  }
  return out;
}

Outcome criterion_2() {
  Outcome out;
  std::uint64_t nodes = 0;
  for (const auto& t : finite_types()) {
    const IntMatrix Bt = stack(t.B, IntMatrix::identity(t.B.rows()));
    ExploreOptions options;
    options.depth = kMatrixDepth;
    ExplorationReport report = check_total_sign_coherence(Bt, options);
    out.require(report.counterexamples.empty(), std::string(t.name) + ": " +
                                                    std::to_string(report.counterexamples.size()) +
                                                    " counterexamples");
    out.require(report.complete, std::string(t.name) + ": budget exhausted");
    nodes += report.nodes_visited;
    matrix_runs.emplace_back(Bt, std::move(report));
  }
  if (out.pass) out.detail = std::to_string(nodes) + " matrices checked, 0 counterexamples";
  return out;
}

Outcome criterion_3() {
  Outcome out;
  std::vector<QuantumSeed> corpus;
  for (const auto& f : qcl::testing::corpus_files()) corpus.push_back(qcl::testing::load_seed(f));
  std::mt19937_64 rng(0xacce5503);
  std::uint64_t mutations = 0;
  for (int trial = 0; trial < kLaurentWords && out.pass; ++trial) {
    QuantumSeed seed = corpus[random_index(rng, corpus.size())];
    const std::size_t len = static_cast<std::size_t>(uniform(rng, 1, kMaxWordLength));
    Word word;
    for (std::size_t s = 0; s < len; ++s) word.push_back(random_index(rng, seed.n()));
    try {
      seed = mutate_word(seed, word);
      mutations += len;
    } catch (const Error& e) {
      out.require(false, "word " + word_to_string(word) + ": " + std::string(error_code_name(e.code())) + " " +
                             e.what());
      break;
    }
    // Coefficients are integers in Z[q^{1/2}, q^{-1/2}] by representation;
    // check nothing degenerate slipped through.
    for (const auto& v : seed.vars())
      for (const auto& [a, c] : v.terms())
        for (const auto& [e, k] : c.terms()) out.require(k != 0, "stored zero coefficient");
  }
  if (out.pass) out.detail = std::to_string(kLaurentWords) + " words, " + std::to_string(mutations) + " exact divisions";
  return out;
}

Outcome criterion_4() {
  Outcome out;
  std::uint64_t edges = 0;
  for (const auto& run : seed_runs) {
    const std::string tag = std::string(run.type->name) + ": ";
    out.require(run.report.edge_checks.involution + 1 == run.report.nodes_visited, tag + "unchecked edges");
    for (const auto& c : run.report.counterexamples) out.require(false, tag + c.property + " at " + word_to_string(c.word));
    for (const auto& [word, seed] : run.seeds) {
      for (std::size_t j = 0; j < seed.n(); ++j) {
        const QuantumSeed mu = mutate_seed(seed, j);
        out.require(mutate_seed(mu, j) == seed, tag + "involution fails at " + word_to_string(word));
        out.require(check_compatible(mu.B(), mu.Lambda()) == run.root.D(), tag + "D changes at " + word_to_string(word));
        ++edges;
      }
    }
  }
  for (const auto& [Bt, report] : matrix_runs) {
    out.require(report.edge_checks.involution + 1 == report.nodes_visited, "matrix run: unchecked edges");
    for (const auto& c : report.counterexamples) out.require(false, "matrix run: " + c.property);
    edges += report.edge_checks.involution;
  }
  if (out.pass) out.detail = std::to_string(edges) + " edges";
  return out;
}

Outcome criterion_5() {
  Outcome out;
  std::mt19937_64 rng(0xacce5505);
  for (int trial = 0; trial < kSingleMutationSeeds; ++trial) {
    const QuantumSeed seed = qcl::testing::random_integrable_seed(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
    out.require(is_integrable(seed) && is_sign_coherent(seed.B()).coherent(), "generator produced a bad seed");
    for (std::size_t k = 0; k < seed.n(); ++k) {
      const IntMatrix L = recover_lambda(mutate_seed(seed, k).vars());
      for (std::size_t i = 0; i < seed.n(); ++i)
        for (std::size_t j = 0; j < seed.n(); ++j)
          out.require(L(i, j) == 0, "trial " + std::to_string(trial) + ": mutation at " + std::to_string(k + 1) +
                                        " is not integrable");
    }
  }
  if (out.pass) out.detail = std::to_string(kSingleMutationSeeds) + " seeds, every single mutation integrable";
  return out;
}

Outcome criterion_6() {
  Outcome out;
  std::uint64_t checked = 0;
  for (const auto& run : seed_runs) {
    const std::string tag = std::string(run.type->name) + ": ";
    const RationalMatrix L0 = to_rational(run.root.initial_lambda());
    const std::size_t rank = run.root.torus()->rank();
    for (const auto& [word, seed] : run.seeds) {
      const auto vars = qcl::testing::specialize(seed);
      if (word.empty()) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
          ExponentVector e(rank, 0);
          e[i] = 1;
          out.require(vars[i] == classical_monomial(e), tag + "root is not the initial cluster");
        }
      } else {
        const Word parent_word(word.begin(), word.end() - 1);
        const auto parent = run.seeds.find(parent_word);
        out.require(parent != run.seeds.end(), tag + "parent of " + word_to_string(word) + " not visited");
        if (parent == run.seeds.end()) continue;
        out.require(qcl::testing::classical_exchange_holds(qcl::testing::specialize(parent->second), vars,
                                                           parent->second.B(), word.back(), rank),
                    tag + "classical mutation differs at " + word_to_string(word));
      }
      for (std::size_t i = 0; i < seed.n(); ++i)
        for (std::size_t j = 0; j < seed.n(); ++j)
          out.require(poisson_bracket(vars[i], vars[j], L0).empty(),
                      tag + "nonzero bracket at " + word_to_string(word));
      ++checked;
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " seeds match the commutative oracle";
  return out;
}

// Unknowns: Lambda1 (n x n, row-major) then the strict upper triangle of
// Lambda2; Lambda = [[0, L1], [-L1^T, L2]]. Equations: (B; I)^T Lambda = (D 0).
std::optional<RationalMatrix> solve_block_system(const RationalMatrix& B, const std::vector<Rational>& D) {
  const std::size_t n = B.rows();
  const std::size_t m = 2 * n;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) slots.emplace_back(i, n + j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(n + i, n + j);
  auto lambda_of = [&](const std::vector<Rational>& x) {
    RationalMatrix L(m, m);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      L(slots[s].first, slots[s].second) = x[s];
      L(slots[s].second, slots[s].first) = -x[s];
    }
    return L;
  };
  RationalMatrix Bt(m, n);
  Bt.set_block(0, 0, B);
  Bt.set_block(n, 0, RationalMatrix::identity(n));
  // Column s of the system is Bt^T applied to the basis matrix of slot s.
  std::vector<std::vector<Rational>> A(n * m, std::vector<Rational>(slots.size()));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    std::vector<Rational> unit(slots.size());
    unit[s] = 1;
    const RationalMatrix col = Bt.transpose() * lambda_of(unit);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) A[r * m + c][s] = col(r, c);
  }
  std::vector<Rational> rhs(n * m);
  for (std::size_t r = 0; r < n; ++r) rhs[r * m + r] = D[r];
  std::size_t rank = 0;
  const auto x = qcl::testing::solve_unique(std::move(A), std::move(rhs), rank);
  if (!x) return std::nullopt;
  return lambda_of(*x);
}

Outcome criterion_7() {
  Outcome out;
  std::mt19937_64 rng(0xacce5507);
  for (int trial = 0; trial < kBcdTrials && out.pass; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<Rational> D(n);
    for (auto& d : D) d = ratio(uniform(rng, 1, 6), uniform(rng, 1, 4));
    RationalMatrix S(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        S(i, j) = ratio(uniform(rng, -4, 4), uniform(rng, 1, 3));
        S(j, i) = -S(i, j);
      }
    RationalMatrix B(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) B(i, j) = S(i, j) / D[i];
    RationalMatrix C(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C(i, j) = ratio(uniform(rng, -3, 3), uniform(rng, 1, 2));
    } while (determinant(C) == 0);

    const std::string tag = "trial " + std::to_string(trial) + ": ";
    RationalMatrix Bt(2 * n, n);
    Bt.set_block(0, 0, B);
    Bt.set_block(n, 0, C);
    out.require(check_compatible(Bt, lambda_from_bcd(B, C, D)) == D, tag + "output is not compatible with D");

    const RationalMatrix L = lambda_from_bcd(B, RationalMatrix::identity(n), D);
    const auto solved = solve_block_system(B, D);
    out.require(solved.has_value(), tag + "linear system has no unique solution");
    if (solved) out.require(*solved == L, tag + "C = I output differs from the linear-system solution");
  }
  if (out.pass) out.detail = std::to_string(kBcdTrials) + " triples compatible, C = I solutions unique and equal";
  return out;
}

Outcome criterion_8() {
  Outcome out;
  std::mt19937_64 rng(0xacce5508);
  for (int trial = 0; trial < kCentralizerSeeds; ++trial) {
    const QuantumSeed seed = qcl::testing::random_integrable_seed(rng, static_cast<std::size_t>(uniform(rng, 1, 3)));
    const std::size_t n = seed.n();
    out.require(determinant(to_rational(seed.Lambda().block(0, n, n, n))) != 0, "generator gave singular Lambda_1");
    std::vector<ExponentVector> expected;
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector e(seed.m(), 0);
      e[i] = 1;
      expected.push_back(e);
    }
    out.require(joint_centralizer_basis(seed.Lambda(), n) == expected,
                "trial " + std::to_string(trial) + ": centralizer basis differs from e_1..e_n");
  }
  // Lambda_1 = diag(1, 0): X_4 joins the centralizer and the check flags it.
  const IntMatrix singular{{0, 0, 1, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}};
  const auto basis = joint_centralizer_basis(singular, 2);
  out.require(basis.size() == 3 && !centralizer_is_cluster_lattice(singular, 2),
              "singular Lambda_1 case not flagged");
  if (out.pass) out.detail = std::to_string(kCentralizerSeeds) + " seeds give e_1..e_n; singular case has rank-3 centralizer";
  return out;
}

Outcome criterion_9() {
  Outcome out;
  const QuantumSeed root = qcl::testing::load_seed("coefficient_free_a2.json");
  const Word word{0, 1, 0, 1, 0};
  const PeriodicityResult p = periodicity_scan(root, word);
  out.require(p.up_to_permutation, "not equal up to permutation");
  out.require(p.permutation == std::vector<std::size_t>{1, 0}, "permutation is not the transposition");
  QuantumSeed direct = root;
  for (std::size_t k : word) direct = mutate_seed(direct, k);
  out.require(direct.vars()[0] == root.vars()[1] && direct.vars()[1] == root.vars()[0],
              "five-step computation does not end at (X2, X1)");
  if (out.pass) out.detail = "word 1,2,1,2,1 gives transposition 1<->2";
  return out;
}

Outcome criterion_10() {
  Outcome out;
  std::mt19937_64 rng(0xacce5510);
  std::vector<QuantumSeed> corpus;
  for (const auto& f : qcl::testing::corpus_files()) corpus.push_back(qcl::testing::load_seed(f));
  int explored = 0;
  for (int trial = 0; trial < kDuplicationSeeds; ++trial) {
    // Alternate between corpus seeds and random integrable seeds, each pushed
    // along a short random word so B~ is rarely principal. Entries stay small
    // (|b_ij b_ji| <= 4) so the depth-4 explorations below remain tame.
    QuantumSeed seed = trial % 2 == 0 ? corpus[random_index(rng, corpus.size())]
                                      : qcl::testing::random_integrable_seed(
                                            rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 1, 2);
    const std::size_t len = static_cast<std::size_t>(uniform(rng, 0, 3));
    for (std::size_t s = 0; s < len; ++s) seed = mutate_seed(seed, random_index(rng, seed.n()));
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    try {
      const DuplicatedSeed dup = duplicate_seed(seed);
      const QuantumSeed& s = dup.seed();
      out.require(is_principal(s.B()), tag + "not principal");
      out.require(is_integrable(s), tag + "not integrable");
      out.require(check_compatible(s.B(), s.Lambda()) == s.D(), tag + "not compatible");
      if (s.n() <= 2) {
        ExploreOptions options;
        options.depth = kDuplicateDepth;
        const ExplorationReport r = explore(s, options);
        out.require(r.all_integrable == true, tag + "duplicated exploration not integrable");
        ++explored;
      }
    } catch (const Error& e) {
      out.require(false, tag + std::string(error_code_name(e.code())) + " " + e.what());
    }
  }
  if (out.pass) {
    out.detail = std::to_string(kDuplicationSeeds) + " duplications verified, " + std::to_string(explored) +
                 " rank <= 2 explored to depth 4";
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"finite-type principal seeds stay integrable and sign-coherent (depth 8)", criterion_1},
      {"total sign-coherence of principal matrices (depth 10)", criterion_2},
      {"Laurent property along random mutation words", criterion_3},
      {"involution and constant D on every explored edge", criterion_4},
      {"single mutations of integrable sign-coherent seeds", criterion_5},
      {"classical specialization and vanishing brackets", criterion_6},
      {"block Lambda from (B, C, D): compatibility and uniqueness", criterion_7},
      {"joint centralizer of integrable m = 2n seeds", criterion_8},
      {"quantum pentagon periodicity", criterion_9},
      {"duplicated seeds are principal, integrable, compatible", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
