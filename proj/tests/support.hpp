#pragma once

// Shared fixtures, random generators and independent oracles for the tests.
// Oracles here deliberately avoid the library's own algorithms: mutation uses
// the |b| form of the exchange rule, linear systems are solved by plain
// Gaussian elimination over Q, and classical mutation is checked through the
// exchange relation instead of division.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcluster/classical.hpp"
#include "qcluster/matrix_core.hpp"
#include "qcluster/seed.hpp"
#include "qcluster/serialize.hpp"

namespace qcl::testing {

inline std::string data_path(const std::string& name) { return std::string(QCL_TEST_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline QuantumSeed load_seed(const std::string& name) { return seed_from_text(read_data(name)).seed; }

/// The finite-type corpus used by the property tests.
inline std::vector<std::string> corpus_files() {
  return {"rank1.json",         "principal_a1xa1.json", "principal_a2.json",          "principal_b2.json",
          "principal_g2.json",  "principal_a3.json",    "coefficient_free_a2.json"};
}

/// b'_ij = -b_ij on row/column k, else b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
inline IntMatrix oracle_mutate(const IntMatrix& B, std::size_t k) {
  IntMatrix out(B.rows(), B.cols());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -B(i, j);
      } else {
        const std::int64_t bik = B(i, k), bkj = B(k, j);
        out(i, j) = B(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return out;
}

/// Code of the qcl::Error thrown by fn, if any.
template <class F>
std::optional<ErrorCode> error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational ratio(std::int64_t p, std::int64_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random skew-symmetrizable B = K D with K skew-symmetric, so D B is skew.
struct RandomExchange {
  IntMatrix B;
  Diagonal D;
};

inline RandomExchange random_skew_symmetrizable(std::mt19937_64& rng, std::size_t n, std::int64_t max_entry = 2,
                                                std::int64_t max_d = 3) {
  RandomExchange out{IntMatrix(n, n), Diagonal(n)};
  for (auto& d : out.D) d = uniform(rng, 1, max_d);
  IntMatrix K(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      K(i, j) = uniform(rng, -max_entry, max_entry);
      K(j, i) = -K(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.B(i, j) = K(i, j) * out.D[j];
  return out;
}

/// Unimodular C whose columns are sign-coherent: a nonnegative unitriangular
/// matrix with its rows shuffled and its columns negated at random.
inline IntMatrix random_unimodular_coherent(std::mt19937_64& rng, std::size_t n) {
  IntMatrix U = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) U(i, j) = uniform(rng, 0, 2);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix C(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t sign = uniform(rng, 0, 1) ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) C(perm[i], j) = sign * U(i, j);
  }
  return C;
}

/// Integrable m = 2n seed with exchange matrix (B; C).
inline QuantumSeed random_integrable_seed(std::mt19937_64& rng, std::size_t n, std::int64_t max_entry = 2,
                                          std::int64_t max_d = 3) {
  const RandomExchange ex = random_skew_symmetrizable(rng, n, max_entry, max_d);
  const IntMatrix C = random_unimodular_coherent(rng, n);
  const IntMatrix lambda = lambda_from_bcd(ex.B, C, ex.D);
  return QuantumSeed::initial(stack(ex.B, C), lambda);
}

/// Solves A x = b over Q by Gauss-Jordan elimination. Returns the solution
/// when it exists and is unique; `rank` receives the rank of A.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                                                         std::size_t& rank) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[rank]);
    std::swap(b[p], b[rank]);
    const Rational inv = 1 / A[rank][c];
    for (auto& x : A[rank]) x *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      const Rational f = A[r][c];
      for (std::size_t k = 0; k < cols; ++k) A[r][k] -= f * A[rank][k];
      b[r] -= f * b[rank];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  if (rank != cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = b[r];
  return x;
}

/// Commutative monomial prod x_i^{a_i} in the given cluster.
inline ClassicalLaurent classical_cluster_monomial(const std::vector<ClassicalLaurent>& cluster,
                                                   const ExponentVector& a, std::size_t rank) {
  ClassicalLaurent out = classical_monomial(ExponentVector(rank, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::int64_t e = 0; e < a[i]; ++e) out = out * cluster[i];
  return out;
}

/// Commutative exchange relation: does `mutated` arise from `cluster` by the
/// classical mutation at k with exchange matrix B? Checks x'_k x_k equals the
/// binomial and that the other variables are untouched.
inline bool classical_exchange_holds(const std::vector<ClassicalLaurent>& cluster,
                                     const std::vector<ClassicalLaurent>& mutated, const IntMatrix& B, std::size_t k,
                                     std::size_t rank) {
  for (std::size_t i = 0; i < cluster.size(); ++i)
    if (i != k && cluster[i] != mutated[i]) return false;
  ExponentVector pos(B.rows()), neg(B.rows());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    pos[i] = std::max<std::int64_t>(B(i, k), 0);
    neg[i] = std::max<std::int64_t>(-B(i, k), 0);
  }
  const ClassicalLaurent rhs =
      classical_cluster_monomial(cluster, pos, rank) + classical_cluster_monomial(cluster, neg, rank);
  return mutated[k] * cluster[k] == rhs;
}

inline std::vector<ClassicalLaurent> specialize(const QuantumSeed& seed) {
  std::vector<ClassicalLaurent> out;
  for (const auto& v : seed.vars()) out.push_back(specialize_q1(v));
  return out;
}

}  // namespace qcl::testing
