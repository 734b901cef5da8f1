#include "qcluster/lattice.hpp"

#include <algorithm>

namespace qcl {

namespace {

using Row = std::vector<BigInt>;

void axpy(Row& target, const BigInt& factor, const Row& source) {
  for (std::size_t k = 0; k < target.size(); ++k) target[k] -= factor * source[k];
}

}  // namespace

std::vector<Row> hermite_normal_form(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  BigInt q;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    bool pivot = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      pivot = true;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        axpy(rows[i], q, rows[r]);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (!pivot) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      if (q != 0) axpy(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<ExponentVector> joint_centralizer_basis(const IntMatrix& lambda, std::size_t n) {
  const std::size_t m = lambda.rows();
  if (!lambda.square() || n > m) fail(ErrorCode::DimensionMismatch, "need a square Lambda and n <= m");
  // Row-reduce [A^T | I] with A the top n rows of Lambda; rows whose A^T part
  // vanishes carry a basis of ker A in their identity part.
  std::vector<Row> rows(m, Row(n + m, BigInt(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = static_cast<long>(lambda(k, i));
    rows[i][n + i] = 1;
  }
  rows = hermite_normal_form(std::move(rows));
  std::vector<Row> kernel;
  for (const auto& row : rows) {
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n), [](const BigInt& x) { return x == 0; })) {
      kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    }
  }
  kernel = hermite_normal_form(std::move(kernel));
  std::vector<ExponentVector> basis;
  basis.reserve(kernel.size());
  for (const auto& row : kernel) {
    ExponentVector v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = to_int64(row[k]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool centralizer_is_cluster_lattice(const IntMatrix& lambda, std::size_t n) {
  const auto basis = joint_centralizer_basis(lambda, n);
  if (basis.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e(lambda.rows(), 0);
    e[i] = 1;
    if (basis[i] != e) return false;
  }
  return true;
}

}  // namespace qcl
