#pragma once

// Exchange-matrix layer: Fomin-Zelevinsky mutation, compatibility with a
// skew-symmetric Lambda, sign-coherence, principality and the m = 2n
// classification constructor. Indices are 0-based here; the C API and CLI
// translate from 1-based user input.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcluster/matrix.hpp"

namespace qcl {

/// Positive diagonal of D, stored as its diagonal entries.
using Diagonal = std::vector<std::int64_t>;

struct ExchangeData {
  IntMatrix B;       // m x n, top n x n block skew-symmetrizable
  IntMatrix Lambda;  // m x m, skew-symmetric
  Diagonal D;        // B^T Lambda = (D 0)

  std::size_t m() const noexcept { return B.rows(); }
  std::size_t n() const noexcept { return B.cols(); }

  /// Validates shapes and skew-symmetry, then derives D via check_compatible.
  static ExchangeData make(IntMatrix B, IntMatrix Lambda);

  friend bool operator==(const ExchangeData&, const ExchangeData&) = default;
};

/// Mutation in direction k (0-based, k < n). Involutive.
IntMatrix mutate_matrix(const IntMatrix& B, std::size_t k);

/// Returns D when B^T Lambda = (D 0) with D positive diagonal.
/// Throws NotSkewSymmetric, DimensionMismatch, NotBlockDiagonal or NonPositiveD.
Diagonal check_compatible(const IntMatrix& B, const IntMatrix& Lambda);

/// Same test over the rationals; D may be any positive rational diagonal.
std::vector<Rational> check_compatible(const RationalMatrix& B,
                                       const RationalMatrix& Lambda);

struct MixedSignColumn {
  std::size_t column;
  std::size_t positive_row;
  std::size_t negative_row;
};

struct SignCoherence {
  std::vector<int> epsilon;                 // one +-1 per column
  std::optional<MixedSignColumn> violation; // first offending column

  bool coherent() const noexcept { return !violation.has_value(); }
};

/// Inspects the frozen rows n..m-1 of every column. An all-zero frozen
/// column (or m == n) yields epsilon = +1.
SignCoherence is_sign_coherent(const IntMatrix& B);

/// Smallest positive integer D with (DB)^T = -DB, if one exists.
std::optional<Diagonal> skew_symmetrizer(const IntMatrix& B);

bool skew_symmetrizer_check(const IntMatrix& B, const Diagonal& D);
bool skew_symmetrizer_check(const RationalMatrix& B, const std::vector<Rational>& D);

/// m = 2n, bottom block I_n, top block skew-symmetrizable.
bool is_principal(const IntMatrix& B);

/// Block solution Lambda = [[0, L1], [-L1^T, L2]] of B~^T Lambda = (D 0) for
/// B~ = (B; C), with L1 = -D C^-1 and L2 = -(C^-1)^T D B C^-1.
/// Throws SingularC or NotSkewSymmetrizable; the result is re-verified.
RationalMatrix lambda_from_bcd(const RationalMatrix& B, const RationalMatrix& C,
                               const std::vector<Rational>& D);

/// Integer convenience wrapper; throws InvalidArgument if Lambda is not integral.
IntMatrix lambda_from_bcd(const IntMatrix& B, const IntMatrix& C, const Diagonal& D);

/// (B; C) stacked into a 2n x n matrix.
IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom);

}  // namespace qcl
