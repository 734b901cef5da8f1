#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcluster/matrix_core.hpp"
#include "qcluster/quantum_laurent.hpp"

namespace qcl {

/// Exchange data plus the current cluster variables, each expressed in the
/// coordinates of the initial torus. Immutable once built.
class QuantumSeed {
 public:
  /// Initial seed: variables are the torus generators X_1..X_m.
  static QuantumSeed initial(const IntMatrix& B, const IntMatrix& Lambda);

  /// Seed with explicit variables over `torus`. Verifies that the variables
  /// pairwise q-commute according to Lambda and that (B, Lambda) is compatible.
  static QuantumSeed from_parts(const IntMatrix& B, const IntMatrix& Lambda,
                                std::vector<QuantumLaurent> vars, TorusPtr torus);

  const ExchangeData& exchange() const noexcept { return exchange_; }
  const IntMatrix& B() const noexcept { return exchange_.B; }
  const IntMatrix& Lambda() const noexcept { return exchange_.Lambda; }
  const Diagonal& D() const noexcept { return exchange_.D; }
  std::size_t m() const noexcept { return exchange_.m(); }
  std::size_t n() const noexcept { return exchange_.n(); }
  const std::vector<QuantumLaurent>& vars() const noexcept { return vars_; }
  const TorusPtr& torus() const noexcept { return torus_; }
  const IntMatrix& initial_lambda() const noexcept { return torus_->lambda(); }

  friend bool operator==(const QuantumSeed& a, const QuantumSeed& b);

 private:
  QuantumSeed(ExchangeData exchange, std::vector<QuantumLaurent> vars, TorusPtr torus)
      : exchange_(std::move(exchange)), vars_(std::move(vars)), torus_(std::move(torus)) {}

  friend QuantumSeed mutate_seed(const QuantumSeed&, std::size_t);

  ExchangeData exchange_;
  std::vector<QuantumLaurent> vars_;
  TorusPtr torus_;
};

/// Replaces X_j by X^{[b_j]_+ - e_j} + X^{[-b_j]_+ - e_j} (normalized monomials
/// in the current cluster) and B by its mutation; Lambda is recovered from the
/// q-commutators of the new cluster. Throws IndexOutOfRange, NotDivisible, or
/// Integrity if D changes.
QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t j);

QuantumSeed mutate_word(QuantumSeed seed, const std::vector<std::size_t>& word);

/// Lambda_ij = 0 for i, j < n, cross-checked against the actual commutators
/// of the variables (throws Integrity on disagreement).
bool is_integrable(const QuantumSeed& seed);

/// Matrix of q-commutation exponents. Throws NotQCommuting or NonIntegerExponent.
IntMatrix recover_lambda(const std::vector<QuantumLaurent>& vars);

/// sigma with b.vars[sigma[i]] == a.vars[i], mutable indices mapped to mutable
/// ones, and B, Lambda transported accordingly.
std::optional<std::vector<std::size_t>> equal_up_to_permutation(const QuantumSeed& a,
                                                                const QuantumSeed& b);

/// Seed in the doubled torus with Lambda^(2) = diag(Lambda, -Lambda):
///   X*_i = X^{(e_i, e_i)},  X*_{i+n} = X^{(b_i^{>n}, -b_i^{<=n})},  B* = (B; I_n).
/// The original torus embeds through X^e -> X^{(e, 0)}. The coefficient
/// subalgebra generated by X^{(e_i,0)}, i > n, and X^{(0,e_j)} is not modelled.
class DuplicatedSeed {
 public:
  explicit DuplicatedSeed(QuantumSeed seed, std::size_t base_rank)
      : seed_(std::move(seed)), base_rank_(base_rank) {}

  const QuantumSeed& seed() const noexcept { return seed_; }
  std::size_t base_rank() const noexcept { return base_rank_; }
  ExponentVector embed(const ExponentVector& e) const;

 private:
  QuantumSeed seed_;
  std::size_t base_rank_;
};

struct DuplicateParts {
  IntMatrix lambda2;  // 2m x 2m
  IntMatrix B;        // 2n x n
  std::vector<ExponentVector> exponents;  // 2n exponent vectors in Z^{2m}
};

/// Raw construction, no verification; usable for any (B, Lambda).
DuplicateParts duplicate_parts(const IntMatrix& B, const IntMatrix& Lambda);

/// Builds the duplicated seed from the current exchange data of `seed`, treating
/// its cluster as the torus generators. Verifies principal + integrable + compatible.
DuplicatedSeed duplicate_seed(const QuantumSeed& seed);

}  // namespace qcl
