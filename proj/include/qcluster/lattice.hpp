#pragma once

#include <cstddef>
#include <vector>

#include "qcluster/matrix.hpp"
#include "qcluster/quantum_laurent.hpp"

namespace qcl {

/// Hermite normal form (row style) of the lattice spanned by `rows`:
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
std::vector<std::vector<BigInt>> hermite_normal_form(std::vector<std::vector<BigInt>> rows);

/// Basis (in Hermite normal form) of {a in Z^m : sum_j lambda_ij a_j = 0, i < n}.
/// The span of X^a over this lattice is the joint centralizer of X_1..X_n.
std::vector<ExponentVector> joint_centralizer_basis(const IntMatrix& lambda, std::size_t n);

/// True when the joint centralizer lattice is exactly Z e_1 + ... + Z e_n,
/// i.e. the Laurent polynomials in X_1..X_n are maximal commutative at the
/// monomial level.
bool centralizer_is_cluster_lattice(const IntMatrix& lambda, std::size_t n);

}  // namespace qcl
