#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcluster/matrix.hpp"
#include "qcluster/qcoefficient.hpp"

namespace qcl {

using ExponentVector = std::vector<std::int64_t>;

/// Coordinatewise max(a_i, 0).
ExponentVector plus_trunc(const ExponentVector& a);

/// Based quantum torus with relations X_i X_j = q^{lambda_ij} X_j X_i.
class QuantumTorus {
 public:
  explicit QuantumTorus(IntMatrix lambda);

  std::size_t rank() const noexcept { return lambda_.rows(); }
  const IntMatrix& lambda() const noexcept { return lambda_; }

  /// Twist of the ordered-product basis:
  /// X^(u) X^(v) = q^{twist(u,v)} X^(u+v), X^(a) = X_1^{a_1}...X_m^{a_m}.
  std::int64_t twist(const ExponentVector& u, const ExponentVector& v) const;
  /// Doubled exponent of the normalization q^{(1/2) sum_{i<j} lambda_ji a_i a_j}.
  std::int64_t normalization(const ExponentVector& a) const;
  /// a^T Lambda b
  std::int64_t pairing(const ExponentVector& a, const ExponentVector& b) const;

  friend bool operator==(const QuantumTorus& a, const QuantumTorus& b) {
    return a.lambda_ == b.lambda_;
  }

 private:
  IntMatrix lambda_;
};

using TorusPtr = std::shared_ptr<const QuantumTorus>;

TorusPtr make_torus(IntMatrix lambda);

/// Element of the based quantum torus, stored in the ordered-product basis:
/// a term (a, c) denotes c * X_1^{a_1} ... X_m^{a_m}.
class QuantumLaurent {
 public:
  using TermMap = std::map<ExponentVector, QCoefficient>;

  explicit QuantumLaurent(TorusPtr torus);
  QuantumLaurent(TorusPtr torus, TermMap terms);

  static QuantumLaurent zero(TorusPtr torus) { return QuantumLaurent(std::move(torus)); }
  static QuantumLaurent one(const TorusPtr& torus);
  /// Normalized monomial X^a.
  static QuantumLaurent monomial(const TorusPtr& torus, const ExponentVector& a);
  /// Generator X_i (0-based).
  static QuantumLaurent generator(const TorusPtr& torus, std::size_t i);

  const TorusPtr& torus() const noexcept { return torus_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool same_torus(const QuantumLaurent& o) const;

  QuantumLaurent& operator+=(const QuantumLaurent& o);
  QuantumLaurent& operator-=(const QuantumLaurent& o);
  friend QuantumLaurent operator+(QuantumLaurent a, const QuantumLaurent& b) { return a += b; }
  friend QuantumLaurent operator-(QuantumLaurent a, const QuantumLaurent& b) { return a -= b; }
  friend QuantumLaurent operator*(const QuantumLaurent& f, const QuantumLaurent& g);
  QuantumLaurent scaled(const QCoefficient& c) const;
  QuantumLaurent pow(std::uint64_t e) const;

  /// Exact equality; elements of different tori never compare equal.
  friend bool operator==(const QuantumLaurent& a, const QuantumLaurent& b);

  /// Adds c * X^(a) in the ordered-product basis.
  void add_term(const ExponentVector& a, const QCoefficient& c);

  std::string to_string() const;

 private:

  TorusPtr torus_;
  TermMap terms_;
};

QuantumLaurent ql_mul(const QuantumLaurent& f, const QuantumLaurent& g);

/// h with h * g == f. Leading-term elimination in lexicographic order,
/// bounded by the per-coordinate degree box of any possible quotient.
/// Throws DivisionByZero, NotDivisible or TorusMismatch.
QuantumLaurent ql_exact_div(const QuantumLaurent& f, const QuantumLaurent& g);

/// Doubled t with f g = q^t g f; throws NotQCommuting.
std::int64_t q_commutation_exponent(const QuantumLaurent& f, const QuantumLaurent& g);

}  // namespace qcl
