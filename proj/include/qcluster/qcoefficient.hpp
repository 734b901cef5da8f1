#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/matrix.hpp"

namespace qcl {

/// Element of Z[q^{1/2}, q^{-1/2}]. Exponents are stored doubled, so the term
/// (2, c) is c*q and (-1, c) is c*q^{-1/2}. Terms are sorted by exponent and
/// never carry a zero coefficient.
class QCoefficient {
 public:
  using Term = std::pair<std::int64_t, BigInt>;

  QCoefficient() = default;
  QCoefficient(long c);  // NOLINT: integers embed as constants
  QCoefficient(const BigInt& c);  // NOLINT

  /// c * q^{doubled/2}
  static QCoefficient q_power(std::int64_t doubled, const BigInt& c = 1);
  static QCoefficient from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Single term +-q^k.
  bool is_unit() const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  /// Multiply by q^{doubled/2}.
  QCoefficient shifted(std::int64_t doubled) const;

  QCoefficient& operator+=(const QCoefficient& o);
  QCoefficient& operator-=(const QCoefficient& o);
  QCoefficient operator-() const;
  friend QCoefficient operator+(QCoefficient a, const QCoefficient& b) { return a += b; }
  friend QCoefficient operator-(QCoefficient a, const QCoefficient& b) { return a -= b; }
  friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b);
  friend bool operator==(const QCoefficient&, const QCoefficient&) = default;

  /// Exact quotient in Z[q^{+-1/2}]; throws DivisionByZero or NotDivisible.
  QCoefficient exact_div(const QCoefficient& divisor) const;

  /// Value at q^{1/2} = 1.
  BigInt at_one() const;

  /// e.g. "q^(-1/2)", "-2", "(q + 2q^(1/2))"
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qcl
