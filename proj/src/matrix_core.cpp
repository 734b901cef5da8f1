#include "qcluster/matrix_core.hpp"

#include <numeric>
#include <sstream>

namespace qcl {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotBlockDiagonal: return "NotBlockDiagonal";
    case ErrorCode::NonPositiveD: return "NonPositiveD";
    case ErrorCode::SingularC: return "SingularC";
    case ErrorCode::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotQCommuting: return "NotQCommuting";
    case ErrorCode::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorCode::TorusMismatch: return "TorusMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Integrity: return "IntegrityError";
  }
  return "Unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "64-bit overflow in product");
  return r;
}

std::int64_t to_int64(const BigInt& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) fail(ErrorCode::Overflow, "integer exceeds 64 bits");
  return x.get_si();
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
  return r;
}

IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (x.get_den() != 1) {
        fail(ErrorCode::InvalidArgument, "entry " + x.get_str() + " is not an integer");
      }
      r(i, j) = to_int64(x.get_num());
    }
  }
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return c;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) fail(ErrorCode::SingularC, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RationalMatrix diagonal(const std::vector<Rational>& d) {
  RationalMatrix r(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

IntMatrix diagonal(const std::vector<std::int64_t>& d) {
  IntMatrix r(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

namespace {

template <typename M, typename F>
std::string format_matrix(const M& m, F&& entry) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << entry(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const IntMatrix& m) {
  return format_matrix(m, [](std::int64_t x) { return std::to_string(x); });
}

std::string to_string(const RationalMatrix& m) {
  return format_matrix(m, [](const Rational& x) { return x.get_str(); });
}

// ---------------------------------------------------------------------------

ExchangeData ExchangeData::make(IntMatrix B, IntMatrix Lambda) {
  Diagonal D = check_compatible(B, Lambda);
  return ExchangeData{std::move(B), std::move(Lambda), std::move(D)};
}

IntMatrix mutate_matrix(const IntMatrix& B, std::size_t k) {
  if (k >= B.cols()) {
    fail(ErrorCode::IndexOutOfRange, "mutation index " + std::to_string(k + 1) +
                                         " outside 1.." + std::to_string(B.cols()));
  }
  IntMatrix out(B.rows(), B.cols());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -B(i, j);
        continue;
      }
      const std::int64_t bik = B(i, k);
      const std::int64_t prod = checked_mul(bik, B(k, j));
      std::int64_t delta = 0;
      if (prod > 0) delta = bik > 0 ? prod : -prod;
      out(i, j) = checked_add(B(i, j), delta);
    }
  }
  return out;
}

Diagonal check_compatible(const IntMatrix& B, const IntMatrix& Lambda) {
  const std::size_t m = B.rows();
  const std::size_t n = B.cols();
  if (n == 0 || n > m) fail(ErrorCode::DimensionMismatch, "exchange matrix must be m x n with 1 <= n <= m");
  if (Lambda.rows() != m || Lambda.cols() != m) {
    fail(ErrorCode::DimensionMismatch, "Lambda must be " + std::to_string(m) + " x " + std::to_string(m));
  }
  if (!Lambda.is_skew_symmetric()) fail(ErrorCode::NotSkewSymmetric, "Lambda is not skew-symmetric");

  const IntMatrix P = B.transpose() * Lambda;  // n x m
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && P(i, j) != 0) {
        fail(ErrorCode::NotBlockDiagonal,
             "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") of B^T Lambda is " + std::to_string(P(i, j)) + ", expected 0");
      }
    }
  }
  Diagonal D(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (P(i, i) <= 0) {
      fail(ErrorCode::NonPositiveD, "diagonal entry " + std::to_string(i + 1) + " of D is " +
                                        std::to_string(P(i, i)));
    }
    D[i] = P(i, i);
  }
  return D;
}

std::vector<Rational> check_compatible(const RationalMatrix& B, const RationalMatrix& Lambda) {
  const std::size_t m = B.rows();
  const std::size_t n = B.cols();
  if (n == 0 || n > m) fail(ErrorCode::DimensionMismatch, "exchange matrix must be m x n with 1 <= n <= m");
  if (Lambda.rows() != m || Lambda.cols() != m) fail(ErrorCode::DimensionMismatch, "Lambda shape");
  if (!Lambda.is_skew_symmetric()) fail(ErrorCode::NotSkewSymmetric, "Lambda is not skew-symmetric");
  const RationalMatrix P = B.transpose() * Lambda;
  std::vector<Rational> D(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && P(i, j) != 0) {
        fail(ErrorCode::NotBlockDiagonal, "entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") of B^T Lambda is nonzero");
      }
    }
    if (P(i, i) <= 0) fail(ErrorCode::NonPositiveD, "diagonal entry " + std::to_string(i + 1) + " of D is not positive");
    D[i] = P(i, i);
  }
  return D;
}

SignCoherence is_sign_coherent(const IntMatrix& B) {
  const std::size_t m = B.rows();
  const std::size_t n = B.cols();
  SignCoherence result;
  result.epsilon.assign(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> pos, neg;
    for (std::size_t i = n; i < m; ++i) {
      if (B(i, j) > 0 && !pos) pos = i;
      if (B(i, j) < 0 && !neg) neg = i;
    }
    if (pos && neg) {
      if (!result.violation) result.violation = MixedSignColumn{j, *pos, *neg};
      continue;
    }
    if (neg) result.epsilon[j] = -1;
  }
  return result;
}

std::optional<Diagonal> skew_symmetrizer(const IntMatrix& B) {
  if (!B.square()) return std::nullopt;
  const std::size_t n = B.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (B(i, i) != 0) return std::nullopt;
    for (std::size_t j = 0; j < i; ++j) {
      const bool zi = B(i, j) == 0, zj = B(j, i) == 0;
      if (zi != zj) return std::nullopt;
      if (!zi && (B(i, j) > 0) == (B(j, i) > 0)) return std::nullopt;
    }
  }
  // d_i b_ij = -d_j b_ji fixes d_j / d_i along every edge; propagate per component.
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    d[root] = 1;
    std::vector<std::size_t> stack{root}, component{root};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (B(i, j) == 0) continue;
        const Rational want = d[i] * Rational(static_cast<long>(B(i, j))) /
                              Rational(static_cast<long>(-B(j, i)));
        if (d[j] == 0) {
          d[j] = want;
          stack.push_back(j);
          component.push_back(j);
        } else if (d[j] != want) {
          return std::nullopt;
        }
      }
    }
    BigInt lcm = 1;
    for (std::size_t i : component) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d[i].get_den_mpz_t());
    BigInt g = 0;
    for (std::size_t i : component) {
      d[i] *= lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num_mpz_t());
    }
    for (std::size_t i : component) d[i] /= g;
  }
  Diagonal out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = to_int64(d[i].get_num());
  return out;
}

bool skew_symmetrizer_check(const IntMatrix& B, const Diagonal& D) {
  if (!B.square() || D.size() != B.rows()) return false;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      if (checked_mul(D[i], B(i, j)) != -checked_mul(D[j], B(j, i))) return false;
  return true;
}

bool skew_symmetrizer_check(const RationalMatrix& B, const std::vector<Rational>& D) {
  if (!B.square() || D.size() != B.rows()) return false;
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j)
      if (D[i] * B(i, j) != -(D[j] * B(j, i))) return false;
  return true;
}

bool is_principal(const IntMatrix& B) {
  const std::size_t n = B.cols();
  if (B.rows() != 2 * n) return false;
  if (!(B.block(n, 0, n, n) == IntMatrix::identity(n))) return false;
  return skew_symmetrizer(B.block(0, 0, n, n)).has_value();
}

RationalMatrix lambda_from_bcd(const RationalMatrix& B, const RationalMatrix& C,
                               const std::vector<Rational>& D) {
  const std::size_t n = B.rows();
  if (!B.square() || !C.square() || C.rows() != n || D.size() != n) {
    fail(ErrorCode::DimensionMismatch, "B, C must be n x n and D of length n");
  }
  for (const auto& d : D)
    if (d <= 0) fail(ErrorCode::NonPositiveD, "D must have positive diagonal entries");
  if (determinant(C) == 0) fail(ErrorCode::SingularC, "det C = 0");
  if (!skew_symmetrizer_check(B, D)) fail(ErrorCode::NotSkewSymmetrizable, "DB is not skew-symmetric");

  const RationalMatrix Cinv = inverse(C);
  const RationalMatrix Dm = diagonal(D);
  const RationalMatrix L1 = -(Dm * Cinv);
  const RationalMatrix L2 = -(Cinv.transpose() * Dm * B * Cinv);

  RationalMatrix lambda(2 * n, 2 * n);
  lambda.set_block(0, n, L1);
  lambda.set_block(n, 0, -L1.transpose());
  lambda.set_block(n, n, L2);

  if (!L2.is_skew_symmetric()) fail(ErrorCode::Integrity, "Lambda_2 is not skew-symmetric");
  RationalMatrix Bt(2 * n, n);
  Bt.set_block(0, 0, B);
  Bt.set_block(n, 0, C);
  RationalMatrix expected(n, 2 * n);
  expected.set_block(0, 0, Dm);
  if (!(Bt.transpose() * lambda == expected)) fail(ErrorCode::Integrity, "B~^T Lambda != (D 0)");
  return lambda;
}

IntMatrix lambda_from_bcd(const IntMatrix& B, const IntMatrix& C, const Diagonal& D) {
  std::vector<Rational> Dq;
  Dq.reserve(D.size());
  for (auto d : D) Dq.emplace_back(static_cast<long>(d));
  return to_integer(lambda_from_bcd(to_rational(B), to_rational(C), Dq));
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) fail(ErrorCode::DimensionMismatch, "stacked blocks differ in width");
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  out.set_block(0, 0, top);
  out.set_block(top.rows(), 0, bottom);
  return out;
}

}  // namespace qcl
