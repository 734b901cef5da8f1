#include "qcluster/seed.hpp"

namespace qcl {

namespace {

// Doubled exponent of q^{(1/2) sum_{i<k} lambda_ki a_i a_k}.
std::int64_t normalization(const IntMatrix& lambda, const ExponentVector& a) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = i + 1; k < a.size(); ++k)
      if (a[k] != 0) t = checked_add(t, checked_mul(checked_mul(lambda(k, i), a[i]), a[k]));
  }
  return t;
}

// Normalized monomial Y^a in the cluster `vars`, whose commutation matrix is
// `lambda`. Requires a >= 0.
QuantumLaurent cluster_monomial(const std::vector<QuantumLaurent>& vars, const IntMatrix& lambda,
                                const ExponentVector& a) {
  QuantumLaurent out = QuantumLaurent::one(vars.front().torus());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out = out * vars[i].pow(static_cast<std::uint64_t>(a[i]));
  }
  return out.scaled(QCoefficient::q_power(normalization(lambda, a)));
}

std::int64_t half_exponent(std::int64_t doubled) {
  if (doubled % 2 != 0) {
    fail(ErrorCode::NonIntegerExponent, "commutation exponent " + std::to_string(doubled) + "/2 is not an integer");
  }
  return doubled / 2;
}

}  // namespace

QuantumSeed QuantumSeed::initial(const IntMatrix& B, const IntMatrix& Lambda) {
  ExchangeData exchange = ExchangeData::make(B, Lambda);
  TorusPtr torus = make_torus(Lambda);
  std::vector<QuantumLaurent> vars;
  vars.reserve(exchange.m());
  for (std::size_t i = 0; i < exchange.m(); ++i) vars.push_back(QuantumLaurent::generator(torus, i));
  return QuantumSeed(std::move(exchange), std::move(vars), std::move(torus));
}

QuantumSeed QuantumSeed::from_parts(const IntMatrix& B, const IntMatrix& Lambda,
                                    std::vector<QuantumLaurent> vars, TorusPtr torus) {
  ExchangeData exchange = ExchangeData::make(B, Lambda);
  if (vars.size() != exchange.m()) {
    fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(exchange.m()) + " cluster variables, got " +
                                           std::to_string(vars.size()));
  }
  for (const auto& v : vars) {
    if (!(*v.torus() == *torus)) fail(ErrorCode::TorusMismatch, "cluster variable lives in a different torus");
    if (v.is_zero()) fail(ErrorCode::InvalidArgument, "cluster variable is zero");
  }
  if (!(recover_lambda(vars) == Lambda)) {
    fail(ErrorCode::InvalidArgument, "cluster variables do not q-commute according to Lambda");
  }
  return QuantumSeed(std::move(exchange), std::move(vars), std::move(torus));
}

bool operator==(const QuantumSeed& a, const QuantumSeed& b) {
  return a.exchange_ == b.exchange_ && *a.torus_ == *b.torus_ && a.vars_ == b.vars_;
}

QuantumSeed mutate_seed(const QuantumSeed& seed, std::size_t j) {
  const std::size_t m = seed.m();
  const std::size_t n = seed.n();
  if (j >= n) {
    fail(ErrorCode::IndexOutOfRange,
         "mutation index " + std::to_string(j + 1) + " outside 1.." + std::to_string(n));
  }
  const IntMatrix& B = seed.B();
  const IntMatrix& lambda = seed.Lambda();

  ExponentVector column(m);
  for (std::size_t i = 0; i < m; ++i) column[i] = B(i, j);
  ExponentVector negated(m);
  for (std::size_t i = 0; i < m; ++i) negated[i] = -column[i];
  const ExponentVector pos = plus_trunc(column);
  const ExponentVector neg = plus_trunc(negated);

  // X^{a - e_j} = q^{(1/2) a^T Lambda e_j} X^a X_j^{-1} for a with a_j = 0.
  auto shift_for = [&](const ExponentVector& a) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) s = checked_add(s, checked_mul(a[i], lambda(i, j)));
    return s;
  };
  QuantumLaurent numerator =
      cluster_monomial(seed.vars(), lambda, pos).scaled(QCoefficient::q_power(shift_for(pos)));
  numerator += cluster_monomial(seed.vars(), lambda, neg).scaled(QCoefficient::q_power(shift_for(neg)));

  std::vector<QuantumLaurent> vars = seed.vars();
  vars[j] = ql_exact_div(numerator, seed.vars()[j]);

  // Only row/column j of the commutation matrix can change.
  IntMatrix new_lambda = lambda;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == j) continue;
    const std::int64_t t = half_exponent(q_commutation_exponent(vars[j], vars[i]));
    new_lambda(j, i) = t;
    new_lambda(i, j) = -t;
  }

  IntMatrix new_B = mutate_matrix(B, j);
  Diagonal D;
  try {
    D = check_compatible(new_B, new_lambda);
  } catch (const Error& e) {
    fail(ErrorCode::Integrity, std::string("mutated pair is not compatible: ") + e.what());
  }
  if (D != seed.D()) fail(ErrorCode::Integrity, "mutation changed D");
  return QuantumSeed(ExchangeData{std::move(new_B), std::move(new_lambda), std::move(D)}, std::move(vars),
                     seed.torus());
}

QuantumSeed mutate_word(QuantumSeed seed, const std::vector<std::size_t>& word) {
  for (std::size_t k : word) seed = mutate_seed(seed, k);
  return seed;
}

bool is_integrable(const QuantumSeed& seed) {
  bool integrable = true;
  for (std::size_t i = 0; i < seed.n(); ++i) {
    for (std::size_t k = i + 1; k < seed.n(); ++k) {
      const std::int64_t stored = seed.Lambda()(i, k);
      if (q_commutation_exponent(seed.vars()[i], seed.vars()[k]) != checked_mul(2, stored)) {
        fail(ErrorCode::Integrity, "stored Lambda disagrees with the commutator of X" + std::to_string(i + 1) +
                                       " and X" + std::to_string(k + 1));
      }
      if (stored != 0) integrable = false;
    }
  }
  return integrable;
}

IntMatrix recover_lambda(const std::vector<QuantumLaurent>& vars) {
  const std::size_t m = vars.size();
  IntMatrix lambda(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) {
      const std::int64_t t = half_exponent(q_commutation_exponent(vars[i], vars[k]));
      lambda(i, k) = t;
      lambda(k, i) = -t;
    }
  }
  return lambda;
}

std::optional<std::vector<std::size_t>> equal_up_to_permutation(const QuantumSeed& a, const QuantumSeed& b) {
  const std::size_t m = a.m();
  const std::size_t n = a.n();
  if (b.m() != m || b.n() != n || !(*a.torus() == *b.torus())) return std::nullopt;
  std::vector<std::size_t> sigma(m);
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lo = i < n ? 0 : n;
    const std::size_t hi = i < n ? n : m;
    bool found = false;
    for (std::size_t k = lo; k < hi; ++k) {
      if (!used[k] && b.vars()[k] == a.vars()[i]) {
        sigma[i] = k;
        used[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (b.Lambda()(sigma[i], sigma[k]) != a.Lambda()(i, k)) return std::nullopt;
      if (k < n && b.B()(sigma[i], sigma[k]) != a.B()(i, k)) return std::nullopt;
    }
  }
  return sigma;
}

ExponentVector DuplicatedSeed::embed(const ExponentVector& e) const {
  if (e.size() != base_rank_) fail(ErrorCode::DimensionMismatch, "exponent length differs from base torus rank");
  ExponentVector out(2 * base_rank_, 0);
  std::copy(e.begin(), e.end(), out.begin());
  return out;
}

DuplicateParts duplicate_parts(const IntMatrix& B, const IntMatrix& Lambda) {
  const std::size_t m = B.rows();
  const std::size_t n = B.cols();
  if (Lambda.rows() != m || Lambda.cols() != m) fail(ErrorCode::DimensionMismatch, "Lambda must be m x m");

  DuplicateParts parts;
  parts.lambda2 = IntMatrix(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      parts.lambda2(i, k) = Lambda(i, k);
      parts.lambda2(m + i, m + k) = -Lambda(i, k);
    }
  }
  parts.B = stack(B.block(0, 0, n, n), IntMatrix::identity(n));
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector a(2 * m, 0);
    a[i] = 1;
    a[m + i] = 1;
    parts.exponents.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector a(2 * m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      if (k >= n) a[k] = B(k, i);       // b_i^{>n}
      else a[m + k] = -B(k, i);         // -b_i^{<=n}
    }
    parts.exponents.push_back(std::move(a));
  }
  return parts;
}

DuplicatedSeed duplicate_seed(const QuantumSeed& seed) {
  DuplicateParts parts = duplicate_parts(seed.B(), seed.Lambda());
  TorusPtr torus = make_torus(parts.lambda2);
  std::vector<QuantumLaurent> vars;
  vars.reserve(parts.exponents.size());
  for (const auto& a : parts.exponents) vars.push_back(QuantumLaurent::monomial(torus, a));

  const IntMatrix lambda = recover_lambda(vars);
  std::optional<QuantumSeed> dup;
  try {
    dup = QuantumSeed::from_parts(parts.B, lambda, std::move(vars), torus);
  } catch (const Error& e) {
    fail(ErrorCode::Integrity, std::string("duplicated seed is not compatible: ") + e.what());
  }
  if (!is_principal(dup->B())) fail(ErrorCode::Integrity, "duplicated exchange matrix is not principal");
  if (!is_integrable(*dup)) fail(ErrorCode::Integrity, "duplicated seed is not integrable");
  return DuplicatedSeed(std::move(*dup), seed.m());
}

}  // namespace qcl
