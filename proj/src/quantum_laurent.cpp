#include "qcluster/quantum_laurent.hpp"

#include <algorithm>
#include <climits>
#include <optional>

namespace qcl {

ExponentVector plus_trunc(const ExponentVector& a) {
  ExponentVector r(a.size());
  std::transform(a.begin(), a.end(), r.begin(), [](std::int64_t x) { return std::max<std::int64_t>(x, 0); });
  return r;
}

QuantumTorus::QuantumTorus(IntMatrix lambda) : lambda_(std::move(lambda)) {
  if (!lambda_.is_skew_symmetric()) fail(ErrorCode::NotSkewSymmetric, "torus matrix is not skew-symmetric");
}

std::int64_t QuantumTorus::twist(const ExponentVector& u, const ExponentVector& v) const {
  const std::size_t m = rank();
  std::int64_t t = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (u[j] == 0 || lambda_(j, i) == 0) continue;
      t = checked_add(t, checked_mul(checked_mul(lambda_(j, i), u[j]), v[i]));
    }
  }
  return t;
}

std::int64_t QuantumTorus::normalization(const ExponentVector& a) const {
  const std::size_t m = rank();
  std::int64_t t = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      t = checked_add(t, checked_mul(checked_mul(lambda_(j, i), a[i]), a[j]));
  return t;
}

std::int64_t QuantumTorus::pairing(const ExponentVector& a, const ExponentVector& b) const {
  const std::size_t m = rank();
  std::int64_t t = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      t = checked_add(t, checked_mul(checked_mul(a[i], lambda_(i, j)), b[j]));
  }
  return t;
}

TorusPtr make_torus(IntMatrix lambda) {
  return std::make_shared<const QuantumTorus>(std::move(lambda));
}

// ---------------------------------------------------------------------------

QuantumLaurent::QuantumLaurent(TorusPtr torus) : torus_(std::move(torus)) {
  if (!torus_) fail(ErrorCode::InvalidArgument, "null torus");
}

QuantumLaurent::QuantumLaurent(TorusPtr torus, TermMap terms) : QuantumLaurent(std::move(torus)) {
  for (auto& [a, c] : terms) {
    if (a.size() != torus_->rank()) fail(ErrorCode::DimensionMismatch, "exponent vector length differs from torus rank");
    if (!c.is_zero()) terms_.emplace(a, std::move(c));
  }
}

QuantumLaurent QuantumLaurent::one(const TorusPtr& torus) {
  return monomial(torus, ExponentVector(torus->rank(), 0));
}

QuantumLaurent QuantumLaurent::monomial(const TorusPtr& torus, const ExponentVector& a) {
  if (a.size() != torus->rank()) fail(ErrorCode::DimensionMismatch, "exponent vector length differs from torus rank");
  QuantumLaurent r(torus);
  r.terms_.emplace(a, QCoefficient::q_power(torus->normalization(a)));
  return r;
}

QuantumLaurent QuantumLaurent::generator(const TorusPtr& torus, std::size_t i) {
  ExponentVector e(torus->rank(), 0);
  if (i >= e.size()) fail(ErrorCode::IndexOutOfRange, "generator index out of range");
  e[i] = 1;
  return monomial(torus, e);
}

bool QuantumLaurent::same_torus(const QuantumLaurent& o) const {
  return torus_ == o.torus_ || *torus_ == *o.torus_;
}

void QuantumLaurent::add_term(const ExponentVector& a, const QCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuantumLaurent& QuantumLaurent::operator+=(const QuantumLaurent& o) {
  if (!same_torus(o)) fail(ErrorCode::TorusMismatch, "sum of elements from different tori");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

QuantumLaurent& QuantumLaurent::operator-=(const QuantumLaurent& o) {
  if (!same_torus(o)) fail(ErrorCode::TorusMismatch, "difference of elements from different tori");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

QuantumLaurent operator*(const QuantumLaurent& f, const QuantumLaurent& g) {
  if (!f.same_torus(g)) fail(ErrorCode::TorusMismatch, "product of elements from different tori");
  const QuantumTorus& torus = *f.torus_;
  const std::size_t m = torus.rank();
  const IntMatrix& lambda = torus.lambda();
  QuantumLaurent out(f.torus_);
  ExponentVector sum(m);
  std::vector<std::int64_t> partial(m);
  for (const auto& [u, cu] : f.terms_) {
    // twist(u, v) = sum_i v_i * partial_i with partial_i = sum_{j>i} lambda_ji u_j
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = i + 1; j < m; ++j)
        if (u[j] != 0) s = checked_add(s, checked_mul(lambda(j, i), u[j]));
      partial[i] = s;
    }
    for (const auto& [v, cv] : g.terms_) {
      std::int64_t tw = 0;
      for (std::size_t i = 0; i < m; ++i) {
        sum[i] = checked_add(u[i], v[i]);
        if (v[i] != 0) tw = checked_add(tw, checked_mul(partial[i], v[i]));
      }
      out.add_term(sum, (cu * cv).shifted(checked_mul(2, tw)));
    }
  }
  return out;
}

QuantumLaurent QuantumLaurent::scaled(const QCoefficient& c) const {
  QuantumLaurent r(torus_);
  if (c.is_zero()) return r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(a, x * c);
  return r;
}

QuantumLaurent QuantumLaurent::pow(std::uint64_t e) const {
  QuantumLaurent result = one(torus_);
  QuantumLaurent base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const QuantumLaurent& a, const QuantumLaurent& b) {
  return a.same_torus(b) && a.terms_ == b.terms_;
}

std::string QuantumLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "X" + std::to_string(i + 1);
      if (a[i] != 1) mono += "^" + std::to_string(a[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
      negative = c.terms()[0].second < 0;
      coeff = (negative ? -c : c).to_string();
    } else {
      coeff = c.to_string();
    }
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = mono;
    } else {
      piece = coeff + " " + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

QuantumLaurent ql_mul(const QuantumLaurent& f, const QuantumLaurent& g) { return f * g; }

QuantumLaurent ql_exact_div(const QuantumLaurent& f, const QuantumLaurent& g) {
  if (!f.same_torus(g)) fail(ErrorCode::TorusMismatch, "division of elements from different tori");
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  if (f.is_zero()) return QuantumLaurent::zero(f.torus());
  const QuantumTorus& torus = *f.torus();
  const std::size_t m = torus.rank();

  // Degree in each X_k is additive in a domain, so the quotient lives in a box.
  ExponentVector lo(m), hi(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::int64_t fmin = INT64_MAX, fmax = INT64_MIN, gmin = INT64_MAX, gmax = INT64_MIN;
    for (const auto& [a, c] : f.terms()) {
      fmin = std::min(fmin, a[k]);
      fmax = std::max(fmax, a[k]);
    }
    for (const auto& [a, c] : g.terms()) {
      gmin = std::min(gmin, a[k]);
      gmax = std::max(gmax, a[k]);
    }
    lo[k] = fmin - gmin;
    hi[k] = fmax - gmax;
    if (hi[k] < lo[k]) fail(ErrorCode::NotDivisible, "degree in X" + std::to_string(k + 1) + " rules out a quotient");
  }

  const auto& [lead_exp, lead_coeff] = *g.terms().rbegin();
  QuantumLaurent rem = f;
  QuantumLaurent quotient(f.torus());
  ExponentVector u(m);
  while (!rem.is_zero()) {
    const auto& [a, c] = *rem.terms().rbegin();
    for (std::size_t k = 0; k < m; ++k) {
      u[k] = a[k] - lead_exp[k];
      if (u[k] < lo[k] || u[k] > hi[k]) fail(ErrorCode::NotDivisible, "remainder leaves the quotient box");
    }
    const QCoefficient h = c.exact_div(lead_coeff.shifted(checked_mul(2, torus.twist(u, lead_exp))));
    QuantumLaurent term(f.torus());
    term.add_term(u, h);
    rem -= term * g;
    quotient.add_term(u, h);
  }
  return quotient;
}

std::int64_t q_commutation_exponent(const QuantumLaurent& f, const QuantumLaurent& g) {
  if (!f.same_torus(g)) fail(ErrorCode::TorusMismatch, "commutator of elements from different tori");
  if (f.is_zero() || g.is_zero()) fail(ErrorCode::InvalidArgument, "commutation exponent of zero");
  const QuantumTorus& torus = *f.torus();

  // X^(u) X^(v) = q^{u^T Lambda v} X^(v) X^(u); a constant pairing over all term
  // pairs is sufficient.
  std::optional<std::int64_t> common;
  bool uniform = true;
  for (const auto& [u, cu] : f.terms()) {
    for (const auto& [v, cv] : g.terms()) {
      const std::int64_t p = torus.pairing(u, v);
      if (!common) {
        common = p;
      } else if (*common != p) {
        uniform = false;
        break;
      }
    }
    if (!uniform) break;
  }
  if (uniform) return checked_mul(2, *common);

  const QuantumLaurent fg = f * g;
  const QuantumLaurent gf = g * f;
  const QCoefficient& c1 = fg.terms().rbegin()->second;
  const QCoefficient& c2 = gf.terms().rbegin()->second;
  const std::int64_t t = c1.min_exponent() - c2.min_exponent();
  if (!(gf.scaled(QCoefficient::q_power(t)) == fg)) {
    fail(ErrorCode::NotQCommuting, "elements do not q-commute");
  }
  return t;
}

}  // namespace qcl
