#include "qcluster/classical.hpp"

namespace qcl {

ClassicalLaurent specialize_q1(const QuantumLaurent& f) {
  ClassicalLaurent out;
  for (const auto& [a, c] : f.terms()) {
    BigInt v = c.at_one();
    if (v != 0) out.emplace(a, std::move(v));
  }
  return out;
}

ClassicalLaurent classical_monomial(const ExponentVector& a) { return {{a, BigInt(1)}}; }

ClassicalLaurent operator*(const ClassicalLaurent& f, const ClassicalLaurent& g) {
  ClassicalLaurent out;
  for (const auto& [u, cu] : f) {
    for (const auto& [v, cv] : g) {
      if (u.size() != v.size()) fail(ErrorCode::DimensionMismatch, "exponent lengths differ");
      ExponentVector w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = checked_add(u[i], v[i]);
      out[w] += cu * cv;
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

ClassicalLaurent operator+(const ClassicalLaurent& f, const ClassicalLaurent& g) {
  ClassicalLaurent out = f;
  for (const auto& [a, c] : g) out[a] += c;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

RationalLaurent to_rational(const ClassicalLaurent& f) {
  RationalLaurent out;
  for (const auto& [a, c] : f) out.emplace(a, Rational(c));
  return out;
}

RationalLaurent poisson_bracket(const RationalLaurent& f, const RationalLaurent& g,
                                const RationalMatrix& lambda) {
  const std::size_t m = lambda.rows();
  if (!lambda.is_skew_symmetric()) fail(ErrorCode::NotSkewSymmetric, "bracket matrix is not skew-symmetric");
  RationalLaurent out;
  for (const auto& [a, ca] : f) {
    if (a.size() != m) fail(ErrorCode::DimensionMismatch, "exponent length differs from bracket rank");
    for (const auto& [b, cb] : g) {
      if (b.size() != m) fail(ErrorCode::DimensionMismatch, "exponent length differs from bracket rank");
      Rational pairing = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (b[j] != 0) pairing += lambda(i, j) * Rational(static_cast<long>(a[i] * b[j]));
      }
      if (pairing == 0) continue;
      ExponentVector w(m);
      for (std::size_t i = 0; i < m; ++i) w[i] = checked_add(a[i], b[i]);
      out[w] += pairing * ca * cb;
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

RationalLaurent poisson_bracket(const ClassicalLaurent& f, const ClassicalLaurent& g,
                                const RationalMatrix& lambda) {
  return poisson_bracket(to_rational(f), to_rational(g), lambda);
}

std::string to_string(const ClassicalLaurent& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto& [a, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "x" + std::to_string(i + 1);
      if (a[i] != 1) mono += "^" + std::to_string(a[i]);
    }
    const BigInt mag = abs(c);
    std::string piece = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + " " + mono);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + piece;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace qcl
