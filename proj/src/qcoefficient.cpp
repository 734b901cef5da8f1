#include "qcluster/qcoefficient.hpp"

#include <algorithm>
#include <map>

namespace qcl {

namespace {

std::string exponent_text(std::int64_t doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

std::string q_power_text(std::int64_t doubled) {
  if (doubled == 0) return "";
  if (doubled == 2) return "q";
  return "q^" + exponent_text(doubled);
}

}  // namespace

QCoefficient::QCoefficient(long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

QCoefficient::QCoefficient(const BigInt& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

QCoefficient QCoefficient::q_power(std::int64_t doubled, const BigInt& c) {
  QCoefficient r;
  if (c != 0) r.terms_.emplace_back(doubled, c);
  return r;
}

QCoefficient QCoefficient::from_terms(std::vector<Term> terms) {
  std::map<std::int64_t, BigInt> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  QCoefficient r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

bool QCoefficient::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

std::int64_t QCoefficient::min_exponent() const {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "degree of the zero coefficient");
  return terms_.front().first;
}

std::int64_t QCoefficient::max_exponent() const {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "degree of the zero coefficient");
  return terms_.back().first;
}

QCoefficient QCoefficient::shifted(std::int64_t doubled) const {
  QCoefficient r = *this;
  for (auto& t : r.terms_) t.first = checked_add(t.first, doubled);
  return r;
}

QCoefficient& QCoefficient::operator+=(const QCoefficient& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QCoefficient& QCoefficient::operator-=(const QCoefficient& o) { return *this += -o; }

QCoefficient QCoefficient::operator-() const {
  QCoefficient r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    QCoefficient r = a;
    for (auto& t : r.terms_) {
      t.first = checked_add(t.first, b.terms_[0].first);
      t.second *= b.terms_[0].second;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  std::map<std::int64_t, BigInt> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[checked_add(ea, eb)] += ca * cb;
  QCoefficient r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

QCoefficient QCoefficient::exact_div(const QCoefficient& divisor) const {
  if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero coefficient");
  if (is_zero()) return {};
  if (divisor.terms_.size() == 1) {
    const auto& [de, dc] = divisor.terms_[0];
    QCoefficient r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) {
        fail(ErrorCode::NotDivisible, "coefficient " + c.get_str() + " not divisible by " + dc.get_str());
      }
      r.terms_.emplace_back(checked_add(e, -de), BigInt(c / dc));
    }
    return r;
  }
  // Long division in t = q^{1/2} from the top degree. Any exact quotient has
  // degrees in [min(f) - min(g), max(f) - max(g)].
  const std::int64_t lo = min_exponent() - divisor.min_exponent();
  const std::int64_t hi = max_exponent() - divisor.max_exponent();
  if (hi < lo) fail(ErrorCode::NotDivisible, "degree range of quotient is empty");
  const auto& [top_e, top_c] = divisor.terms_.back();
  QCoefficient rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.terms_.back();
    const std::int64_t e = re - top_e;
    if (e < lo) fail(ErrorCode::NotDivisible, "nonzero remainder in coefficient division");
    if (!mpz_divisible_p(rc.get_mpz_t(), top_c.get_mpz_t())) {
      fail(ErrorCode::NotDivisible, "leading coefficient not divisible");
    }
    BigInt c = rc / top_c;
    rem -= divisor * QCoefficient::q_power(e, c);
    quotient.emplace_back(e, std::move(c));
  }
  std::reverse(quotient.begin(), quotient.end());
  QCoefficient r;
  r.terms_ = std::move(quotient);
  return r;
}

BigInt QCoefficient::at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::string QCoefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string qp = q_power_text(e);
    BigInt mag = abs(c);
    std::string piece;
    if (qp.empty()) {
      piece = mag.get_str();
    } else {
      piece = (mag == 1 ? std::string() : mag.get_str()) + qp;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + piece;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  if (terms_.size() > 1) out = "(" + out + ")";
  return out;
}

}  // namespace qcl
