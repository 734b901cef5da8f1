#include "qcluster/serialize.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

namespace qcl {

namespace {

std::int64_t int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
      fail(ErrorCode::Parse, std::string(what) + ": '" + j.get<std::string>() + "' is not an integer");
    }
    return to_int64(v);
  }
  fail(ErrorCode::Parse, std::string(what) + ": expected an integer");
}

Json big_to_json(const BigInt& x) { return x.get_str(); }

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::Parse, "'" + j.get<std::string>() + "' is not an integer");
    return v;
  }
  fail(ErrorCode::Parse, "expected an integer or decimal string");
}

std::string sha256_hex(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::Integrity, "SHA-256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Json laurent_to_json(const QuantumLaurent& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) {
    Json coeff = Json::array();
    for (const auto& [e, v] : c.terms()) coeff.push_back(Json::array({e, big_to_json(v)}));
    terms.push_back(Json{{"exponents", a}, {"coeff", std::move(coeff)}});
  }
  return terms;
}

QuantumLaurent laurent_from_json(const Json& j, const TorusPtr& torus) {
  if (!j.is_array()) fail(ErrorCode::Parse, "variable must be a list of terms");
  QuantumLaurent::TermMap terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff")) {
      fail(ErrorCode::Parse, "term needs 'exponents' and 'coeff'");
    }
    ExponentVector a;
    for (const auto& x : t["exponents"]) a.push_back(int_from_json(x, "exponent"));
    if (a.size() != torus->rank()) fail(ErrorCode::Parse, "exponent vector length differs from torus rank");
    std::vector<QCoefficient::Term> coeff;
    for (const auto& pair : t["coeff"]) {
      if (!pair.is_array() || pair.size() != 2) fail(ErrorCode::Parse, "coefficient entries are [doubledExponent, integer]");
      coeff.emplace_back(int_from_json(pair[0], "q-exponent"), big_from_json(pair[1]));
    }
    QCoefficient c = QCoefficient::from_terms(std::move(coeff));
    auto [it, inserted] = terms.try_emplace(std::move(a), c);
    if (!inserted) it->second += c;
  }
  return QuantumLaurent(torus, std::move(terms));
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Rational& x = m(i, k);
      if (x.get_den() == 1 && mpz_fits_slong_p(x.get_num_mpz_t())) {
        row.push_back(x.get_num().get_si());
      } else {
        row.push_back(x.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::Parse, std::string(what) + " must be a non-empty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) fail(ErrorCode::Parse, std::string(what) + " must be a list of rows");
  const std::size_t cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorCode::Parse, std::string(what) + " has ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k], what);
  }
  return m;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::Parse, "'" + j.get<std::string>() + "' is not a rational");
    if (r.get_den() == 0) fail(ErrorCode::Parse, "zero denominator");
    r.canonicalize();
    return r;
  }
  fail(ErrorCode::Parse, "expected an integer or a \"p/q\" string");
}

RationalMatrix rational_matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    fail(ErrorCode::Parse, std::string(what) + " must be a non-empty list of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorCode::Parse, std::string(what) + " has ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json seed_to_json(const QuantumSeed& seed, const std::string& name, const std::string& description) {
  Json j = Json::object();
  if (!name.empty()) j["name"] = name;
  if (!description.empty()) j["description"] = description;
  j["m"] = seed.m();
  j["n"] = seed.n();
  j["B"] = matrix_to_json(seed.B());
  j["Lambda"] = matrix_to_json(seed.Lambda());
  j["initialLambda"] = matrix_to_json(seed.initial_lambda());
  Json vars = Json::array();
  for (const auto& v : seed.vars()) vars.push_back(laurent_to_json(v));
  j["vars"] = std::move(vars);
  return j;
}

namespace {

void check_declared_shape(const Json& j, const IntMatrix& B) {
  if (j.contains("m") && int_from_json(j["m"], "m") != static_cast<std::int64_t>(B.rows())) {
    fail(ErrorCode::Parse, "'m' does not match the number of rows of B");
  }
  if (j.contains("n") && int_from_json(j["n"], "n") != static_cast<std::int64_t>(B.cols())) {
    fail(ErrorCode::Parse, "'n' does not match the number of columns of B");
  }
}

}  // namespace

IntMatrix exchange_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("B")) fail(ErrorCode::Parse, "seed document needs 'B'");
  IntMatrix B = int_matrix_from_json(j["B"], "B");
  check_declared_shape(j, B);
  if (B.cols() == 0 || B.cols() > B.rows()) fail(ErrorCode::DimensionMismatch, "B must be m x n with 1 <= n <= m");
  return B;
}

RawExchange raw_exchange_from_json(const Json& j) {
  IntMatrix B = exchange_matrix_from_json(j);
  if (!j.contains("Lambda")) fail(ErrorCode::Parse, "seed document needs 'Lambda'");
  IntMatrix Lambda = int_matrix_from_json(j["Lambda"], "Lambda");
  return RawExchange{std::move(B), std::move(Lambda)};
}

SeedFile seed_from_json(const Json& j) {
  RawExchange raw = raw_exchange_from_json(j);
  SeedFile file{j.value("name", std::string{}), j.value("description", std::string{}),
                QuantumSeed::initial(raw.B, raw.Lambda)};
  if (!j.contains("vars")) {
    if (j.contains("initialLambda") && !(int_matrix_from_json(j["initialLambda"], "initialLambda") == raw.Lambda)) {
      fail(ErrorCode::Parse, "'initialLambda' without 'vars' must equal 'Lambda'");
    }
    return file;
  }
  IntMatrix initial = j.contains("initialLambda") ? int_matrix_from_json(j["initialLambda"], "initialLambda") : raw.Lambda;
  if (!initial.is_skew_symmetric()) fail(ErrorCode::NotSkewSymmetric, "initialLambda is not skew-symmetric");
  TorusPtr torus = make_torus(std::move(initial));
  if (!j["vars"].is_array()) fail(ErrorCode::Parse, "'vars' must be a list");
  std::vector<QuantumLaurent> vars;
  for (const auto& v : j["vars"]) vars.push_back(laurent_from_json(v, torus));
  file.seed = QuantumSeed::from_parts(raw.B, raw.Lambda, std::move(vars), std::move(torus));
  return file;
}

SeedFile seed_from_text(const std::string& text) { return seed_from_json(parse_json(text)); }

std::string seed_digest(const QuantumSeed& seed) { return sha256_hex(seed_to_json(seed).dump()); }

std::string matrix_digest(const IntMatrix& B) { return sha256_hex(matrix_to_json(B).dump()); }

}  // namespace qcl
