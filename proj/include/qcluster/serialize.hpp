#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcluster/matrix_core.hpp"
#include "qcluster/quantum_laurent.hpp"
#include "qcluster/seed.hpp"

namespace qcl {

using Json = nlohmann::ordered_json;

/// Seed file: {"m", "n", "B", "Lambda", optional "initialLambda", optional
/// "vars", optional "name", "description"}. Matrix entries may be JSON
/// integers or decimal strings.
struct SeedFile {
  std::string name;
  std::string description;
  QuantumSeed seed;
};

Json laurent_to_json(const QuantumLaurent& f);
QuantumLaurent laurent_from_json(const Json& j, const TorusPtr& torus);

Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const RationalMatrix& m);
IntMatrix int_matrix_from_json(const Json& j, const char* what);
RationalMatrix rational_matrix_from_json(const Json& j, const char* what);
Rational rational_from_json(const Json& j);

Json seed_to_json(const QuantumSeed& seed, const std::string& name = {},
                  const std::string& description = {});
/// Enforces every exchange-data invariant; throws Parse or the relevant Error.
SeedFile seed_from_json(const Json& j);
SeedFile seed_from_text(const std::string& text);

/// Only "B" (and "n", "m" if present) are read; Lambda is not required.
IntMatrix exchange_matrix_from_json(const Json& j);

/// Reads "B" and "Lambda" without requiring compatibility.
struct RawExchange {
  IntMatrix B;
  IntMatrix Lambda;
};
RawExchange raw_exchange_from_json(const Json& j);

/// Hex SHA-256 of the canonical seed serialization.
std::string seed_digest(const QuantumSeed& seed);
std::string matrix_digest(const IntMatrix& B);

Json parse_json(const std::string& text);

}  // namespace qcl
