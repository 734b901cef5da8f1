#pragma once

#include <map>
#include <string>

#include "qcluster/matrix.hpp"
#include "qcluster/quantum_laurent.hpp"

namespace qcl {

/// Commutative Laurent polynomial with integer coefficients.
using ClassicalLaurent = std::map<ExponentVector, BigInt>;
/// Commutative Laurent polynomial with rational coefficients.
using RationalLaurent = std::map<ExponentVector, Rational>;

/// Sets q^{1/2} = 1 and drops cancelled terms.
ClassicalLaurent specialize_q1(const QuantumLaurent& f);

ClassicalLaurent classical_monomial(const ExponentVector& a);
ClassicalLaurent operator*(const ClassicalLaurent& f, const ClassicalLaurent& g);
ClassicalLaurent operator+(const ClassicalLaurent& f, const ClassicalLaurent& g);

/// Log-canonical bracket {x^a, x^b} = (a^T Lambda b) x^{a+b}, extended bilinearly.
RationalLaurent poisson_bracket(const ClassicalLaurent& f, const ClassicalLaurent& g,
                                const RationalMatrix& lambda);
RationalLaurent poisson_bracket(const RationalLaurent& f, const RationalLaurent& g,
                                const RationalMatrix& lambda);

RationalLaurent to_rational(const ClassicalLaurent& f);

std::string to_string(const ClassicalLaurent& f);

}  // namespace qcl
