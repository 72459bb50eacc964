#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfbraid/h8.hpp"

namespace hopfbraid {

// ordered_json keeps keys in insertion order, so emission is deterministic
using Json = nlohmann::ordered_json;

struct json_parse_error : std::runtime_error {
  explicit json_parse_error(const std::string& w)
      : std::runtime_error("json parse error: " + w) {}
};

// exact rational as [numerator, denominator]; values beyond 64 bits are
// carried as decimal strings
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// cyclotomic scalar as {"conductor": m, "coeffs": [rational, ...]} with the
// coefficients in power-basis order (length phi(m))
Json to_json(const CycloScalar& s);
CycloScalar scalar_from_json(const Json& j);

// dense matrix as {"rows": r, "cols": c, "entries": [[scalar, ...], ...]}
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

// monic polynomial as {"roots": [scalar, ...], "coeffs": [scalar, ...]} with
// ascending coefficients; parsing rebuilds from roots and cross-checks the
// coefficient list when present
Json to_json(const InvariantPolynomial& p);
InvariantPolynomial polynomial_from_json(const Json& j);

Json to_json(const PolynomialTriple& t);
PolynomialTriple triple_from_json(const Json& j);

Json to_json(const BraidedSignature& s);
BraidedSignature signature_from_json(const Json& j);

// structure-constant form: basis labels, dense unit/counit vectors, sparse
// multiplication and comultiplication tensors as index triples, and the
// antipode matrix; this is the on-disk cache format for computed tables
Json algebra_to_json(const FiniteDimHopfAlgebra& A);
HopfPtr algebra_from_json(const Json& j);

Json functional_to_json(const LinearFunctional& f);
LinearFunctional functional_from_json(HopfPtr A, const Json& j);

// braiding with its parameters and dense value matrices
Json braiding_to_json(const Braiding& b);

// classification with per-class members, representative label, signature and
// transport witnesses
Json classification_to_json(const H8Classification& c);

// member lists of a classification document; accepts classes given either as
// plain index arrays or as objects carrying a "members" array
std::vector<std::vector<int>> classes_from_json(const Json& j);

}  // namespace hopfbraid
