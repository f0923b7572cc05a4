#pragma once

#include <string>

#include <json.hpp>

#include "liecc/almost_abelian.hpp"
#include "liecc/catalog.hpp"
#include "liecc/cohomology.hpp"
#include "liecc/derivations.hpp"
#include "liecc/extensions.hpp"
#include "liecc/lie_algebra.hpp"

namespace liecc {

using json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

/// Parses an algebra document:
///   {"version": 1, "dim": n, "field": "real"|"complex", "basis": [...],
///    "brackets": [{"i": 1, "j": 3, "terms": [{"k": 1, "coeff": "1/2"}]}]}
/// Indices are 1-based, coefficients are fraction strings (JSON integers
/// are accepted; floats are not). Errors carry a line/column or a JSON
/// pointer to the offending value.
LieAlgebra algebra_from_json(const std::string& text);
LieAlgebra algebra_from_json(const json& doc);

/// Canonical document: brackets sorted by (i, j), terms by k, zeros dropped.
json algebra_to_json(const LieAlgebra& L);

/// A square matrix as a row list of fraction strings, either bare or as
/// {"matrix": [...]}.
Matrix matrix_from_json(const std::string& text);
json matrix_to_json(const Matrix& m);

json to_json(const Scalar& s);
json to_json(const Polynomial& p);
json to_json(const CompletenessReport& r);
json to_json(const CocompletenessReport& r);
json to_json(const CohomologyReport& r);
json to_json(const LieAlgebra& L, const CohomologyBasis& b);
json to_json(const EigenvalueReport& r);
json to_json(const ProportionalSimilarity& p);
json to_json(const Classification3& c);
json to_json(const CatalogEntry& e);
json to_json(const CatalogCheck& c);
json to_json(const ExtensionWitness& w);

}  // namespace liecc
