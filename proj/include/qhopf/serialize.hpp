#pragma once

#include <string>

#include "json.hpp"
#include "qhopf/hochschild.hpp"
#include "qhopf/quasihopf.hpp"
#include "qhopf/weylcheck.hpp"

namespace qhopf {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"level": N, "coeffs": [[num, den], ...]}; numerators and denominators
/// that overflow 64 bits are written as decimal strings.
json to_json(const CycScalar& c);
CycScalar scalar_from_json(const json& j, int level);

/// [[i, scalar], ...]
json sparse_to_json(const SparseVec& v);
SparseVec sparse_from_json(const json& j, int level);

/// Tensor of the given arity as [[i_1, ..., i_k, scalar], ...], lexicographic.
json tensor_to_json(const Element& u);
Element tensor_from_json(const json& j, const AlgebraPtr& a, int arity);

/// Columns of a linear map as [[source, i_1, ..., i_k, scalar], ...].
json map_to_json(const LinearMap& f);
LinearMap map_from_json(const json& j, const AlgebraPtr& a, int source_arity, int target_arity);

/// {"dim", "level", "unit", "mult": [[i, j, k, scalar], ...], "grading"}.
json to_json(const StructureAlgebra& a);
AlgebraPtr algebra_from_json(const json& j);

/// Algebra block plus "delta", "counit", "antipode", "phi", "phi_inv", "alpha",
/// "beta" and "generators".
json to_json(const QuasiHopfDatum& q);
QuasiHopfDatum datum_from_json(const json& j);

json to_json(const AxiomResult& r);
json to_json(const AxiomReport& r);
json to_json(const IsoCheck& c);
json to_json(const CohomologyReport& r);
json to_json(const VanishingReport& r);
json to_json(const InvariantReport& r);

/// Reads a JSON file; throws ParseError on I/O or syntax errors.
json read_json_file(const std::string& path);

}  // namespace qhopf
