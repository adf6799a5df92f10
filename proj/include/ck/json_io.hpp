#pragma once

#include "ck/analysis.hpp"
#include "ck/generators.hpp"
#include "ck/matrix.hpp"
#include "ck/span.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ck {

// Persisted-format helpers. Keys are emitted sorted, so dumps are
// byte-deterministic for equal values.

nlohmann::json matrix_to_json(const CKMatrix& m);
CKMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const AlgebraDescriptor& d);
AlgebraDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json generators_to_json(Series s, Field f, int N, const OmegaVector& w,
                                  const std::vector<LabeledMatrix>& gens);

nlohmann::json structure_constants_to_json(const StructureConstants& sc,
                                           const std::vector<std::string>& labels);

} // namespace ck
