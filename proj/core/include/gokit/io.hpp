#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gokit/equilibria.hpp"
#include "gokit/goanalysis.hpp"
#include "gokit/homspace.hpp"
#include "gokit/liealg.hpp"
#include "gokit/polynomial.hpp"

namespace gokit::io {

using nlohmann::json;

/// {"dim": n, "basis": [labels], "brackets": [[i, j, k, value], ...]}
StructureTensor algebra_from_json(const json& j);
json algebra_to_json(const StructureTensor& algebra);

/// [[[exponents...], coeff], ...]
Polynomial polynomial_from_json(const json& j, int num_vars, const std::string& where);
json polynomial_to_json(const Polynomial& p);

/// {"kind": "quadratic", "matrix": [[...]]} or {"kind": "polynomial", "terms": ...}
EnergyForm form_from_json(const json& j, int dim);
json form_to_json(const EnergyForm& form);

/// Parsed model document. k/m default to k = {} and m = all indices when
/// absent; form and named functions on g* are optional.
struct ModelDocument {
  StructureTensor algebra;
  std::vector<int> k_indices;
  std::vector<int> m_indices;
  std::optional<EnergyForm> form;
  std::map<std::string, Polynomial> functions;

  /// Throws InvalidInput if k is not closed or the split is malformed.
  HomogeneousModel model() const;
  /// Throws InvalidInput when the document has no form.
  const EnergyForm& require_form() const;
  /// Throws InvalidInput naming the available functions when absent.
  const Polynomial& function(const std::string& name) const;
};

ModelDocument model_from_json(const json& j);
json model_to_json(const ModelDocument& doc);

/// Reads and parses a model file. Syntax errors and schema violations are
/// reported as InvalidInput naming the file and the line or field.
ModelDocument load_model(const std::filesystem::path& path);

json vector_to_json(const Vector& v);
json to_json(const AffineSolutionSet& set);
json to_json(const GoReport& report);
json to_json(const GraphSample& sample);
json to_json(const NatRedReport& report);

}  // namespace gokit::io
