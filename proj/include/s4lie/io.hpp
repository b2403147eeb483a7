#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "s4lie/liebuild.hpp"

namespace s4lie {

using nlohmann::json;

// {"kind":"Q"} or {"kind":"Qsqrt","d":d}
json field_to_json(const Field& f);
Field field_from_json(const json& j);

// Nested rows of scalar strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f);

// {"field", "dim", "mul": [[i,j,k,"c"]...], "involution"?, "form"?, "name"?}. No axiom validation.
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// {"dim", "triples": [[a, b, d0, d1, d2]...]} with a < b and d_i row-major flat lists.
json delta_to_json(const DeltaMap& d);
// Stored as given (unchecked); field comes from the algebra the map belongs to.
DeltaMap delta_from_json(const json& j, const Field& f);

struct LieFile {
  LieAlgebra lie;
  std::optional<GroupAction> action;
};
// {"field", "dim", "grading", "blocks": [{"label","dim","grade"}...], "bracket": [[i,j,k,"c"]...], "action"?}
json lie_to_json(const LieAlgebra& l, const GroupAction* action = nullptr);
LieFile lie_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace s4lie
