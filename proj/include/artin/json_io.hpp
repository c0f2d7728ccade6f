#pragma once

#include <json.hpp>

#include "artin/characters.hpp"
#include "artin/field_spec.hpp"
#include "artin/relations.hpp"

namespace artin {

using json = nlohmann::json;

// {"order": N, "coeffs": [["num","den"], ...]} with decimal strings;
// round trips bit-exactly.
json cycnum_to_json(const CycNum& v);
CycNum cycnum_from_json(const json& j);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json class_function_to_json(const ClassFunction& cf);
ClassFunction class_function_from_json(const json& j);

json density_report_to_json(const DensityReport& rep);
DensityReport density_report_from_json(const json& j);

json exponent_matrix_to_json(const ExponentMatrix& m);
ExponentMatrix exponent_matrix_from_json(const json& j);

void density_report_to_csv(const DensityReport& rep, std::ostream& out);

} // namespace artin
