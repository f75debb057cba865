#pragma once

#include <json.hpp>

#include <string>

#include "duocat/measuring.hpp"

namespace duocat {
namespace io {

using json = nlohmann::json;

// Every document carries {"schema": 1, "kind": <tag>}; unknown fields are
// rejected on load. Matrices serialize inline as {rows, cols, entries}
// with entries as canonical rational strings, row-major.

json to_json(const Matrix& m);
json to_json(const GradedObject& v);
json to_json(const GradedMap& f);
json to_json(const SymmetricSequence& s);
json to_json(const Structured& s);
json to_json(const Report& r);
json to_json(const MeasuringCandidate& m);

Matrix matrix_from_json(const json& j);
GradedObject graded_object_from_json(const json& j);
GradedMap graded_map_from_json(const json& j);
SymmetricSequence species_from_json(const json& j);
Structured structured_from_json(const json& j);
MeasuringCandidate measuring_from_json(const json& j);

/// Document kind tag: "graded-object", "graded-map", "species", "monoid",
/// "comonoid", "operad", "cooperad", or "measuring".
std::string document_kind(const json& j);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

json load_document(const std::string& path);
void save_document(const json& j, const std::string& path);

}  // namespace io
}  // namespace duocat
