#pragma once

#include <string>

#include <json.hpp>

#include "homform/linalg.hpp"
#include "homform/tensors.hpp"

namespace homform {

inline constexpr const char* kFormFormat = "homform-form/1";
inline constexpr const char* kMatrixFormat = "homform-matrix/1";
inline constexpr const char* kReportFormat = "homform-report/1";

using Json = nlohmann::json;

struct FormFile {
  MultilinearForm form;
  FieldPtr field;  // null for the rationals
};

/// Parses and validates; ValidationError messages name the offending JSON path.
FormFile parse_form(const Json& j);
Json form_to_json(const MultilinearForm& w);

/// {"format": "homform-matrix/1", "field": ..., "rows": [[value, ...], ...]}
Matrix parse_matrix(const Json& j, FieldPtr expected_field = nullptr);
Json matrix_to_json(const Matrix& M);

/// A value is [[num, den]] or [[num, den], [num, den]] for a + b t.
Scalar parse_value(const Json& j, const FieldPtr& field, const std::string& path);
Json value_to_json(const Scalar& s);
Json field_to_json(const FieldPtr& f);
FieldPtr parse_field(const Json& j, const std::string& path);

/// Matrix rendered as rows of canonical scalar strings.
Json matrix_strings(const Matrix& M);

Json read_json_file(const std::string& path);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace homform
