#include "homform/formio.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "homform/errors.hpp"

namespace homform {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class parse_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ValidationError(path + ": not an integer string");
    return z;
  }
  throw ValidationError(path + ": expected an integer");
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ValidationError(path + ": expected a [num, den] pair");
  mpz_class num = parse_integer(j[0], path + "[0]");
  mpz_class den = parse_integer(j[1], path + "[1]");
  if (den == 0) throw ValidationError(path + ": zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json rational_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(path + ": missing field \"" + key + "\"");
  return j.at(key);
}

}  // namespace

FieldPtr parse_field(const Json& j, const std::string& path) {
  if (j.is_null()) return nullptr;
  const Json& type = member(j, "type", path);
  if (!type.is_string()) throw ValidationError(path + ".type: expected a string");
  if (type == "rational") return nullptr;
  if (type == "quadratic") {
    Rational c0 = parse_rational(member(j, "c0", path), path + ".c0");
    Rational c1 = parse_rational(member(j, "c1", path), path + ".c1");
    try {
      return make_quadratic_field(c0, c1);
    } catch (const PreconditionError&) {
      throw ValidationError(path + ": t^2 + c1 t + c0 is reducible over Q");
    }
  }
  throw ValidationError(path + ".type: unknown field type \"" + type.get<std::string>() + "\"");
}

Json field_to_json(const FieldPtr& f) {
  if (!f) return Json{{"type", "rational"}};
  return Json{{"type", "quadratic"}, {"c0", rational_json(f->c0())}, {"c1", rational_json(f->c1())}};
}

Scalar parse_value(const Json& j, const FieldPtr& field, const std::string& path) {
  if (!j.is_array() || j.empty() || j.size() > 2) throw ValidationError(path + ": expected one or two [num, den] pairs");
  Rational a = parse_rational(j[0], path + "[0]");
  if (j.size() == 1) return Scalar(a);
  if (!field) throw ValidationError(path + ": two-component value needs a quadratic field");
  Rational b = parse_rational(j[1], path + "[1]");
  return Scalar(a, b, field);
}

Json value_to_json(const Scalar& s) {
  Json v = Json::array({rational_json(s.a())});
  if (!s.is_rational()) v.push_back(rational_json(s.b()));
  return v;
}

FormFile parse_form(const Json& j) {
  if (!j.is_object()) throw ValidationError("$: expected an object");
  const Json& fmt = member(j, "format", "$");
  if (fmt != kFormFormat) throw ValidationError(std::string("$.format: expected \"") + kFormFormat + "\"");
  const Json& dim = member(j, "dimension", "$");
  const Json& arity = member(j, "arity", "$");
  if (!dim.is_number_integer() || dim.get<long long>() < 2 || dim.get<long long>() > 64) {
    throw ValidationError("$.dimension: expected an integer in [2, 64]");
  }
  if (!arity.is_number_integer() || arity.get<long long>() < 2 || arity.get<long long>() > 16) {
    throw ValidationError("$.arity: expected an integer in [2, 16]");
  }
  const int d = dim.get<int>();
  const int m = arity.get<int>();
  FormFile out;
  out.field = j.contains("field") ? parse_field(j.at("field"), "$.field") : nullptr;
  out.form = MultilinearForm(d, m);
  const Json& entries = member(j, "entries", "$");
  if (!entries.is_array()) throw ValidationError("$.entries: expected an array");
  if (entries.empty()) throw ValidationError("$.entries: the form has no nonzero entries");
  std::set<Index> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string path = "$.entries[" + std::to_string(e) + "]";
    const Json& idx = member(entries[e], "index", path);
    if (!idx.is_array() || static_cast<int>(idx.size()) != m) {
      throw ValidationError(path + ".index: expected " + std::to_string(m) + " integers");
    }
    MultiIndex mi;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (!idx[k].is_number_integer() || idx[k].get<long long>() < 0 || idx[k].get<long long>() >= d) {
        throw ValidationError(path + ".index[" + std::to_string(k) + "]: expected an integer in [0, " +
                              std::to_string(d) + ")");
      }
      mi.push_back(idx[k].get<int>());
    }
    Index code = encode(mi, d);
    if (!seen.insert(code).second) throw ValidationError(path + ".index: duplicate index");
    Scalar v = parse_value(member(entries[e], "value", path), out.field, path + ".value");
    if (v.is_zero()) throw ValidationError(path + ".value: entries must be nonzero");
    out.form.set_code(code, v);
  }
  return out;
}

Json form_to_json(const MultilinearForm& w) {
  FieldPtr field;
  Json entries = Json::array();
  for (const auto& [code, v] : w.entries()) {
    if (!v.is_rational()) field = v.field();
    entries.push_back(Json{{"index", decode(code, w.dim(), w.arity())}, {"value", value_to_json(v)}});
  }
  return Json{{"format", kFormFormat},
              {"dimension", w.dim()},
              {"arity", w.arity()},
              {"field", field_to_json(field)},
              {"entries", entries}};
}

Matrix parse_matrix(const Json& j, FieldPtr expected_field) {
  if (!j.is_object()) throw ValidationError("$: expected an object");
  if (member(j, "format", "$") != kMatrixFormat) {
    throw ValidationError(std::string("$.format: expected \"") + kMatrixFormat + "\"");
  }
  FieldPtr field = j.contains("field") ? parse_field(j.at("field"), "$.field") : nullptr;
  if (field && expected_field && !(*field == *expected_field)) throw ValidationError("$.field: does not match the form");
  if (!field) field = expected_field;
  const Json& rows = member(j, "rows", "$");
  if (!rows.is_array() || rows.empty()) throw ValidationError("$.rows: expected a nonempty array");
  const std::size_t n = rows.size();
  Matrix M(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string path = "$.rows[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != n) throw ValidationError(path + ": expected " + std::to_string(n) + " values");
    for (std::size_t c = 0; c < n; ++c) M.set(r, c, parse_value(rows[r][c], field, path + "[" + std::to_string(c) + "]"));
  }
  return M;
}

Json matrix_to_json(const Matrix& M) {
  FieldPtr field;
  Json rows = Json::array();
  for (Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < M.cols(); ++c) {
      Scalar v = M.at(r, c);
      if (!v.is_rational()) field = v.field();
      row.push_back(value_to_json(v));
    }
    rows.push_back(row);
  }
  return Json{{"format", kMatrixFormat}, {"field", field_to_json(field)}, {"rows", rows}};
}

Json matrix_strings(const Matrix& M) {
  Json rows = Json::array();
  for (Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace homform
