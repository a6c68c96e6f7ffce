#include "homform/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "homform/algebra.hpp"
#include "homform/errors.hpp"
#include "homform/formio.hpp"
#include "homform/gallery.hpp"
#include "homform/hopf.hpp"
#include "homform/koszul.hpp"
#include "homform/preregularity.hpp"
#include "homform/twist.hpp"

namespace homform {

namespace {

struct Options {
  std::string file;
  int N = 2;
  int max_degree = -1;
  std::optional<Index> guard;
  std::string field;
  std::string wtilde;
  std::string matrix;
  std::string output;
  std::string name;
  bool list = false;
};

Rational parse_rational_text(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ValidationError("--field: bad rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

// "rational", "gaussian" or "quadratic:c0,c1" for t^2 + c1 t + c0.
FieldPtr parse_field_flag(const std::string& s) {
  if (s == "rational") return nullptr;
  if (s == "gaussian") return gaussian_field();
  const std::string prefix = "quadratic:";
  if (s.rfind(prefix, 0) == 0) {
    std::string rest = s.substr(prefix.size());
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw ValidationError("--field: expected quadratic:c0,c1");
    try {
      return make_quadratic_field(parse_rational_text(rest.substr(0, comma)), parse_rational_text(rest.substr(comma + 1)));
    } catch (const PreconditionError&) {
      throw ValidationError("--field: t^2 + c1 t + c0 is reducible over Q");
    }
  }
  throw ValidationError("--field: expected rational, gaussian or quadratic:c0,c1");
}

FormFile load_form(const Options& o) {
  Json j = read_json_file(o.file);
  if (!o.field.empty()) {
    FieldPtr flag = parse_field_flag(o.field);
    if (j.is_object() && j.contains("field")) {
      FieldPtr file = parse_field(j.at("field"), "$.field");
      bool same = (!file && !flag) || (file && flag && *file == *flag);
      if (!same) throw ValidationError("$.field: does not match --field");
    } else if (j.is_object()) {
      j["field"] = field_to_json(flag);
    }
  }
  return parse_form(j);
}

Index guard_of(const Options& o) { return o.guard ? *o.guard : default_guard_columns(); }

void require_n(const MultilinearForm& w, int N) {
  if (N < 2 || N > w.arity()) throw ValidationError("--N: expected 2 <= N <= arity (" + std::to_string(w.arity()) + ")");
}

Json dims_json(const std::vector<Index>& dims) {
  Json a = Json::array();
  for (Index d : dims) a.push_back(d);
  return a;
}

Json report(const std::string& command) { return Json{{"format", kReportFormat}, {"command", command}}; }

Json cmd_analyze(const Options& o) {
  FormFile f = load_form(o);
  require_n(f.form, o.N);
  RegularityReport r = analyze_regularity(f.form, o.N);
  Json j = report("analyze");
  j["dimension"] = f.form.dim();
  j["arity"] = f.form.arity();
  j["N"] = o.N;
  j["one_site_nondegenerate"] = r.one_site_nondegenerate;
  j["twist_status"] = to_string(r.twist.status);
  j["Q"] = (r.twist.status == TwistStatus::unique && r.twist.q) ? matrix_strings(*r.twist.q) : Json(nullptr);
  j["preregular"] = r.preregular;
  j["three_regular"] = r.three_regular ? Json(r.three_regular->three_regular) : Json(nullptr);
  j["iii_prime"] = r.iii_prime ? Json(*r.iii_prime) : Json(nullptr);
  j["relation_dim"] = r.relation_dim;
  return j;
}

Json cmd_hilbert(const Options& o) {
  FormFile f = load_form(o);
  require_n(f.form, o.N);
  const int top = o.max_degree < 0 ? 6 : o.max_degree;
  GradedQuotient A(algebra_from_form(f.form, o.N), guard_of(o));
  std::vector<Index> dims = A.dims(top);
  Json j = report("hilbert");
  j["N"] = o.N;
  j["max_degree"] = top;
  j["dims"] = dims_json(dims);
  std::optional<std::vector<long long>> predicted;
  std::string basis;
  if (o.N == 2 && f.form.arity() == 2 && is_preregular(f.form)) {
    predicted = predicted_d2(f.form.dim(), top);
    basis = "global dimension 2 series";
  } else if (f.form.arity() == o.N + 1 && is_preregular(f.form) && is_three_regular(f.form)) {
    predicted = predicted_d3(f.form.dim(), o.N, top);
    basis = "global dimension 3 series";
  }
  if (predicted) {
    Json p = Json::array();
    bool match = true;
    for (std::size_t n = 0; n < predicted->size(); ++n) {
      p.push_back((*predicted)[n]);
      if ((*predicted)[n] < 0 || static_cast<Index>((*predicted)[n]) != dims[n]) match = false;
    }
    j["predicted"] = p;
    j["predicted_from"] = basis;
    j["comparison"] = match ? "match" : "mismatch";
  } else {
    j["predicted"] = nullptr;
    j["comparison"] = "not applicable";
  }
  return j;
}

Json cmd_koszul(const Options& o) {
  FormFile f = load_form(o);
  require_n(f.form, o.N);
  const int top = o.max_degree < 0 ? 7 : o.max_degree;
  KoszulData data(algebra_from_form(f.form, o.N), top, guard_of(o));
  KoszulVerdict v = koszulity_check(data);
  ComplexTruncation c = koszul_complex(data);
  Json j = report("koszul");
  j["N"] = o.N;
  j["max_degree"] = top;
  j["verdict"] = v.pass ? "pass" : "fail";
  j["failure"] = v.failure ? Json{{"position", v.failure->first}, {"degree", v.failure->second}} : Json(nullptr);
  j["note"] = v.note;
  Json h = Json::array();
  for (const auto& [key, dim] : c.homology) {
    if (dim != 0) h.push_back(Json{{"position", key.first}, {"degree", key.second}, {"dim", dim}});
  }
  j["nonzero_homology"] = h;
  Json x = Json::array();
  for (int n = 0; n <= top; ++n) x.push_back(data.x_dim(n));
  j["dual_dims"] = x;
  return j;
}

Json cmd_dual(const Options& o) {
  FormFile f = load_form(o);
  require_n(f.form, o.N);
  const int top = o.max_degree < 0 ? f.form.arity() + 1 : o.max_degree;
  GradedQuotient dual(algebra_from_form(f.form, o.N).dual(), guard_of(o));
  Json j = report("dual");
  j["N"] = o.N;
  j["max_degree"] = top;
  j["dims"] = dims_json(dual.dims(top));
  return j;
}

Json cmd_twist(const Options& o) {
  FormFile f = load_form(o);
  Matrix L = parse_matrix(read_json_file(o.matrix), f.field);
  if (L.rows() != static_cast<Index>(f.form.dim())) throw ValidationError("$.rows: matrix size does not match the form");
  if (!is_in_glw(f.form, L)) throw PreconditionError("L does not preserve w");
  return form_to_json(twist_form(f.form, L));
}

Json cmd_hopf(const Options& o) {
  FormFile f = load_form(o);
  MultilinearForm wt = o.wtilde.empty() ? solve_wtilde(f.form) : parse_form(read_json_file(o.wtilde)).form;
  HopfPresentation hp = hopf_presentation(f.form, wt, o.guard ? *o.guard : kDefaultHopfGuard);
  Json j = report("hopf");
  j["dimension"] = hp.dim;
  j["arity"] = hp.arity;
  j["wtilde"] = form_to_json(hp.wtilde);
  Json rel = Json::array();
  for (const auto& r : hp.relations) rel.push_back(to_string(r, hp.dim));
  j["relations"] = rel;
  j["raw_relation_count"] = hp.raw_relation_count;
  Json anti = Json::object();
  for (int a = 0; a < hp.dim; ++a) {
    for (int b = 0; b < hp.dim; ++b) {
      anti["S(u^" + std::to_string(a) + "_" + std::to_string(b) + ")"] = to_string(hp.antipode[a * hp.dim + b], hp.dim);
    }
  }
  j["antipode"] = anti;
  j["counit_consistent"] = hp.counit_consistent;
  j["antipode_identity"] = verify_antipode_identity(hp);
  return j;
}

Json cmd_gallery(const Options& o) {
  auto entries = gallery();
  if (o.list || o.name.empty()) {
    Json names = Json::array();
    for (const auto& e : entries) names.push_back(Json{{"name", e.name}, {"N", e.N}, {"note", e.note}});
    Json j = report("gallery");
    j["entries"] = names;
    return j;
  }
  for (const auto& e : entries) {
    if (e.name == o.name) return form_to_json(e.form);
  }
  throw ValidationError("gallery: unknown entry \"" + o.name + "\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneous algebras of multilinear forms, in exact arithmetic"};
  app.require_subcommand(1);
  Options o;
  long long guard = 0;
  auto* guard_opt = app.add_option("--guard-columns", guard, "Size guard on (s+1)^n")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Write the result to this file");
  app.add_option("--field", o.field, "rational, gaussian or quadratic:c0,c1");

  auto add_common = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("file", o.file, "Form file")->required()->check(CLI::ExistingFile);
    if (needs_n) sub->add_option("--N", o.N, "Degree of the relations")->required();
  };
  auto* analyze = app.add_subcommand("analyze", "Preregularity, Q and 3-regularity");
  add_common(analyze, true);
  auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of A(w, N)");
  add_common(hilbert, true);
  hilbert->add_option("--max-degree", o.max_degree, "Highest degree")->check(CLI::NonNegativeNumber);
  auto* koszul = app.add_subcommand("koszul", "Truncated Koszulity check");
  add_common(koszul, true);
  koszul->add_option("--max-degree", o.max_degree, "Highest internal degree")->check(CLI::NonNegativeNumber);
  auto* dual = app.add_subcommand("dual", "Graded dimensions of the Koszul dual");
  add_common(dual, true);
  dual->add_option("--max-degree", o.max_degree, "Highest degree")->check(CLI::NonNegativeNumber);
  auto* twist = app.add_subcommand("twist", "Twisted form w^(L) for L preserving w");
  add_common(twist, false);
  twist->add_option("--N", o.N, "Degree of the relations (unused)");
  twist->add_option("--matrix", o.matrix, "Matrix file for L")->required()->check(CLI::ExistingFile);
  auto* hopf = app.add_subcommand("hopf", "Hopf algebra presentation of the form");
  add_common(hopf, false);
  hopf->add_option("--wtilde", o.wtilde, "Form file for the right inverse")->check(CLI::ExistingFile);
  auto* gal = app.add_subcommand("gallery", "List or export built-in forms");
  gal->add_option("name", o.name, "Entry to export");
  gal->add_flag("--list", o.list, "List entries");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  if (guard_opt->count() > 0) o.guard = static_cast<Index>(guard);

  try {
    Json result;
    if (analyze->parsed()) result = cmd_analyze(o);
    else if (hilbert->parsed()) result = cmd_hilbert(o);
    else if (koszul->parsed()) result = cmd_koszul(o);
    else if (dual->parsed()) result = cmd_dual(o);
    else if (twist->parsed()) result = cmd_twist(o);
    else if (hopf->parsed()) result = cmd_hopf(o);
    else result = cmd_gallery(o);
    std::string text = canonical_dump(result);
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output);
      if (!f) throw ValidationError(o.output + ": cannot write file");
      f << text;
    }
    return kOk;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const GuardError& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace homform
