#include "homform/twist.hpp"

#include "homform/errors.hpp"
#include "homform/preregularity.hpp"

namespace homform {

namespace {

std::vector<Matrix> inverse_ladder(const Matrix& L, int count) {
  auto inv = try_inverse(L);
  if (!inv) throw PreconditionError("matrix is singular");
  std::vector<Matrix> out{Matrix::identity(L.rows())};
  for (int k = 1; k < count; ++k) out.push_back(out.back() * *inv);
  return out;
}

}  // namespace

bool is_in_glw(const MultilinearForm& w, const Matrix& L) {
  if (L.rows() != static_cast<Index>(w.dim()) || L.cols() != L.rows()) throw ValidationError("matrix size does not match the form");
  if (!try_inverse(L)) throw PreconditionError("matrix is singular");
  return gl_act(w, L) == w;
}

MultilinearForm twist_form(const MultilinearForm& w, const Matrix& L) {
  if (!is_in_glw(w, L)) throw PreconditionError("L does not preserve w");
  return act_per_slot(w, inverse_ladder(L, w.arity()));
}

TwistData make_twist(const MultilinearForm& w, const Matrix& L) {
  TwistData t;
  t.L = L;
  t.twisted = twist_form(w, L);
  t.inverse_powers = inverse_ladder(L, w.arity());
  t.q = q_matrix(t.twisted);
  t.predicted_q = t.inverse_powers[1] * q_matrix(w) * t.inverse_powers.back();
  return t;
}

Presentation twist_relations(const Presentation& p, const Matrix& alpha) {
  const int d = p.generators();
  const int N = p.degree();
  if (alpha.rows() != static_cast<Index>(d) || alpha.cols() != alpha.rows()) throw ValidationError("matrix size does not match the generators");
  auto ladder = inverse_ladder(alpha, N);
  std::vector<SparseVector> rows;
  for (const auto& v : p.relations().basis()) {
    MultilinearForm f = MultilinearForm::from_vector(d, N, v);
    rows.push_back(act_per_slot(f, ladder).as_vector());
  }
  return Presentation(d, N, Subspace::span(ipow(d, N), std::move(rows)));
}

}  // namespace homform
