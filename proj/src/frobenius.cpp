#include "homform/frobenius.hpp"

#include <algorithm>

#include "homform/errors.hpp"
#include "homform/preregularity.hpp"

namespace homform {

namespace {

void require_preregular(const MultilinearForm& w, int N) {
  if (N < 2 || N > w.arity()) throw PreconditionError("need 2 <= N <= m");
  if (!is_preregular(w)) throw PreconditionError("form is not preregular");
}

// omega_w of a degree-m element given in standard-word coordinates.
Scalar omega(GradedQuotient& dual, const MultilinearForm& w, const SparseVector& x) {
  const auto& words = dual.basis_words(w.arity());
  Scalar s;
  for (const auto& [b, c] : x.entries()) s = s + c * w.at_code(words[b]);
  return s;
}

}  // namespace

Matrix pairing_matrix(GradedQuotient& dual, const MultilinearForm& w, int p) {
  const int m = w.arity();
  if (p < 0 || p > m) throw ValidationError("pairing degree out of range");
  const auto& left = dual.basis_words(p);
  const auto& right = dual.basis_words(m - p);
  const Index shift = ipow(w.dim(), m - p);
  Matrix P(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t j = 0; j < right.size(); ++j) e.emplace_back(j, w.at_code(left[i] * shift + right[j]));
    P.row_mut(i) = SparseVector::from_entries(std::move(e));
  }
  return P;
}

std::vector<Scalar> omega_form(const MultilinearForm& w, int N) {
  require_preregular(w, N);
  const int m = w.arity();
  GradedQuotient dual(algebra_from_form(w, N).dual());
  const auto& words = dual.basis_words(m);
  std::vector<Scalar> out;
  for (Index b : words) out.push_back(w.at_code(b));
  // w must vanish on the degree-m ideal of A^!: its value on any word equals the value on the normal form.
  const Index total = ipow(w.dim(), m);
  for (Index word = 0; word < total; ++word) {
    if (dual.basis_position(m, word) >= 0) continue;
    if (omega(dual, w, dual.normal_form_word(m, word)) != w.at_code(word)) {
      throw VerificationError("w does not define a linear form on A^!_m");
    }
  }
  return out;
}

SigmaAutomorphisms sigma_automorphisms(const MultilinearForm& w, int N, int n_max) {
  require_preregular(w, N);
  SigmaAutomorphisms out;
  out.q = q_matrix(w);
  Matrix qt = out.q.transpose();
  Presentation pres = algebra_from_form(w, N);
  GradedQuotient dual(pres.dual());
  GradedQuotient A(pres);
  if (!tensor_power_preserves(dual.presentation().relations(), qt, N)) {
    throw VerificationError("Q_w does not preserve the dual relations");
  }
  if (!tensor_power_preserves(pres.relations(), out.q, N)) {
    throw VerificationError("the transpose of Q_w does not preserve the relations");
  }
  for (int n = 0; n <= n_max; ++n) {
    out.lower.push_back(induced_map(dual, qt, n));
    out.upper.push_back(induced_map(A, out.q, n));
  }
  return out;
}

bool twisted_trace_property(const MultilinearForm& w, int N) {
  const int m = w.arity();
  SigmaAutomorphisms s = sigma_automorphisms(w, N, m);
  GradedQuotient dual(algebra_from_form(w, N).dual());
  for (int p = 0; p <= m; ++p) {
    const Index dp = dual.dim(p);
    const Index dq = dual.dim(m - p);
    for (Index x = 0; x < dp; ++x) {
      SparseVector ex = SparseVector::unit(x);
      for (Index y = 0; y < dq; ++y) {
        SparseVector ey = SparseVector::unit(y);
        Scalar lhs = omega(dual, w, dual.multiply(p, ex, m - p, ey));
        Scalar rhs = omega(dual, w, dual.multiply(m - p, s.lower[m - p].row(y), p, ex));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

FrobeniusQuotient frobenius_quotient(const MultilinearForm& w, int N) {
  require_preregular(w, N);
  const int m = w.arity();
  GradedQuotient dual(algebra_from_form(w, N).dual());
  SigmaAutomorphisms s = sigma_automorphisms(w, N, m);
  FrobeniusQuotient F;
  F.dual_dims = dual.dims(m);
  for (int p = 0; p <= m; ++p) F.ideal.push_back(nullspace(pairing_matrix(dual, w, m - p)));

  F.saturation_stable = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p < m; ++p) {
      std::vector<SparseVector> extra;
      for (const auto& v : F.ideal[p].basis()) {
        for (int j = 0; j < w.dim(); ++j) {
          for (SparseVector img : {dual.right_mul_generator(p, v, j), dual.left_mul_generator(p, j, v)}) {
            if (!F.ideal[p + 1].contains(img)) extra.push_back(std::move(img));
          }
        }
      }
      if (!extra.empty()) {
        changed = true;
        F.saturation_stable = false;
        auto basis = F.ideal[p + 1].basis();
        basis.insert(basis.end(), extra.begin(), extra.end());
        F.ideal[p + 1] = Subspace::span(F.dual_dims[p + 1], std::move(basis));
      }
    }
  }

  for (int p = 0; p <= m; ++p) {
    std::vector<Index> comp;
    const auto& piv = F.ideal[p].pivots();
    for (Index i = 0, k = 0; i < F.dual_dims[p]; ++i) {
      if (k < piv.size() && piv[k] == i) {
        ++k;
      } else {
        comp.push_back(i);
      }
    }
    F.dims.push_back(comp.size());
    F.complement.push_back(std::move(comp));
  }

  F.pairings_invertible = true;
  for (int p = 0; p <= m; ++p) {
    Matrix full = pairing_matrix(dual, w, p);
    const auto& rows = F.complement[p];
    const auto& cols = F.complement[m - p];
    Matrix P(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) P.set(i, j, full.at(rows[i], cols[j]));
    }
    if (P.rows() != P.cols() || rank(P) != P.rows()) F.pairings_invertible = false;
    F.pairing.push_back(std::move(P));

    // sigma on F_p, in coordinates of the complement positions
    for (const auto& v : F.ideal[p].basis()) {
      SparseVector img;
      for (const auto& [c, x] : v.entries()) img.axpy(x, s.lower[p].row(c));
      if (!F.ideal[p].contains(img)) throw VerificationError("sigma_w does not preserve the ideal");
    }
    Matrix S(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      SparseVector r = F.ideal[p].reduce(s.lower[p].row(rows[i]));
      for (const auto& [c, x] : r.entries()) {
        auto it = std::lower_bound(rows.begin(), rows.end(), c);
        S.set(i, it - rows.begin(), x);
      }
    }
    F.sigma.push_back(std::move(S));
  }

  F.commutation = true;
  for (int p = 0; p <= m && F.commutation; ++p) {
    for (Index x : F.complement[p]) {
      SparseVector ex = SparseVector::unit(x);
      for (Index y : F.complement[m - p]) {
        SparseVector ey = SparseVector::unit(y);
        SparseVector sy = F.ideal[m - p].reduce(s.lower[m - p].row(y));
        if (omega(dual, w, dual.multiply(p, ex, m - p, ey)) != omega(dual, w, dual.multiply(m - p, sy, p, ex))) {
          F.commutation = false;
        }
      }
    }
  }
  return F;
}

}  // namespace homform
