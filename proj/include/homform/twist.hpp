#pragma once

#include <vector>

#include "homform/algebra.hpp"

namespace homform {

/// True iff w o L = w; throws PreconditionError for singular L.
bool is_in_glw(const MultilinearForm& w, const Matrix& L);

struct TwistData {
  Matrix L;
  std::vector<Matrix> inverse_powers;  // L^0, L^-1, ..., L^-(m-1)
  MultilinearForm twisted;             // w^(L)
  Matrix q;                            // Q of w^(L), solved directly
  Matrix predicted_q;                  // L^-1 Q_w L^-(m-1)
};

/// W^(L)_{l1..lm} = W_{l1 l2'..lm'} (L^-1)^{l2'}_{l2} ... (L^-(m-1))^{lm'}_{lm}.
MultilinearForm twist_form(const MultilinearForm& w, const Matrix& L);
/// Requires a preregular w and L in GL_w.
TwistData make_twist(const MultilinearForm& w, const Matrix& L);

/// R(alpha) = (1 (x) alpha^-1 (x) ... (x) alpha^-(N-1)) R, where alpha(x^mu) = alpha[mu][nu] x^nu.
/// For L in GL_w the automorphism induced by L has matrix L in this convention.
Presentation twist_relations(const Presentation& p, const Matrix& alpha);

}  // namespace homform
