#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homform/tensors.hpp"

namespace homform {

enum class TwistStatus { unique, none, ambiguous, not_invertible };

std::string to_string(TwistStatus s);

struct TwistSolution {
  TwistStatus status = TwistStatus::none;
  std::optional<Matrix> q;  // set for unique (and for not_invertible, the singular solution)
  Index solution_dim = 0;   // dimension of the affine solution space when nonempty
};

/// Solves W_{l1..lm} = Q^t_{lm} W_{t l1..l(m-1)} for Q.
TwistSolution solve_twist(const MultilinearForm& w);
/// True iff w is Q-cyclic.
bool is_q_cyclic(const MultilinearForm& w, const Matrix& Q);

std::vector<bool> one_site_nondegenerate(const MultilinearForm& w);
bool is_preregular(const MultilinearForm& w);
/// Q_w of a preregular form; throws PreconditionError otherwise.
Matrix q_matrix(const MultilinearForm& w);

struct ThreeRegularity {
  bool three_regular = false;
  Index solution_dim = 0;     // dimension of the (L0, L1) solution space
  bool contains_identity = false;
};

/// Requires a preregular form of arity at least 3.
ThreeRegularity three_regularity(const MultilinearForm& w);
bool is_three_regular(const MultilinearForm& w);
bool satisfies_iii_prime(const MultilinearForm& w);

/// (1/m) sum_j c^j(w) with c the Q-cyclic shift; requires w = w o Q.
MultilinearForm cyclic_projector(const MultilinearForm& w, const Matrix& Q);

struct RegularityReport {
  std::vector<bool> one_site_nondegenerate;
  TwistSolution twist;
  bool preregular = false;
  std::optional<ThreeRegularity> three_regular;  // when m = N + 1 and preregular
  std::optional<bool> iii_prime;                 // when m >= 3
  Index relation_dim = 0;
};

RegularityReport analyze_regularity(const MultilinearForm& w, int N);

}  // namespace homform
