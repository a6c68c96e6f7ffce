#pragma once

#include <map>
#include <vector>

#include "homform/tensors.hpp"

namespace homform {

/// Default size guard on (s+1)^n: 100000, or HOMFORM_GUARD_COLUMNS when set.
Index default_guard_columns();

/// Throws GuardError if d^n exceeds the guard.
void check_guard(int d, int n, Index guard);

/// A(E, R) = T(E)/(R) with R a subspace of E^{(x)N}.
class Presentation {
 public:
  Presentation() = default;
  Presentation(int generators, int degree, Subspace relations);

  int generators() const { return d_; }
  int degree() const { return N_; }
  const Subspace& relations() const { return R_; }
  /// A^! = A(E*, R^perp).
  Presentation dual() const;

  bool operator==(const Presentation& o) const {
    return d_ == o.d_ && N_ == o.N_ && R_ == o.R_;
  }
  bool operator!=(const Presentation& o) const { return !(*this == o); }

 private:
  int d_ = 0;
  int N_ = 0;
  Subspace R_;
};

/// R spanned by the contractions W_{l1..l(m-N) mu1..muN}.
Presentation algebra_from_form(const MultilinearForm& w, int N);

/// Graded pieces of A(E, R), built degree by degree.
///
/// Degree n carries a basis of standard words (lexicographically least
/// monomials not in the span of the ideal and smaller monomials) and the
/// right multiplication table by generators into degree n + 1.
class GradedQuotient {
 public:
  explicit GradedQuotient(Presentation p, Index guard = default_guard_columns());

  const Presentation& presentation() const { return p_; }
  int generators() const { return p_.generators(); }
  Index guard() const { return guard_; }

  /// Builds every degree up to n (throws GuardError past the guard).
  void extend_to(int n);
  int built_degree() const { return static_cast<int>(words_.size()) - 1; }

  Index dim(int n);
  std::vector<Index> dims(int n_max);
  /// Codes (base d, length n) of the standard words of degree n, increasing.
  const std::vector<Index>& basis_words(int n);
  /// Position of a standard word in the degree-n basis, or -1.
  long basis_position(int n, Index word) ;

  /// Class of (basis element b of degree n) * x_j in degree n + 1.
  const SparseVector& right_generator(int n, Index b, int j);
  /// a * x_j for a in degree n.
  SparseVector right_mul_generator(int n, const SparseVector& a, int j);
  /// x_j * a for a in degree n.
  SparseVector left_mul_generator(int n, int j, const SparseVector& a);
  /// a * word for a in degree n and a word of length len.
  SparseVector right_mul_word(int n, const SparseVector& a, Index word, int len);
  /// Normal form of an element of E^{(x)n}.
  SparseVector normal_form(int n, const SparseVector& tensor);
  SparseVector normal_form_word(int n, Index word);
  /// a * b for a in degree p, b in degree q.
  SparseVector multiply(int p, const SparseVector& a, int q, const SparseVector& b);

 private:
  void build_next();

  Presentation p_;
  Index guard_;
  std::vector<std::vector<Index>> words_;
  std::vector<std::map<Index, Index>> position_;
  std::vector<std::vector<SparseVector>> right_;  // right_[n][b*d + j]
  std::map<std::pair<int, Index>, SparseVector> left_cache_;  // (n, j*|B_n| + b)
};

/// dim A_n for a single degree.
Index graded_dimension(const Presentation& p, int n, Index guard = default_guard_columns());
/// dims of A_0..A_{n_max}.
std::vector<Index> hilbert_truncation(const Presentation& p, int n_max, Index guard = default_guard_columns());

/// Coefficients of 1/(1 - (s+1) t + t^2).
std::vector<long long> predicted_d2(int s_plus_1, int n_max);
/// Coefficients of 1/(1 - (s+1) t + (s+1) t^N - t^(N+1)).
std::vector<long long> predicted_d3(int s_plus_1, int N, int n_max);

Presentation dual_algebra(const Presentation& p);

/// Image of a length-n word under the substitution x^mu -> sum_nu M[mu][nu] x^nu.
SparseVector word_image(Index word, int n, const Matrix& M);
/// Matrix of the induced degree-0 map on A_n; row b is the image of the b-th standard word.
Matrix induced_map(GradedQuotient& A, const Matrix& M, int n);
/// True iff the substitution by M, applied in every slot, maps S into itself.
bool tensor_power_preserves(const Subspace& S, const Matrix& M, int n);

/// Degree-n ideal component via I_n = E (x) I_{n-1} + R (x) E^{(x)(n-N)}.
Subspace ideal_component(const Presentation& p, int n, Index guard = default_guard_columns());

/// W_n: span of the (m - n)-fold contractions of w for n >= N, E^{(x)n} below N.
Subspace w_subspace(const MultilinearForm& w, int N, int n);

/// Right and left multiplication by a degree-one element a are injective on A_n, n <= n_max.
bool left_right_regular_check(const Presentation& p, const SparseVector& a, int n_max);

struct ThetaBasis {
  MultilinearForm wtilde;
  std::vector<SparseVector> theta;  // Theta^lambda as elements of A^!_N
  bool is_basis = false;
  bool relations_hold = false;
};

/// Theta^lambda = Wt^{lambda l1..lN} theta_l1...theta_lN in A^!_N; requires preregular w with m = N + 1.
ThetaBasis theta_basis(const MultilinearForm& w, int N);

}  // namespace homform
