#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "homform/algebra.hpp"

namespace homform {

/// nu_N(2l) = N l, nu_N(2l + 1) = N l + 1.
int nu(int N, int p);

/// X_n = (A^!_n)^* = intersection over r of E^{(x)(n-N-r)} (x) R (x) E^{(x)r}, n = 0..n_max.
/// Built as X_n = (X_{n-1} (x) E) cap (E^{(x)(n-N)} (x) R).
std::vector<Subspace> koszul_dual_spaces(const Presentation& p, int n_max, Index guard = default_guard_columns());

/// Graded pieces of A together with the spaces X_n, shared by the complexes below.
class KoszulData {
 public:
  KoszulData(const Presentation& p, int deg_max, Index guard = default_guard_columns());

  const Presentation& presentation() const { return p_; }
  int deg_max() const { return deg_max_; }
  GradedQuotient& algebra() { return A_; }
  /// X_n for n <= deg_max (zero beyond the first vanishing degree).
  const Subspace& x(int n) const { return X_.at(n); }
  Index x_dim(int n) const { return n < static_cast<int>(X_.size()) ? X_[n].dim() : 0; }

  /// Matrix of d^r : A_j (x) X_n -> A_{j+r} (x) X_{n-r}; row b * dim X_n + k is the image of b (x) xi_k.
  Matrix differential(int j, int n, int r);
  /// Coefficients a_{k,i} in A_r with d^r(1 (x) xi_k) = sum_i a_{k,i} (x) zeta_i.
  std::vector<std::vector<SparseVector>> unit_differential(int n, int r);

 private:
  Presentation p_;
  int deg_max_;
  GradedQuotient A_;
  std::vector<Subspace> X_;
  std::map<std::tuple<int, int, int>, Matrix> cache_;
};

using Key = std::pair<int, int>;  // (homological position, internal degree)

struct ComplexTerm {
  int position = 0;
  int degree = 0;
  Index dim = 0;
};

struct ComplexTruncation {
  std::vector<ComplexTerm> terms;
  std::map<Key, Matrix> differentials;  // keyed by source (position, internal degree)
  std::map<Key, Index> homology;
  std::map<Key, bool> complete;
  bool nilpotent = true;  // d^N = 0 for the N-complex, d^2 = 0 for a contraction
};

/// A_j (x) X_n, j + n <= deg_max, with d(a (x) e1...en) = a e1 (x) e2...en.
ComplexTruncation koszul_n_complex(const Presentation& p, int deg_max, Index guard = default_guard_columns());
ComplexTruncation koszul_n_complex(KoszulData& data);

/// K_p = A (x) X_{nu(p)}, differential d on odd positions and d^{N-1} on even ones.
ComplexTruncation koszul_complex(const Presentation& p, int deg_max, Index guard = default_guard_columns());
ComplexTruncation koszul_complex(KoszulData& data);

struct KoszulVerdict {
  bool pass = false;
  int checked_degree = 0;
  std::optional<Key> failure;  // first nonzero homology: (position, internal degree)
  std::string note;
};

KoszulVerdict koszulity_check(const Presentation& p, int deg_max, Index guard = default_guard_columns());
KoszulVerdict koszulity_check(KoszulData& data);

struct CochainVerdict {
  bool pattern = false;
  std::optional<int> D;                 // last position with X_{nu(D)} != 0
  std::map<Key, Index> cohomology;      // complete (position, internal degree) only
  std::string note;
};

/// Cohomology of Hom_A(K(A, K), A) = X^* (x) A; Gorenstein pattern: zero below D,
/// one-dimensional at (D, -nu(D)) and zero elsewhere at D.
CochainVerdict gorenstein_cochain_check(const Presentation& p, int deg_max, Index guard = default_guard_columns());
CochainVerdict gorenstein_cochain_check(KoszulData& data);

struct DiagnosticItem {
  std::string name;
  bool applicable = false;
  bool pass = false;
  std::string detail;
};

struct GorensteinDiagnostics {
  int m = 0;
  int N = 0;
  std::optional<int> D;
  std::vector<Index> dual_dims;  // dim A^!_n for n = 0..m+1
  std::vector<DiagnosticItem> items;
  bool all_pass() const;
  std::string note;
};

GorensteinDiagnostics gorenstein_diagnostics(const MultilinearForm& w, int N, Index guard = default_guard_columns());

}  // namespace homform
