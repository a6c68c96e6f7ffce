#pragma once

#include <map>
#include <vector>

#include "homform/algebra.hpp"

namespace homform {

/// Hochschild chains M (x) A^{(x)n} of total internal degree t, M = A as a vector space.
/// Basis: compositions (j0..jn) of t in lexicographic order, then standard words slot by slot.
class ChainSpace {
 public:
  ChainSpace(GradedQuotient& A, int n, int t);

  int length() const { return n_; }
  int degree() const { return t_; }
  Index dim() const { return dim_; }
  const std::vector<std::vector<int>>& compositions() const { return comps_; }
  Index offset(const std::vector<int>& comp) const { return offset_.at(comp); }
  /// Index of the basis element with the given composition and per-slot basis positions.
  Index index(const std::vector<int>& comp, const std::vector<Index>& pos) const;
  /// Inverse of index().
  std::pair<std::vector<int>, std::vector<Index>> decode(Index i) const;

 private:
  int n_;
  int t_;
  Index dim_ = 0;
  std::vector<std::vector<int>> comps_;
  std::map<std::vector<int>, Index> offset_;
  std::map<std::vector<int>, std::vector<Index>> slot_dims_;
  std::vector<Index> starts_;
};

/// The bimodule ^wA: A as a right module, left action a . x = (-1)^{(m-1)n} sigma^w^{-1}(a) x for a in A_n.
class TwistedHochschild {
 public:
  /// Requires N = 2 and a preregular w.
  explicit TwistedHochschild(const MultilinearForm& w, Index guard = default_guard_columns());

  GradedQuotient& algebra() { return A_; }
  /// Face k of the boundary on one basis chain, sign included, as a vector of the (n-1)-chains.
  SparseVector face(const ChainSpace& src, const ChainSpace& dst, Index basis, int k);
  /// Matrix of b : C_n -> C_{n-1} in degree t, rows are images of basis chains.
  Matrix boundary(int n, int t);
  /// 1 (x) w in C_m of degree m.
  SparseVector one_otimes_w(const ChainSpace& space) const;

 private:
  const Matrix& sigma_inverse(int j);

  MultilinearForm w_;
  Index guard_;
  GradedQuotient A_;
  Matrix q_inv_;
  std::map<int, Matrix> sigma_inv_;
};

struct TwistedChain {
  int degree = 0;
  int length = 0;
  SparseVector total;                // b(1 (x) w)
  SparseVector outer;                // first face plus the twisted last face
  std::vector<SparseVector> middle;  // faces k = 1..m-1, each on its own
  bool is_zero() const;
};

TwistedChain boundary_of_one_otimes_w(const MultilinearForm& w);

/// True iff 1 (x) w is not in the image of b from C_{m+1} in degree m. Requires b(1 (x) w) = 0.
/// The guard bounds the dimension of C_{m+1}.
bool is_nontrivial_cycle(const MultilinearForm& w, Index guard = default_guard_columns());

}  // namespace homform
