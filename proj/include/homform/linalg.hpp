#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homform/scalar.hpp"

namespace homform {

using Index = std::uint64_t;

/// Sorted list of (index, value) pairs without zeros.
class SparseVector {
 public:
  using Entry = std::pair<Index, Scalar>;

  SparseVector() = default;
  /// Entries may be unsorted and contain zeros or repeated indices.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(Index i) { SparseVector v; v.e_.emplace_back(i, Scalar(1)); return v; }

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  Scalar get(Index i) const;
  Index lead() const { return e_.front().first; }
  Index last() const { return e_.back().first; }

  /// Appends an entry with index larger than any stored one.
  void push_back(Index i, Scalar v) {
    if (!v.is_zero()) e_.emplace_back(i, std::move(v));
  }

  /// this += c * other
  void axpy(const Scalar& c, const SparseVector& other);
  void scale(const Scalar& c);
  SparseVector scaled(const Scalar& c) const { SparseVector r = *this; r.scale(c); return r; }

  bool operator==(const SparseVector& o) const { return e_ == o.e_; }
  bool operator!=(const SparseVector& o) const { return !(*this == o); }

 private:
  std::vector<Entry> e_;
};

SparseVector operator+(const SparseVector& a, const SparseVector& b);
SparseVector operator-(const SparseVector& a, const SparseVector& b);

/// Sparse row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols) : cols_(cols), rows_(rows) {}

  static Matrix identity(Index n);
  static Matrix from_rows(Index cols, std::vector<SparseVector> rows);
  /// Dense construction, mostly for tests and small matrices.
  static Matrix dense(const std::vector<std::vector<Scalar>>& entries);

  Index rows() const { return rows_.size(); }
  Index cols() const { return cols_; }
  const SparseVector& row(Index r) const { return rows_[r]; }
  SparseVector& row_mut(Index r) { return rows_[r]; }
  const std::vector<SparseVector>& row_list() const { return rows_; }
  Scalar at(Index r, Index c) const { return rows_[r].get(c); }
  void set(Index r, Index c, const Scalar& v);
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  /// this * v for v a column vector of length cols().
  SparseVector apply(const SparseVector& v) const;
  /// Kronecker product, row index r1 * o.rows() + r2.
  Matrix kron(const Matrix& o) const;

  bool operator==(const Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Index cols_ = 0;
  std::vector<SparseVector> rows_;
};

/// Incremental row echelon form with leading pivots.
///
/// Stored rows are normalized so the pivot entry is 1; rows are only
/// reduced against earlier pivots, so a final call to reduced_rows() does the
/// back substitution.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index rank() const { return rows_.size(); }

  /// Reduces v against the stored rows (all pivot positions cleared).
  SparseVector reduce(SparseVector v) const;
  /// Inserts v; returns true if it was independent of the stored rows.
  bool insert(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Canonical reduced row echelon rows, sorted by pivot.
  std::vector<SparseVector> reduced_rows() const;
  std::vector<Index> pivots() const;

 private:
  Index cols_;
  std::map<Index, std::size_t> pivot_row_;
  std::vector<SparseVector> rows_;
};

struct RrefResult {
  Matrix reduced;  // nonzero rows only
  std::vector<Index> pivots;
};

RrefResult rref(const Matrix& m);
Index rank(const Matrix& m);

/// Linear subspace of K^ambient stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient) {}
  static Subspace span(Index ambient, std::vector<SparseVector> vectors);
  static Subspace full(Index ambient);
  static Subspace from_builder(const EchelonBuilder& b);

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(ambient_, basis_); }

  bool contains(const SparseVector& v) const;
  /// Coordinates of v in the canonical basis; nullopt if v is not in the space.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;
  /// Residual of v after clearing every pivot position.
  SparseVector reduce(SparseVector v) const;
  /// Annihilator under the pairing sum_i x_i y_i.
  Subspace annihilator() const;
  bool is_subspace_of(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Index ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<Index> pivots_;
  std::map<Index, std::size_t> pivot_row_;
  void index_pivots();
};

/// {v : m v = 0}.
Subspace nullspace(const Matrix& m);
/// {c : sum_i c_i rows_i = 0}, i.e. the nullspace of the transpose.
Subspace left_nullspace(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Computed by duality as the annihilator of a^perp + b^perp.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/// Direct intersection: combinations of a's basis whose residual modulo b
/// vanishes. Agrees with subspace_intersection.
Subspace subspace_intersection_direct(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const SparseVector& v);

/// Inverse of a square matrix; throws PreconditionError if singular.
Matrix inverse(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);

}  // namespace homform
