#pragma once

#include <map>
#include <vector>

#include "homform/linalg.hpp"

namespace homform {

using MultiIndex = std::vector<int>;

/// base^exp, throwing GuardError on overflow past 2^62.
Index ipow(Index base, int exp);
/// Lexicographic code sum_k idx[k] * d^(m-1-k).
Index encode(const MultiIndex& idx, int d);
MultiIndex decode(Index code, int d, int m);

/// Sparse m-linear form on K^d; components W_{l1...lm} keyed by lexicographic code.
class MultilinearForm {
 public:
  MultilinearForm() = default;
  MultilinearForm(int dim, int arity);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const std::map<Index, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(const MultiIndex& idx) const;
  Scalar at_code(Index code) const;
  void set(const MultiIndex& idx, const Scalar& v);
  void set_code(Index code, const Scalar& v);
  void add_code(Index code, const Scalar& v);

  /// Components as a vector of length d^m.
  SparseVector as_vector() const;
  static MultilinearForm from_vector(int dim, int arity, const SparseVector& v);

  MultilinearForm scaled(const Scalar& c) const;
  MultilinearForm operator+(const MultilinearForm& o) const;
  MultilinearForm operator-(const MultilinearForm& o) const;

  bool operator==(const MultilinearForm& o) const {
    return dim_ == o.dim_ && arity_ == o.arity_ && entries_ == o.entries_;
  }
  bool operator!=(const MultilinearForm& o) const { return !(*this == o); }

 private:
  int dim_ = 0;
  int arity_ = 0;
  std::map<Index, Scalar> entries_;
};

/// d^left x d^(m-left) matrix with entry W at the concatenated index.
Matrix flatten(const MultilinearForm& w, int left_slots);
/// d x d^(m-1) matrix with slot k as row index and the other slots, in order, as column.
Matrix flatten_slot(const MultilinearForm& w, int slot);

/// new W_mu = sum_lambda W_lambda prod_k M_k[lambda_k][mu_k]; one matrix per slot.
MultilinearForm act_per_slot(const MultilinearForm& w, const std::vector<Matrix>& per_slot);
/// (w o L)(X1..Xm) = w(L X1, ..., L Xm).
MultilinearForm gl_act(const MultilinearForm& w, const Matrix& L);
/// w'(X1..Xm) = w(Q Xm, X1, ..., X_{m-1}).
MultilinearForm cyclic_shift(const MultilinearForm& w, const Matrix& Q);

/// Row vectors W_{lambda mu} in E^{(x)N}, one per prefix lambda of length m-N (zero rows skipped).
std::vector<SparseVector> contractions(const MultilinearForm& w, int n);

}  // namespace homform
