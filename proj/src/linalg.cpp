#include "homform/linalg.hpp"

#include <algorithm>

#include "homform/errors.hpp"

namespace homform {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.first < y.first; });
  SparseVector v;
  for (auto& [i, s] : entries) {
    if (!v.e_.empty() && v.e_.back().first == i) {
      v.e_.back().second += s;
      if (v.e_.back().second.is_zero()) v.e_.pop_back();
    } else if (!s.is_zero()) {
      v.e_.emplace_back(i, std::move(s));
    }
  }
  return v;
}

Scalar SparseVector::get(Index i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& x, Index j) { return x.first < j; });
  if (it != e_.end() && it->first == i) return it->second;
  return Scalar();
}

void SparseVector::axpy(const Scalar& c, const SparseVector& other) {
  if (c.is_zero() || other.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + other.e_.size());
  auto a = e_.begin();
  auto b = other.e_.begin();
  while (a != e_.end() || b != other.e_.end()) {
    if (b == other.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = std::move(a->second);
      s += c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

void SparseVector::scale(const Scalar& c) {
  if (c.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& [i, s] : e_) s *= c;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.axpy(Scalar(1), b);
  return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.axpy(Scalar(-1), b);
  return r;
}

Matrix Matrix::identity(Index n) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.rows_[i].push_back(i, Scalar(1));
  return m;
}

Matrix Matrix::from_rows(Index cols, std::vector<SparseVector> rows) {
  Matrix m;
  m.cols_ = cols;
  for (const auto& r : rows) {
    if (!r.empty() && r.last() >= cols) throw ValidationError("row index exceeds column count");
  }
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::dense(const std::vector<std::vector<Scalar>>& entries) {
  Index cols = entries.empty() ? 0 : entries.front().size();
  Matrix m(entries.size(), cols);
  for (Index r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != cols) throw ValidationError("ragged dense matrix");
    for (Index c = 0; c < cols; ++c) m.rows_[r].push_back(c, entries[r][c]);
  }
  return m;
}

void Matrix::set(Index r, Index c, const Scalar& v) {
  if (r >= rows() || c >= cols_) throw ValidationError("matrix index out of range");
  SparseVector delta;
  delta.push_back(c, v - at(r, c));
  rows_[r].axpy(Scalar(1), delta);
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

Matrix Matrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(cols_);
  for (Index r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
  }
  Matrix t(cols_, rows());
  for (Index c = 0; c < cols_; ++c) t.rows_[c] = SparseVector::from_entries(std::move(cols[c]));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows()) throw ValidationError("matrix product shape mismatch");
  Matrix p(rows(), o.cols());
  for (Index r = 0; r < rows(); ++r) {
    for (const auto& [k, v] : rows_[r].entries()) p.rows_[r].axpy(v, o.rows_[k]);
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw ValidationError("matrix sum shape mismatch");
  Matrix s = *this;
  for (Index r = 0; r < rows(); ++r) s.rows_[r].axpy(Scalar(1), o.rows_[r]);
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix s = *this;
  for (auto& r : s.rows_) r.scale(c);
  return s;
}

SparseVector Matrix::apply(const SparseVector& v) const {
  std::vector<SparseVector::Entry> out;
  for (Index r = 0; r < rows(); ++r) {
    Scalar acc;
    const auto& re = rows_[r].entries();
    const auto& ve = v.entries();
    std::size_t i = 0, j = 0;
    while (i < re.size() && j < ve.size()) {
      if (re[i].first < ve[j].first) {
        ++i;
      } else if (ve[j].first < re[i].first) {
        ++j;
      } else {
        acc += re[i].second * ve[j].second;
        ++i;
        ++j;
      }
    }
    if (!acc.is_zero()) out.emplace_back(r, std::move(acc));
  }
  SparseVector res = SparseVector::from_entries(std::move(out));
  return res;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix k(rows() * o.rows(), cols_ * o.cols_);
  for (Index r1 = 0; r1 < rows(); ++r1) {
    for (Index r2 = 0; r2 < o.rows(); ++r2) {
      SparseVector& out = k.rows_[r1 * o.rows() + r2];
      for (const auto& [c1, v1] : rows_[r1].entries()) {
        for (const auto& [c2, v2] : o.rows_[r2].entries()) out.push_back(c1 * o.cols_ + c2, v1 * v2);
      }
    }
  }
  return k;
}

SparseVector EchelonBuilder::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto& [i, c] = v.entries()[pos];
    auto it = pivot_row_.find(i);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    Scalar coef = -c;
    v.axpy(coef, rows_[it->second]);
  }
  return v;
}

bool EchelonBuilder::insert(SparseVector v) {
  if (!v.empty() && v.last() >= cols_) throw ValidationError("vector exceeds ambient dimension");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar lead = v.entries().front().second;
  if (!lead.is_one()) v.scale(lead.inverse());
  pivot_row_.emplace(v.lead(), rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<Index> EchelonBuilder::pivots() const {
  std::vector<Index> p;
  p.reserve(pivot_row_.size());
  for (const auto& [piv, r] : pivot_row_) p.push_back(piv);
  return p;
}

std::vector<SparseVector> EchelonBuilder::reduced_rows() const {
  std::map<Index, SparseVector> done;
  for (auto it = pivot_row_.rbegin(); it != pivot_row_.rend(); ++it) {
    SparseVector v = rows_[it->second];
    std::size_t pos = 1;
    while (pos < v.size()) {
      const auto& [i, c] = v.entries()[pos];
      auto d = done.find(i);
      if (d == done.end()) {
        ++pos;
        continue;
      }
      Scalar coef = -c;
      v.axpy(coef, d->second);
    }
    done.emplace(it->first, std::move(v));
  }
  std::vector<SparseVector> out;
  out.reserve(done.size());
  for (auto& [p, v] : done) out.push_back(std::move(v));
  return out;
}

RrefResult rref(const Matrix& m) {
  EchelonBuilder b(m.cols());
  for (const auto& r : m.row_list()) b.insert(r);
  RrefResult res;
  res.pivots = b.pivots();
  res.reduced = Matrix::from_rows(m.cols(), b.reduced_rows());
  return res;
}

Index rank(const Matrix& m) {
  EchelonBuilder b(m.cols());
  for (const auto& r : m.row_list()) b.insert(r);
  return b.rank();
}

void Subspace::index_pivots() {
  pivots_.clear();
  pivot_row_.clear();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    pivots_.push_back(basis_[i].lead());
    pivot_row_.emplace(basis_[i].lead(), i);
  }
}

Subspace Subspace::span(Index ambient, std::vector<SparseVector> vectors) {
  EchelonBuilder b(ambient);
  for (auto& v : vectors) b.insert(std::move(v));
  return from_builder(b);
}

Subspace Subspace::from_builder(const EchelonBuilder& b) {
  Subspace s(b.cols());
  s.basis_ = b.reduced_rows();
  s.index_pivots();
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) s.basis_.push_back(SparseVector::unit(i));
  s.index_pivots();
  return s;
}

SparseVector Subspace::reduce(SparseVector v) const {
  SparseVector out = v;
  for (const auto& [i, c] : v.entries()) {
    auto it = pivot_row_.find(i);
    if (it != pivot_row_.end()) out.axpy(-c, basis_[it->second]);
  }
  return out;
}

bool Subspace::contains(const SparseVector& v) const {
  if (!v.empty() && v.last() >= ambient_) throw ValidationError("vector exceeds ambient dimension");
  return reduce(v).empty();
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Scalar> c(basis_.size());
  for (const auto& [i, s] : v.entries()) {
    auto it = pivot_row_.find(i);
    if (it != pivot_row_.end()) c[it->second] = s;
  }
  return c;
}

Subspace Subspace::annihilator() const { return nullspace(basis_matrix()); }

bool Subspace::is_subspace_of(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw ValidationError("ambient dimension mismatch");
  return std::all_of(basis_.begin(), basis_.end(), [&](const SparseVector& v) { return o.contains(v); });
}

Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : r.pivots) is_pivot[p] = true;
  std::map<Index, std::vector<SparseVector::Entry>> free_vecs;
  for (Index c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_vecs[c].emplace_back(c, Scalar(1));
  }
  for (Index i = 0; i < r.reduced.rows(); ++i) {
    for (const auto& [c, v] : r.reduced.row(i).entries()) {
      if (!is_pivot[c]) free_vecs[c].emplace_back(r.pivots[i], -v);
    }
  }
  std::vector<SparseVector> vecs;
  vecs.reserve(free_vecs.size());
  for (auto& [c, e] : free_vecs) vecs.push_back(SparseVector::from_entries(std::move(e)));
  return Subspace::span(m.cols(), std::move(vecs));
}

Subspace left_nullspace(const Matrix& m) {
  Index n = m.rows();
  Index c = m.cols();
  EchelonBuilder b(c + n);
  for (Index i = 0; i < n; ++i) {
    SparseVector v = m.row(i);
    v.push_back(c + i, Scalar(1));
    b.insert(std::move(v));
  }
  std::vector<SparseVector> kernel;
  for (const auto& row : b.reduced_rows()) {
    if (row.lead() < c) continue;
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, s] : row.entries()) e.emplace_back(i - c, s);
    kernel.push_back(SparseVector::from_entries(std::move(e)));
  }
  return Subspace::span(n, std::move(kernel));
}

static void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ValidationError("ambient dimension mismatch");
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  std::vector<SparseVector> v = a.basis();
  v.insert(v.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), std::move(v));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return subspace_sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace subspace_intersection_direct(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  std::vector<SparseVector> residuals;
  residuals.reserve(a.dim());
  for (const auto& x : a.basis()) residuals.push_back(b.reduce(x));
  Subspace combos = left_nullspace(Matrix::from_rows(a.ambient(), std::move(residuals)));
  std::vector<SparseVector> out;
  for (const auto& c : combos.basis()) {
    SparseVector v;
    for (const auto& [i, s] : c.entries()) v.axpy(s, a.basis()[i]);
    out.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), std::move(out));
}

bool subspace_contains(const Subspace& a, const SparseVector& v) { return a.contains(v); }

std::optional<Matrix> try_inverse(const Matrix& m) {
  Index n = m.rows();
  if (m.cols() != n) throw ValidationError("inverse of a non-square matrix");
  if (n == 0) return Matrix(0, 0);
  EchelonBuilder b(2 * n);
  for (Index i = 0; i < n; ++i) {
    SparseVector v = m.row(i);
    v.push_back(n + i, Scalar(1));
    b.insert(std::move(v));
  }
  std::vector<SparseVector> rows = b.reduced_rows();
  if (rows.size() != n || rows[n - 1].lead() >= n) return std::nullopt;
  Matrix inv(n, n);
  for (Index i = 0; i < n; ++i) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [c, s] : rows[i].entries()) {
      if (c >= n) e.emplace_back(c - n, s);
    }
    inv.row_mut(i) = SparseVector::from_entries(std::move(e));
  }
  return inv;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw PreconditionError("matrix is singular");
  return *inv;
}

}  // namespace homform
