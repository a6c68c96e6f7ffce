#include "homform/tensors.hpp"

#include "homform/errors.hpp"

namespace homform {

Index ipow(Index base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (Index(1) << 62) / base) throw GuardError("tensor power too large to index");
    r *= base;
  }
  return r;
}

Index encode(const MultiIndex& idx, int d) {
  Index c = 0;
  for (int v : idx) {
    if (v < 0 || v >= d) throw ValidationError("index component out of range");
    c = c * d + v;
  }
  return c;
}

MultiIndex decode(Index code, int d, int m) {
  MultiIndex idx(m);
  for (int k = m - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(code % d);
    code /= d;
  }
  return idx;
}

MultilinearForm::MultilinearForm(int dim, int arity) : dim_(dim), arity_(arity) {
  if (dim < 1) throw ValidationError("form dimension must be positive");
  if (arity < 1) throw ValidationError("form arity must be positive");
  ipow(dim, arity);
}

Scalar MultilinearForm::at(const MultiIndex& idx) const {
  if (static_cast<int>(idx.size()) != arity_) throw ValidationError("multi-index length differs from arity");
  return at_code(encode(idx, dim_));
}

Scalar MultilinearForm::at_code(Index code) const {
  auto it = entries_.find(code);
  return it == entries_.end() ? Scalar() : it->second;
}

void MultilinearForm::set(const MultiIndex& idx, const Scalar& v) {
  if (static_cast<int>(idx.size()) != arity_) throw ValidationError("multi-index length differs from arity");
  set_code(encode(idx, dim_), v);
}

void MultilinearForm::set_code(Index code, const Scalar& v) {
  if (v.is_zero()) {
    entries_.erase(code);
  } else {
    entries_[code] = v;
  }
}

void MultilinearForm::add_code(Index code, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.emplace(code, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

SparseVector MultilinearForm::as_vector() const {
  SparseVector v;
  for (const auto& [c, s] : entries_) v.push_back(c, s);
  return v;
}

MultilinearForm MultilinearForm::from_vector(int dim, int arity, const SparseVector& v) {
  MultilinearForm w(dim, arity);
  for (const auto& [c, s] : v.entries()) w.set_code(c, s);
  return w;
}

MultilinearForm MultilinearForm::scaled(const Scalar& c) const {
  MultilinearForm w(dim_, arity_);
  if (c.is_zero()) return w;
  for (const auto& [k, s] : entries_) w.entries_.emplace(k, s * c);
  return w;
}

MultilinearForm MultilinearForm::operator+(const MultilinearForm& o) const {
  if (dim_ != o.dim_ || arity_ != o.arity_) throw ValidationError("form shape mismatch");
  MultilinearForm w = *this;
  for (const auto& [k, s] : o.entries_) w.add_code(k, s);
  return w;
}

MultilinearForm MultilinearForm::operator-(const MultilinearForm& o) const {
  return *this + o.scaled(Scalar(-1));
}

Matrix flatten(const MultilinearForm& w, int left_slots) {
  if (left_slots <= 0 || left_slots >= w.arity()) throw ValidationError("flatten: slot count out of range");
  Index cols = ipow(w.dim(), w.arity() - left_slots);
  Matrix m(ipow(w.dim(), left_slots), cols);
  for (const auto& [c, s] : w.entries()) m.row_mut(c / cols).push_back(c % cols, s);
  return m;
}

Matrix flatten_slot(const MultilinearForm& w, int slot) {
  int m = w.arity();
  int d = w.dim();
  if (slot < 0 || slot >= m) throw ValidationError("flatten_slot: slot out of range");
  Index after = ipow(d, m - 1 - slot);
  std::vector<std::vector<SparseVector::Entry>> rows(d);
  for (const auto& [c, s] : w.entries()) {
    Index low = c % after;
    Index mid = (c / after) % d;
    Index high = c / after / d;
    rows[mid].emplace_back(high * after + low, s);
  }
  Matrix out(d, ipow(d, m - 1));
  for (int r = 0; r < d; ++r) out.row_mut(r) = SparseVector::from_entries(std::move(rows[r]));
  return out;
}

MultilinearForm act_per_slot(const MultilinearForm& w, const std::vector<Matrix>& per_slot) {
  int m = w.arity();
  Index d = w.dim();
  if (static_cast<int>(per_slot.size()) != m) throw ValidationError("one matrix per slot required");
  std::map<Index, Scalar> cur = w.entries();
  for (int k = 0; k < m; ++k) {
    const Matrix& M = per_slot[k];
    if (M.rows() != d || M.cols() != d) throw ValidationError("slot matrix has wrong shape");
    Index place = ipow(d, m - 1 - k);
    std::map<Index, Scalar> next;
    for (const auto& [c, s] : cur) {
      Index digit = (c / place) % d;
      Index base = c - digit * place;
      for (const auto& [mu, v] : M.row(digit).entries()) {
        auto [it, inserted] = next.emplace(base + mu * place, s * v);
        if (!inserted) it->second += s * v;
      }
    }
    cur.clear();
    for (auto& [c, s] : next) {
      if (!s.is_zero()) cur.emplace(c, std::move(s));
    }
  }
  MultilinearForm out(w.dim(), m);
  for (const auto& [c, s] : cur) out.set_code(c, s);
  return out;
}

MultilinearForm gl_act(const MultilinearForm& w, const Matrix& L) {
  if (!try_inverse(L)) throw PreconditionError("gl_act: matrix is singular");
  return act_per_slot(w, std::vector<Matrix>(w.arity(), L));
}

MultilinearForm cyclic_shift(const MultilinearForm& w, const Matrix& Q) {
  Index d = w.dim();
  int m = w.arity();
  if (Q.rows() != d || Q.cols() != d) throw ValidationError("cyclic_shift: matrix has wrong shape");
  Index rest = ipow(d, m - 1);
  MultilinearForm out(w.dim(), m);
  for (const auto& [c, s] : w.entries()) {
    Index tau = c / rest;
    Index tail = c % rest;
    for (const auto& [mu, q] : Q.row(tau).entries()) out.add_code(tail * d + mu, q * s);
  }
  return out;
}

std::vector<SparseVector> contractions(const MultilinearForm& w, int n) {
  if (n < 0 || n > w.arity()) throw ValidationError("contraction length out of range");
  if (n == w.arity()) return {w.as_vector()};
  Index cols = ipow(w.dim(), n);
  std::map<Index, std::vector<SparseVector::Entry>> rows;
  for (const auto& [c, s] : w.entries()) rows[c / cols].emplace_back(c % cols, s);
  std::vector<SparseVector> out;
  for (auto& [p, e] : rows) out.push_back(SparseVector::from_entries(std::move(e)));
  return out;
}

}  // namespace homform
