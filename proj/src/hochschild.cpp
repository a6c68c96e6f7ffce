#include "homform/hochschild.hpp"

#include <algorithm>

#include "homform/errors.hpp"
#include "homform/preregularity.hpp"

namespace homform {

namespace {

void enumerate_compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int j = 0; j <= total; ++j) {
    cur.push_back(j);
    enumerate_compositions(parts, total - j, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ChainSpace::ChainSpace(GradedQuotient& A, int n, int t) : n_(n), t_(t) {
  if (n < 0 || t < 0) throw ValidationError("chain length and degree must be nonnegative");
  std::vector<int> cur;
  enumerate_compositions(n + 1, t, cur, comps_);
  for (const auto& c : comps_) {
    std::vector<Index> dims;
    Index size = 1;
    for (int j : c) {
      dims.push_back(A.dim(j));
      size *= dims.back();
    }
    offset_[c] = dim_;
    starts_.push_back(dim_);
    slot_dims_[c] = std::move(dims);
    dim_ += size;
  }
}

Index ChainSpace::index(const std::vector<int>& comp, const std::vector<Index>& pos) const {
  const auto& dims = slot_dims_.at(comp);
  Index i = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) i = i * dims[k] + pos[k];
  return offset_.at(comp) + i;
}

std::pair<std::vector<int>, std::vector<Index>> ChainSpace::decode(Index i) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), i);
  std::size_t c = static_cast<std::size_t>(it - starts_.begin()) - 1;
  // several compositions can share a start when some slot has dimension zero; take the last
  const auto& comp = comps_[c];
  const auto& dims = slot_dims_.at(comp);
  Index rel = i - starts_[c];
  std::vector<Index> pos(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    pos[k] = rel % dims[k];
    rel /= dims[k];
  }
  return {comp, pos};
}

TwistedHochschild::TwistedHochschild(const MultilinearForm& w, Index guard)
    : w_(w), guard_(guard), A_(algebra_from_form(w, 2), guard) {
  if (w.arity() < 2) throw PreconditionError("Hochschild cycle needs m >= 2");
  if (!is_preregular(w)) throw PreconditionError("form is not preregular");
  q_inv_ = inverse(q_matrix(w));
}

const Matrix& TwistedHochschild::sigma_inverse(int j) {
  auto it = sigma_inv_.find(j);
  if (it == sigma_inv_.end()) it = sigma_inv_.emplace(j, induced_map(A_, q_inv_, j)).first;
  return it->second;
}

SparseVector TwistedHochschild::face(const ChainSpace& src, const ChainSpace& dst, Index basis, int k) {
  const int n = src.length();
  auto [comp, pos] = src.decode(basis);
  std::vector<int> out_comp;
  std::vector<Index> out_pos;
  SparseVector prod;
  Scalar sign(1);
  std::size_t merged = 0;  // slot receiving the product
  if (k < n) {
    prod = A_.multiply(comp[k], SparseVector::unit(pos[k]), comp[k + 1], SparseVector::unit(pos[k + 1]));
    if (k % 2 == 1) sign = Scalar(-1);
    for (int i = 0; i <= n; ++i) {
      if (i == k + 1) continue;
      out_comp.push_back(i == k ? comp[k] + comp[k + 1] : comp[i]);
      out_pos.push_back(pos[i]);
    }
    merged = k;
  } else {
    const int j = comp[n];
    const int m = w_.arity();
    prod = A_.multiply(j, sigma_inverse(j).row(pos[n]), comp[0], SparseVector::unit(pos[0]));
    if ((n + (m - 1) * j) % 2 == 1) sign = Scalar(-1);
    out_comp.push_back(j + comp[0]);
    out_pos.push_back(0);
    for (int i = 1; i < n; ++i) {
      out_comp.push_back(comp[i]);
      out_pos.push_back(pos[i]);
    }
    merged = 0;
  }
  std::vector<SparseVector::Entry> e;
  for (const auto& [b, c] : prod.entries()) {
    out_pos[merged] = b;
    e.emplace_back(dst.index(out_comp, out_pos), sign * c);
  }
  return SparseVector::from_entries(std::move(e));
}

Matrix TwistedHochschild::boundary(int n, int t) {
  if (n < 1) throw ValidationError("boundary needs n >= 1");
  ChainSpace src(A_, n, t);
  ChainSpace dst(A_, n - 1, t);
  Matrix B(src.dim(), dst.dim());
  for (Index i = 0; i < src.dim(); ++i) {
    SparseVector v;
    for (int k = 0; k <= n; ++k) v.axpy(Scalar(1), face(src, dst, i, k));
    B.row_mut(i) = std::move(v);
  }
  return B;
}

SparseVector TwistedHochschild::one_otimes_w(const ChainSpace& space) const {
  const int m = w_.arity();
  std::vector<int> comp(m + 1, 1);
  comp[0] = 0;
  std::vector<SparseVector::Entry> e;
  for (const auto& [code, c] : w_.entries()) {
    MultiIndex idx = decode(code, w_.dim(), m);
    std::vector<Index> pos{0};
    for (int l : idx) pos.push_back(static_cast<Index>(l));
    e.emplace_back(space.index(comp, pos), c);
  }
  return SparseVector::from_entries(std::move(e));
}

bool TwistedChain::is_zero() const {
  if (!total.empty() || !outer.empty()) return false;
  for (const auto& v : middle) {
    if (!v.empty()) return false;
  }
  return true;
}

TwistedChain boundary_of_one_otimes_w(const MultilinearForm& w) {
  TwistedHochschild H(w);
  const int m = w.arity();
  ChainSpace src(H.algebra(), m, m);
  ChainSpace dst(H.algebra(), m - 1, m);
  SparseVector chain = H.one_otimes_w(src);
  TwistedChain out;
  out.degree = m;
  out.length = m - 1;
  auto apply = [&](int k) {
    SparseVector v;
    for (const auto& [i, c] : chain.entries()) v.axpy(c, H.face(src, dst, i, k));
    return v;
  };
  out.outer = apply(0) + apply(m);
  out.total = out.outer;
  for (int k = 1; k < m; ++k) {
    out.middle.push_back(apply(k));
    out.total = out.total + out.middle.back();
  }
  return out;
}

bool is_nontrivial_cycle(const MultilinearForm& w, Index guard) {
  if (!boundary_of_one_otimes_w(w).is_zero()) throw PreconditionError("1 (x) w is not a cycle");
  TwistedHochschild H(w);
  const int m = w.arity();
  ChainSpace src(H.algebra(), m + 1, m);
  if (src.dim() > guard) {
    throw GuardError("chain space of dimension " + std::to_string(src.dim()) + " exceeds the guard " +
                     std::to_string(guard));
  }
  ChainSpace dst(H.algebra(), m, m);
  EchelonBuilder image(dst.dim());
  for (Index i = 0; i < src.dim(); ++i) {
    SparseVector v;
    for (int k = 0; k <= m + 1; ++k) v.axpy(Scalar(1), H.face(src, dst, i, k));
    if (!v.empty()) image.insert(std::move(v));
  }
  return !image.contains(H.one_otimes_w(dst));
}

}  // namespace homform
