#include "homform/algebra.hpp"

#include <cstdlib>
#include <string>

#include "homform/errors.hpp"
#include "homform/hopf.hpp"
#include "homform/preregularity.hpp"

namespace homform {

Index default_guard_columns() {
  if (const char* env = std::getenv("HOMFORM_GUARD_COLUMNS")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<Index>(v);
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("HOMFORM_GUARD_COLUMNS is not a positive integer: ") + env);
  }
  return 100000;
}

void check_guard(int d, int n, Index guard) {
  Index cols = ipow(d, n);
  if (cols > guard) {
    throw GuardError("size guard exceeded: (s+1)^n = " + std::to_string(d) + "^" + std::to_string(n) +
                     " = " + std::to_string(cols) + " > " + std::to_string(guard));
  }
}

Presentation::Presentation(int generators, int degree, Subspace relations)
    : d_(generators), N_(degree), R_(std::move(relations)) {
  if (d_ < 1) throw ValidationError("presentation needs at least one generator");
  if (N_ < 2) throw ValidationError("relation degree N must be at least 2");
  if (R_.ambient() != ipow(d_, N_)) throw ValidationError("relation space has the wrong ambient dimension");
}

Presentation Presentation::dual() const { return Presentation(d_, N_, R_.annihilator()); }

Presentation algebra_from_form(const MultilinearForm& w, int N) {
  if (N < 2) throw ValidationError("N must be at least 2");
  if (w.arity() < N) throw PreconditionError("arity m must be at least N");
  return Presentation(w.dim(), N, Subspace::span(ipow(w.dim(), N), contractions(w, N)));
}

Presentation dual_algebra(const Presentation& p) { return p.dual(); }

GradedQuotient::GradedQuotient(Presentation p, Index guard) : p_(std::move(p)), guard_(guard) {
  words_.push_back({0});
  position_.push_back({{0, 0}});
}

void GradedQuotient::extend_to(int n) {
  while (built_degree() < n) build_next();
}

void GradedQuotient::build_next() {
  const int n = built_degree();
  const Index d = p_.generators();
  const int N = p_.degree();
  check_guard(static_cast<int>(d), n + 1, guard_);
  const std::vector<Index>& prev = words_[n];
  const Index cols = prev.size() * d;

  // Image of E^{(x)(n+1-N)} (x) R in A_n (x) E, with columns reversed so that
  // leading pivots are the lexicographically largest monomials.
  EchelonBuilder J(cols);
  const int k = n + 1 - N;
  if (k >= 0) {
    for (Index b = 0; b < words_[k].size(); ++b) {
      std::map<Index, SparseVector> memo;
      for (const auto& r : p_.relations().basis()) {
        std::vector<SparseVector::Entry> e;
        for (const auto& [v, c] : r.entries()) {
          Index prefix = v / d;
          Index last = v % d;
          auto it = memo.find(prefix);
          if (it == memo.end()) {
            SparseVector cur = SparseVector::unit(b);
            MultiIndex letters = decode(prefix, static_cast<int>(d), N - 1);
            for (int i = 0; i < N - 1; ++i) cur = right_mul_generator(k + i, cur, letters[i]);
            it = memo.emplace(prefix, std::move(cur)).first;
          }
          for (const auto& [b2, c2] : it->second.entries()) e.emplace_back(cols - 1 - (b2 * d + last), c * c2);
        }
        J.insert(SparseVector::from_entries(std::move(e)));
      }
    }
  }
  std::vector<SparseVector> rows = J.reduced_rows();
  std::vector<bool> pivot(cols, false);
  for (const auto& row : rows) pivot[cols - 1 - row.lead()] = true;
  std::vector<Index> new_index(cols, 0);
  std::vector<Index> next;
  std::map<Index, Index> pos;
  for (Index c = 0; c < cols; ++c) {
    if (pivot[c]) continue;
    new_index[c] = next.size();
    Index word = prev[c / d] * d + c % d;
    pos.emplace(word, next.size());
    next.push_back(word);
  }
  std::vector<SparseVector> table(cols);
  for (Index c = 0; c < cols; ++c) {
    if (!pivot[c]) table[c] = SparseVector::unit(new_index[c]);
  }
  for (const auto& row : rows) {
    Index p = cols - 1 - row.lead();
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 1; i < row.size(); ++i) {
      const auto& [rc, v] = row.entries()[i];
      e.emplace_back(new_index[cols - 1 - rc], -v);
    }
    table[p] = SparseVector::from_entries(std::move(e));
  }
  right_.push_back(std::move(table));
  words_.push_back(std::move(next));
  position_.push_back(std::move(pos));
}

Index GradedQuotient::dim(int n) {
  extend_to(n);
  return words_[n].size();
}

std::vector<Index> GradedQuotient::dims(int n_max) {
  std::vector<Index> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(dim(n));
  return out;
}

const std::vector<Index>& GradedQuotient::basis_words(int n) {
  extend_to(n);
  return words_[n];
}

long GradedQuotient::basis_position(int n, Index word) {
  extend_to(n);
  auto it = position_[n].find(word);
  return it == position_[n].end() ? -1 : static_cast<long>(it->second);
}

const SparseVector& GradedQuotient::right_generator(int n, Index b, int j) {
  extend_to(n + 1);
  return right_[n][b * p_.generators() + j];
}

SparseVector GradedQuotient::right_mul_generator(int n, const SparseVector& a, int j) {
  SparseVector out;
  for (const auto& [b, c] : a.entries()) out.axpy(c, right_generator(n, b, j));
  return out;
}

SparseVector GradedQuotient::left_mul_generator(int n, int j, const SparseVector& a) {
  extend_to(n + 1);
  SparseVector out;
  const Index d = p_.generators();
  for (const auto& [b, c] : a.entries()) {
    auto key = std::make_pair(n, static_cast<Index>(j) * words_[n].size() + b);
    auto it = left_cache_.find(key);
    if (it == left_cache_.end()) {
      SparseVector cur = SparseVector::unit(j);
      MultiIndex letters = decode(words_[n][b], static_cast<int>(d), n);
      for (int i = 0; i < n; ++i) cur = right_mul_generator(1 + i, cur, letters[i]);
      it = left_cache_.emplace(key, std::move(cur)).first;
    }
    out.axpy(c, it->second);
  }
  return out;
}

SparseVector GradedQuotient::right_mul_word(int n, const SparseVector& a, Index word, int len) {
  MultiIndex letters = decode(word, p_.generators(), len);
  SparseVector cur = a;
  for (int i = 0; i < len; ++i) cur = right_mul_generator(n + i, cur, letters[i]);
  return cur;
}

SparseVector GradedQuotient::normal_form_word(int n, Index word) {
  long pos = basis_position(n, word);
  if (pos >= 0) return SparseVector::unit(static_cast<Index>(pos));
  return right_mul_word(0, SparseVector::unit(0), word, n);
}

SparseVector GradedQuotient::normal_form(int n, const SparseVector& tensor) {
  SparseVector out;
  for (const auto& [w, c] : tensor.entries()) out.axpy(c, normal_form_word(n, w));
  return out;
}

SparseVector GradedQuotient::multiply(int p, const SparseVector& a, int q, const SparseVector& b) {
  extend_to(p + q);
  SparseVector out;
  for (const auto& [bb, c] : b.entries()) out.axpy(c, right_mul_word(p, a, words_[q][bb], q));
  return out;
}

Index graded_dimension(const Presentation& p, int n, Index guard) {
  GradedQuotient q(p, guard);
  return q.dim(n);
}

std::vector<Index> hilbert_truncation(const Presentation& p, int n_max, Index guard) {
  GradedQuotient q(p, guard);
  return q.dims(n_max);
}

static std::vector<long long> series_inverse(const std::vector<long long>& den, int n_max) {
  std::vector<long long> c(n_max + 1, 0);
  for (int n = 0; n <= n_max; ++n) {
    long long v = n == 0 ? 1 : 0;
    for (int i = 1; i <= n && i < static_cast<int>(den.size()); ++i) v -= den[i] * c[n - i];
    c[n] = v;
  }
  return c;
}

std::vector<long long> predicted_d2(int s_plus_1, int n_max) {
  return series_inverse({1, -s_plus_1, 1}, n_max);
}

std::vector<long long> predicted_d3(int s_plus_1, int N, int n_max) {
  if (N < 2) throw ValidationError("N must be at least 2");
  std::vector<long long> den(N + 2, 0);
  den[0] = 1;
  den[1] -= s_plus_1;
  den[N] += s_plus_1;
  den[N + 1] -= 1;
  return series_inverse(den, n_max);
}

SparseVector word_image(Index word, int n, const Matrix& M) {
  const Index d = M.rows();
  MultiIndex letters = decode(word, static_cast<int>(d), n);
  SparseVector cur = SparseVector::unit(0);
  for (int mu : letters) {
    SparseVector next;
    for (const auto& [c, s] : cur.entries()) {
      for (const auto& [nu, t] : M.row(mu).entries()) next.push_back(c * d + nu, s * t);
    }
    cur = std::move(next);
  }
  return cur;
}

Matrix induced_map(GradedQuotient& A, const Matrix& M, int n) {
  const auto& words = A.basis_words(n);
  Matrix out(words.size(), A.dim(n));
  for (std::size_t b = 0; b < words.size(); ++b) out.row_mut(b) = A.normal_form(n, word_image(words[b], n, M));
  return out;
}

bool tensor_power_preserves(const Subspace& S, const Matrix& M, int n) {
  for (const auto& v : S.basis()) {
    SparseVector img;
    for (const auto& [c, s] : v.entries()) img.axpy(s, word_image(c, n, M));
    if (!S.contains(img)) return false;
  }
  return true;
}

Subspace ideal_component(const Presentation& p, int n, Index guard) {
  const int d = p.generators();
  const int N = p.degree();
  check_guard(d, n, guard);
  if (n < N) return Subspace(ipow(d, n));
  Subspace cur = p.relations();
  for (int k = N + 1; k <= n; ++k) {
    Index amb = ipow(d, k);
    Index low = ipow(d, k - 1);
    EchelonBuilder b(amb);
    for (int i = 0; i < d; ++i) {
      for (const auto& v : cur.basis()) {
        std::vector<SparseVector::Entry> e;
        for (const auto& [c, s] : v.entries()) e.emplace_back(i * low + c, s);
        b.insert(SparseVector::from_entries(std::move(e)));
      }
    }
    Index tail = ipow(d, k - N);
    for (const auto& r : p.relations().basis()) {
      for (Index t = 0; t < tail; ++t) {
        std::vector<SparseVector::Entry> e;
        for (const auto& [c, s] : r.entries()) e.emplace_back(c * tail + t, s);
        b.insert(SparseVector::from_entries(std::move(e)));
      }
    }
    cur = Subspace::from_builder(b);
  }
  return cur;
}

Subspace w_subspace(const MultilinearForm& w, int N, int n) {
  if (n < 0 || n > w.arity()) throw ValidationError("W_n needs 0 <= n <= m");
  if (N < 2 || N > w.arity()) throw ValidationError("W_n needs 2 <= N <= m");
  Index amb = ipow(w.dim(), n);
  if (n < N) return Subspace::full(amb);
  return Subspace::span(amb, contractions(w, n));
}

bool left_right_regular_check(const Presentation& p, const SparseVector& a, int n_max) {
  if (p.degree() != 2) throw PreconditionError("regularity check needs a quadratic algebra");
  if (a.empty()) throw PreconditionError("regularity check needs a nonzero element");
  if (a.last() >= static_cast<Index>(p.generators())) throw ValidationError("element is not of degree one");
  GradedQuotient q(p);
  for (int n = 0; n <= n_max; ++n) {
    Index dn = q.dim(n);
    std::vector<SparseVector> right, left;
    for (Index b = 0; b < dn; ++b) {
      SparseVector r, l;
      for (const auto& [j, c] : a.entries()) {
        r.axpy(c, q.right_generator(n, b, static_cast<int>(j)));
        l.axpy(c, q.left_mul_generator(n, static_cast<int>(j), SparseVector::unit(b)));
      }
      right.push_back(std::move(r));
      left.push_back(std::move(l));
    }
    Index target = q.dim(n + 1);
    if (rank(Matrix::from_rows(target, std::move(right))) != dn) return false;
    if (rank(Matrix::from_rows(target, std::move(left))) != dn) return false;
  }
  return true;
}

ThetaBasis theta_basis(const MultilinearForm& w, int N) {
  if (w.arity() != N + 1 || N < 2) throw PreconditionError("theta basis needs m = N + 1 with N >= 2");
  if (!is_preregular(w)) throw PreconditionError("theta basis needs a preregular form");
  ThetaBasis out{solve_wtilde(w), {}, false, false};
  const int d = w.dim();
  GradedQuotient dual(algebra_from_form(w, N).dual());
  const Index tail = ipow(d, N);
  std::vector<SparseVector> tensors(d);
  {
    std::vector<std::vector<SparseVector::Entry>> e(d);
    for (const auto& [c, s] : out.wtilde.entries()) e[c / tail].emplace_back(c % tail, s);
    for (int l = 0; l < d; ++l) tensors[l] = SparseVector::from_entries(std::move(e[l]));
  }
  for (int l = 0; l < d; ++l) out.theta.push_back(dual.normal_form(N, tensors[l]));
  Index dimN = dual.dim(N);
  out.is_basis = dimN == static_cast<Index>(d) && rank(Matrix::from_rows(dimN, out.theta)) == dimN;
  out.relations_hold = true;
  for (Index mu = 0; mu < tail && out.relations_hold; ++mu) {
    SparseVector diff = dual.normal_form_word(N, mu);
    for (int l = 0; l < d; ++l) diff.axpy(-w.at_code(mu * d + l), out.theta[l]);
    out.relations_hold = diff.empty();
  }
  if (!out.is_basis || !out.relations_hold) {
    throw VerificationError("Theta elements fail to form a basis of A^!_N with the expected relations");
  }
  return out;
}

}  // namespace homform
