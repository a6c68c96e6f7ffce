#include "homform/preregularity.hpp"

#include <set>

#include "homform/errors.hpp"

namespace homform {

std::string to_string(TwistStatus s) {
  switch (s) {
    case TwistStatus::unique: return "unique";
    case TwistStatus::none: return "none";
    case TwistStatus::ambiguous: return "ambiguous";
    case TwistStatus::not_invertible: return "not-invertible";
  }
  return "unknown";
}

TwistSolution solve_twist(const MultilinearForm& w) {
  const Index d = w.dim();
  const int m = w.arity();
  const Index rest = ipow(d, m - 1);
  const Index unknowns = d * d;  // Q^t_mu at t * d + mu; constant column last

  // Group components by tail (l1..l(m-1)) for the left side and by head for the right side.
  std::map<Index, std::vector<std::pair<Index, Scalar>>> by_tail;  // tail -> (t, W_{t tail})
  std::set<Index> heads;
  for (const auto& [c, s] : w.entries()) {
    by_tail[c % rest].emplace_back(c / rest, s);
    heads.insert(c / d);
  }
  std::set<Index> tails;
  for (const auto& [t, e] : by_tail) tails.insert(t);
  tails.insert(heads.begin(), heads.end());

  EchelonBuilder b(unknowns + 1);
  for (Index tail : tails) {
    auto it = by_tail.find(tail);
    for (Index mu = 0; mu < d; ++mu) {
      std::vector<SparseVector::Entry> e;
      if (it != by_tail.end()) {
        for (const auto& [t, s] : it->second) e.emplace_back(t * d + mu, s);
      }
      e.emplace_back(unknowns, -w.at_code(tail * d + mu));
      b.insert(SparseVector::from_entries(std::move(e)));
    }
  }
  TwistSolution sol;
  std::vector<SparseVector> rows = b.reduced_rows();
  if (!rows.empty() && rows.back().lead() == unknowns) {
    sol.status = TwistStatus::none;
    return sol;
  }
  sol.solution_dim = unknowns - rows.size();
  if (sol.solution_dim > 0) {
    sol.status = TwistStatus::ambiguous;
    return sol;
  }
  Matrix Q(d, d);
  for (const auto& r : rows) {
    Index p = r.lead();
    Q.set(p / d, p % d, -r.get(unknowns));
  }
  sol.q = Q;
  sol.status = try_inverse(Q) ? TwistStatus::unique : TwistStatus::not_invertible;
  return sol;
}

bool is_q_cyclic(const MultilinearForm& w, const Matrix& Q) { return cyclic_shift(w, Q) == w; }

std::vector<bool> one_site_nondegenerate(const MultilinearForm& w) {
  std::vector<bool> out;
  for (int k = 0; k < w.arity(); ++k) {
    out.push_back(rank(flatten_slot(w, k)) == static_cast<Index>(w.dim()));
  }
  return out;
}

bool is_preregular(const MultilinearForm& w) {
  if (rank(flatten_slot(w, 0)) != static_cast<Index>(w.dim())) return false;
  if (solve_twist(w).status != TwistStatus::unique) return false;
  for (bool ok : one_site_nondegenerate(w)) {
    if (!ok) throw VerificationError("preregular form is not 1-site nondegenerate");
  }
  return true;
}

Matrix q_matrix(const MultilinearForm& w) {
  if (!is_preregular(w)) throw PreconditionError("form is not preregular");
  return *solve_twist(w).q;
}

ThreeRegularity three_regularity(const MultilinearForm& w) {
  if (w.arity() < 3) throw PreconditionError("3-regularity needs arity N + 1 with N >= 2");
  if (!is_preregular(w)) throw PreconditionError("3-regularity needs a preregular form");
  const Index d = w.dim();
  const int m = w.arity();
  const Index tail = ipow(d, m - 2);
  const Index l1_off = d * d;  // L0^mu_nu at mu*d+nu, L1^mu_nu at d*d + mu*d+nu
  // Equation indexed by (mu0, mu1, tail t):
  //   sum_mu L0^mu_mu0 W_{mu mu1 t} - sum_mu L1^mu_mu1 W_{mu0 mu t} = 0
  std::map<Index, std::vector<SparseVector::Entry>> eqs;
  for (const auto& [c, s] : w.entries()) {
    Index a = c / (d * tail);
    Index bb = (c / tail) % d;
    Index t = c % tail;
    // as W_{mu mu1 t}: mu = a, mu1 = bb; contributes to every mu0
    for (Index mu0 = 0; mu0 < d; ++mu0) {
      eqs[(mu0 * d + bb) * tail + t].emplace_back(a * d + mu0, s);
    }
    // as W_{mu0 mu t}: mu0 = a, mu = bb; contributes to every mu1
    for (Index mu1 = 0; mu1 < d; ++mu1) {
      eqs[(a * d + mu1) * tail + t].emplace_back(l1_off + bb * d + mu1, -s);
    }
  }
  EchelonBuilder b(2 * d * d);
  for (auto& [k, e] : eqs) b.insert(SparseVector::from_entries(std::move(e)));
  ThreeRegularity r;
  r.solution_dim = 2 * d * d - b.rank();
  SparseVector ident;
  for (Index i = 0; i < d; ++i) ident.push_back(i * d + i, Scalar(1));
  for (Index i = 0; i < d; ++i) ident.push_back(l1_off + i * d + i, Scalar(1));
  // (I, I) solves the system iff it is orthogonal to every equation row.
  Matrix rows = Matrix::from_rows(2 * d * d, b.reduced_rows());
  r.contains_identity = rows.apply(ident).empty();
  r.three_regular = r.solution_dim == 1 && r.contains_identity;
  return r;
}

bool is_three_regular(const MultilinearForm& w) { return three_regularity(w).three_regular; }

bool satisfies_iii_prime(const MultilinearForm& w) {
  if (w.arity() < 3) throw PreconditionError("condition (iii)' needs arity at least 3");
  return rank(flatten(w, 2)) == static_cast<Index>(w.dim()) * w.dim();
}

MultilinearForm cyclic_projector(const MultilinearForm& w, const Matrix& Q) {
  if (gl_act(w, Q) != w) throw PreconditionError("form is not invariant under Q");
  MultilinearForm sum = w;
  MultilinearForm cur = w;
  for (int j = 1; j < w.arity(); ++j) {
    cur = cyclic_shift(cur, Q);
    sum = sum + cur;
  }
  return sum.scaled(Scalar(1, w.arity()));
}

RegularityReport analyze_regularity(const MultilinearForm& w, int N) {
  if (N < 2) throw ValidationError("N must be at least 2");
  if (w.arity() < N) throw PreconditionError("arity must be at least N");
  RegularityReport r;
  r.one_site_nondegenerate = one_site_nondegenerate(w);
  r.twist = solve_twist(w);
  r.preregular = r.one_site_nondegenerate[0] && r.twist.status == TwistStatus::unique;
  if (r.preregular) {
    for (bool ok : r.one_site_nondegenerate) {
      if (!ok) throw VerificationError("preregular form is not 1-site nondegenerate");
    }
  }
  if (r.preregular && w.arity() == N + 1) r.three_regular = three_regularity(w);
  if (w.arity() >= 3) r.iii_prime = satisfies_iii_prime(w);
  r.relation_dim = Subspace::span(ipow(w.dim(), N), contractions(w, N)).dim();
  return r;
}

}  // namespace homform
