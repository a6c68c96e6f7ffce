#include "homform/koszul.hpp"

#include "homform/errors.hpp"
#include "homform/frobenius.hpp"
#include "homform/preregularity.hpp"

namespace homform {

int nu(int N, int p) {
  if (p < 0) throw ValidationError("nu is defined on nonnegative integers");
  return (p % 2 == 0) ? N * (p / 2) : N * (p / 2) + 1;
}

std::vector<Subspace> koszul_dual_spaces(const Presentation& p, int n_max, Index guard) {
  const int d = p.generators();
  const int N = p.degree();
  std::vector<Subspace> X;
  X.push_back(Subspace::full(1));
  for (int n = 1; n <= n_max; ++n) {
    if (X.back().dim() == 0) {
      X.emplace_back(ipow(d, n));
      continue;
    }
    check_guard(d, n, guard);
    if (n < N) {
      X.push_back(Subspace::full(ipow(d, n)));
      continue;
    }
    if (n == N) {
      X.push_back(p.relations());
      continue;
    }
    const Subspace& R = p.relations();
    const Index block = ipow(d, N);
    std::vector<SparseVector> candidates;
    std::vector<SparseVector> residuals;
    for (const auto& xi : X.back().basis()) {
      for (int j = 0; j < d; ++j) {
        SparseVector v;
        for (const auto& [c, s] : xi.entries()) v.push_back(c * d + j, s);
        // residual modulo E^{(x)(n-N)} (x) R, one block per prefix
        std::vector<SparseVector::Entry> res;
        std::size_t i = 0;
        const auto& e = v.entries();
        while (i < e.size()) {
          Index prefix = e[i].first / block;
          SparseVector part;
          for (; i < e.size() && e[i].first / block == prefix; ++i) part.push_back(e[i].first % block, e[i].second);
          SparseVector reduced = R.reduce(std::move(part));
          for (const auto& [c, s] : reduced.entries()) res.emplace_back(prefix * block + c, s);
        }
        residuals.push_back(SparseVector::from_entries(std::move(res)));
        candidates.push_back(std::move(v));
      }
    }
    Subspace combos = left_nullspace(Matrix::from_rows(ipow(d, n), std::move(residuals)));
    std::vector<SparseVector> out;
    for (const auto& c : combos.basis()) {
      SparseVector v;
      for (const auto& [i, s] : c.entries()) v.axpy(s, candidates[i]);
      out.push_back(std::move(v));
    }
    X.push_back(Subspace::span(ipow(d, n), std::move(out)));
  }
  return X;
}

KoszulData::KoszulData(const Presentation& p, int deg_max, Index guard)
    : p_(p), deg_max_(deg_max), A_(p, guard) {
  if (deg_max < 0) throw ValidationError("max degree must be nonnegative");
  A_.extend_to(deg_max);
  X_ = koszul_dual_spaces(p, deg_max, guard);
}

std::vector<std::vector<SparseVector>> KoszulData::unit_differential(int n, int r) {
  const int d = p_.generators();
  const Subspace& src = x(n);
  const Subspace& dst = x(n - r);
  std::map<Index, std::size_t> pivot_row;
  for (std::size_t i = 0; i < dst.pivots().size(); ++i) pivot_row.emplace(dst.pivots()[i], i);
  const Index low = ipow(d, n - r);
  std::vector<std::vector<SparseVector>> a(src.dim(), std::vector<SparseVector>(dst.dim()));
  for (Index k = 0; k < src.dim(); ++k) {
    for (const auto& [w, c] : src.basis()[k].entries()) {
      auto it = pivot_row.find(w % low);
      if (it == pivot_row.end()) continue;
      a[k][it->second].axpy(c, A_.normal_form_word(r, w / low));
    }
  }
  return a;
}

Matrix KoszulData::differential(int j, int n, int r) {
  auto key = std::make_tuple(j, n, r);
  auto hit = cache_.find(key);
  if (hit != cache_.end()) return hit->second;
  const Index xs = x_dim(n);
  const Index xt = x_dim(n - r);
  const Index as = A_.dim(j);
  const Index at = A_.dim(j + r);
  Matrix D(as * xs, at * xt);
  if (xs > 0 && xt > 0) {
    auto a = unit_differential(n, r);
    for (Index b = 0; b < as; ++b) {
      SparseVector unit = SparseVector::unit(b);
      for (Index k = 0; k < xs; ++k) {
        std::vector<SparseVector::Entry> e;
        for (Index i = 0; i < xt; ++i) {
          if (a[k][i].empty()) continue;
          SparseVector prod = A_.multiply(j, unit, r, a[k][i]);
          for (const auto& [bb, s] : prod.entries()) e.emplace_back(bb * xt + i, s);
        }
        D.row_mut(b * xs + k) = SparseVector::from_entries(std::move(e));
      }
    }
  }
  cache_.emplace(key, D);
  return D;
}

ComplexTruncation koszul_n_complex(KoszulData& data) {
  const int N = data.presentation().degree();
  const int top = data.deg_max();
  ComplexTruncation c;
  for (int n = 0; n <= top; ++n) {
    for (int j = 0; j + n <= top; ++j) {
      c.terms.push_back({n, j + n, data.algebra().dim(j) * data.x_dim(n)});
      c.complete[{n, j + n}] = true;
      if (n >= 1) c.differentials[{n, j + n}] = data.differential(j, n, 1);
    }
  }
  for (int n = N; n <= top; ++n) {
    for (int j = 0; j + n <= top; ++j) {
      Matrix prod = data.differential(j, n, 1);
      for (int k = 1; k < N; ++k) prod = prod * data.differential(j + k, n - k, 1);
      if (!prod.is_zero()) c.nilpotent = false;
    }
  }
  return c;
}

ComplexTruncation koszul_n_complex(const Presentation& p, int deg_max, Index guard) {
  KoszulData data(p, deg_max, guard);
  return koszul_n_complex(data);
}

ComplexTruncation koszul_complex(KoszulData& data) {
  const int N = data.presentation().degree();
  const int top = data.deg_max();
  ComplexTruncation c;
  std::map<Key, Index> ranks;
  for (int p = 0; nu(N, p) <= top; ++p) {
    const int np = nu(N, p);
    for (int g = np; g <= top; ++g) {
      const int j = g - np;
      c.terms.push_back({p, g, data.algebra().dim(j) * data.x_dim(np)});
      if (p >= 1) {
        Matrix D = data.differential(j, np, np - nu(N, p - 1));
        ranks[{p, g}] = rank(D);
        c.differentials[{p, g}] = std::move(D);
      }
    }
  }
  for (const auto& t : c.terms) {
    Index h = t.dim;
    auto out = ranks.find({t.position, t.degree});
    if (out != ranks.end()) h -= out->second;
    auto in = ranks.find({t.position + 1, t.degree});
    if (in != ranks.end()) h -= in->second;
    c.homology[{t.position, t.degree}] = h;
    c.complete[{t.position, t.degree}] = true;
  }
  for (const auto& [key, D] : c.differentials) {
    auto next = c.differentials.find({key.first - 1, key.second});
    if (next != c.differentials.end() && !(D * next->second).is_zero()) c.nilpotent = false;
  }
  return c;
}

ComplexTruncation koszul_complex(const Presentation& p, int deg_max, Index guard) {
  KoszulData data(p, deg_max, guard);
  return koszul_complex(data);
}

KoszulVerdict koszulity_check(KoszulData& data) {
  ComplexTruncation c = koszul_complex(data);
  if (!c.nilpotent) throw VerificationError("Koszul complex differential does not square to zero");
  KoszulVerdict v;
  v.checked_degree = data.deg_max();
  for (int g = 0; g <= data.deg_max() && !v.failure; ++g) {
    for (const auto& [key, h] : c.homology) {
      if (key.second != g) continue;
      Index expected = (key.first == 0 && g == 0) ? 1 : 0;
      if (h != expected) {
        v.failure = key;
        break;
      }
    }
  }
  v.pass = !v.failure;
  if (v.pass) {
    v.note = "acyclic in positive positions through internal degree " + std::to_string(v.checked_degree) +
             "; truncated evidence, not a proof of Koszulity";
  } else {
    v.note = "nonzero homology at position " + std::to_string(v.failure->first) + ", internal degree " +
             std::to_string(v.failure->second) + "; the algebra is not Koszul";
  }
  return v;
}

KoszulVerdict koszulity_check(const Presentation& p, int deg_max, Index guard) {
  KoszulData data(p, deg_max, guard);
  return koszulity_check(data);
}

CochainVerdict gorenstein_cochain_check(KoszulData& data) {
  KoszulVerdict kv = koszulity_check(data);
  if (!kv.pass) throw PreconditionError("Gorenstein check needs an algebra passing the Koszul check");
  const int N = data.presentation().degree();
  const int top = data.deg_max();
  GradedQuotient& A = data.algebra();
  CochainVerdict v;
  int P = -1;  // last position with nu(P) <= top
  while (nu(N, P + 1) <= top) ++P;
  for (int p = 0; p <= P; ++p) {
    if (data.x_dim(nu(N, p)) > 0) v.D = p;
  }
  // D is determined only if the X spaces have already vanished inside the truncation.
  if (v.D && nu(N, *v.D + 1) > top && data.x_dim(top) != 0) v.D.reset();
  if (!v.D) {
    v.note = "the dual spaces do not vanish inside the truncation; D undetermined";
    return v;
  }
  const int D = *v.D;
  auto dim_L = [&](int p, int g) -> Index {
    int deg = g + nu(N, p);
    if (p > D || deg < 0 || deg > top) return 0;
    return data.x_dim(nu(N, p)) * A.dim(deg);
  };
  // delta_p : L^{p-1}(g) -> L^p(g)
  auto delta_rank = [&](int p, int g) -> Index {
    if (p < 1 || p > D) return 0;
    int src_deg = g + nu(N, p - 1);
    int dst_deg = g + nu(N, p);
    if (src_deg < 0 || dst_deg > top) return 0;
    const int r = nu(N, p) - nu(N, p - 1);
    auto a = data.unit_differential(nu(N, p), r);
    const Index xs = data.x_dim(nu(N, p - 1));
    const Index xt = data.x_dim(nu(N, p));
    const Index as = A.dim(src_deg);
    const Index at = A.dim(dst_deg);
    std::vector<SparseVector> rows;
    for (Index i = 0; i < xs; ++i) {
      for (Index b = 0; b < as; ++b) {
        SparseVector unit = SparseVector::unit(b);
        std::vector<SparseVector::Entry> e;
        for (Index k = 0; k < xt; ++k) {
          if (a[k][i].empty()) continue;
          SparseVector prod = A.multiply(r, a[k][i], src_deg, unit);
          for (const auto& [bb, s] : prod.entries()) e.emplace_back(k * at + bb, s);
        }
        rows.push_back(SparseVector::from_entries(std::move(e)));
      }
    }
    return rank(Matrix::from_rows(xt * at, std::move(rows)));
  };
  v.pattern = true;
  for (int p = 0; p <= D; ++p) {
    const int np = nu(N, p);
    for (int g = -np; g + np <= top; ++g) {
      bool next_zero = p == D;
      if (!next_zero && g + nu(N, p + 1) > top) continue;  // incomplete
      Index h = dim_L(p, g) - delta_rank(p, g) - (next_zero ? 0 : delta_rank(p + 1, g));
      v.cohomology[{p, g}] = h;
      Index expected = (p == D && g == -np) ? 1 : 0;
      if (h != expected) v.pattern = false;
    }
  }
  v.note = v.pattern ? "Gorenstein pattern with D = " + std::to_string(D) + " through internal degree " +
                           std::to_string(top) + "; truncated evidence, not a proof"
                     : "Gorenstein pattern violated with D = " + std::to_string(D);
  return v;
}

CochainVerdict gorenstein_cochain_check(const Presentation& p, int deg_max, Index guard) {
  KoszulData data(p, deg_max, guard);
  return gorenstein_cochain_check(data);
}

bool GorensteinDiagnostics::all_pass() const {
  for (const auto& it : items) {
    if (it.applicable && !it.pass) return false;
  }
  return true;
}

GorensteinDiagnostics gorenstein_diagnostics(const MultilinearForm& w, int N, Index guard) {
  if (!is_preregular(w)) throw PreconditionError("Gorenstein diagnostics need a preregular form");
  if (N < 2 || w.arity() < N) throw PreconditionError("Gorenstein diagnostics need 2 <= N <= m");
  const int m = w.arity();
  const Index d = w.dim();
  GorensteinDiagnostics g;
  g.m = m;
  g.N = N;
  Presentation pres = algebra_from_form(w, N);
  GradedQuotient dual(pres.dual(), guard);
  g.dual_dims = dual.dims(m + 1);
  const bool admissible = N == 2 || (m - 1) % N == 0;
  if (admissible) g.D = N == 2 ? m : 2 * ((m - 1) / N) + 1;

  DiagnosticItem a{"dual-top-dimensions", true, false, ""};
  a.pass = admissible && g.dual_dims[m] == 1 && g.dual_dims[m - 1] == d;
  a.detail = "dim A^!_m = " + std::to_string(g.dual_dims[m]) + ", dim A^!_{m-1} = " +
             std::to_string(g.dual_dims[m - 1]) + ", s+1 = " + std::to_string(d) +
             (admissible ? "" : "; m = " + std::to_string(m) + " is not of the form N p + 1 required for N >= 3");
  g.items.push_back(a);

  DiagnosticItem b{"palindromic-w-dimensions", admissible, false, ""};
  if (admissible) {
    b.pass = true;
    std::string dims;
    for (int k = 0; k <= *g.D; ++k) {
      Index lhs = w_subspace(w, N, nu(N, k)).dim();
      Index rhs = w_subspace(w, N, nu(N, *g.D - k)).dim();
      if (lhs != rhs) b.pass = false;
      dims += (k ? "," : "") + std::to_string(lhs);
    }
    b.detail = "dim W_{nu(k)}, k = 0..D: [" + dims + "]";
  } else {
    b.detail = "no D with nu(D) = m";
  }
  g.items.push_back(b);

  DiagnosticItem c{"top-dual-is-line-through-w", m == N + 1, false, ""};
  if (c.applicable) {
    auto X = koszul_dual_spaces(pres, N + 2, guard);
    c.pass = X[N + 1].dim() == 1 && X[N + 1].contains(w.as_vector()) && X[N + 2].dim() == 0;
    c.detail = "dim X_{N+1} = " + std::to_string(X[N + 1].dim()) + ", dim X_{N+2} = " + std::to_string(X[N + 2].dim());
  }
  g.items.push_back(c);

  DiagnosticItem f{"frobenius-pairing-nondegenerate", N == 2, false, ""};
  if (f.applicable) {
    f.pass = true;
    for (int p = 0; p <= m; ++p) {
      Matrix P = pairing_matrix(dual, w, p);
      if (P.rows() != P.cols() || rank(P) != P.rows()) f.pass = false;
    }
    f.detail = "pairings A^!_p x A^!_{m-p} -> K for p = 0..m";
  }
  g.items.push_back(f);
  g.note = "finite checklist; the Gorenstein property itself is a statement about the full resolution";
  return g;
}

}  // namespace homform
