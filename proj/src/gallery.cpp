#include "homform/gallery.hpp"

#include <algorithm>
#include <numeric>

#include "homform/errors.hpp"

namespace homform {

namespace {

Matrix diagonal(const std::vector<Scalar>& d) {
  Matrix M(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) M.set(i, i, d[i]);
  return M;
}

Matrix scalar_identity(int n, const Scalar& s) { return Matrix::identity(n).scaled(s); }

void require_metric(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() < 2) throw ValidationError("metric must be a square matrix of size >= 2");
  if (g != g.transpose()) throw ValidationError("metric must be symmetric");
  if (!try_inverse(g)) throw ValidationError("metric must be invertible");
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

MultilinearForm bilinear_form(const Matrix& B) {
  if (B.rows() != B.cols() || B.rows() < 2) throw ValidationError("bilinear form needs a square matrix of size >= 2");
  const int d = static_cast<int>(B.rows());
  MultilinearForm w(d, 2);
  for (int i = 0; i < d; ++i) {
    for (const auto& [j, v] : B.row(i).entries()) w.set({i, static_cast<int>(j)}, v);
  }
  return w;
}

Matrix bilinear_q(const Matrix& B) { return inverse(B).transpose() * B; }

GalleryEntry yang_mills(const Matrix& g) {
  require_metric(g);
  const int d = static_cast<int>(g.rows());
  MultilinearForm w(d, 4);
  for (int r = 0; r < d; ++r)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          Scalar v = g.at(r, l) * g.at(m, n) + g.at(r, n) * g.at(l, m) - Scalar(2) * g.at(r, m) * g.at(l, n);
          if (!v.is_zero()) w.set({r, l, m, n}, v);
        }
  GalleryEntry e{"yang-mills", w, 3, Matrix::identity(d), true, std::nullopt, {}, ""};
  for (long long c : predicted_d3(d, 3, 5)) e.expected_dims.push_back(static_cast<Index>(c));
  e.note = "cubic Yang-Mills algebra g_{lm}[x^l,[x^m,x^n]] = 0";
  return e;
}

GalleryEntry super_yang_mills(const Matrix& g) {
  require_metric(g);
  const int d = static_cast<int>(g.rows());
  MultilinearForm w(d, 4);
  for (int r = 0; r < d; ++r)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          Scalar v = g.at(r, l) * g.at(m, n) - g.at(r, n) * g.at(l, m);
          if (!v.is_zero()) w.set({r, l, m, n}, v);
        }
  GalleryEntry e{"super-yang-mills", w, 3, scalar_identity(d, Scalar(-1)), true, std::nullopt, {}, ""};
  for (long long c : predicted_d3(d, 3, 5)) e.expected_dims.push_back(static_cast<Index>(c));
  e.note = "super Yang-Mills algebra g_{lm}[x^l,{x^m,x^n}] = 0";
  return e;
}

Subspace yang_mills_bracket_relations(const Matrix& g) {
  require_metric(g);
  const int d = static_cast<int>(g.rows());
  std::vector<SparseVector> rows;
  for (int n = 0; n < d; ++n) {
    MultilinearForm r(d, 3);
    for (int l = 0; l < d; ++l) {
      for (const auto& [m_, c] : g.row(l).entries()) {
        int m = static_cast<int>(m_);
        r.add_code(encode({l, m, n}, d), c);
        r.add_code(encode({l, n, m}, d), -c);
        r.add_code(encode({m, n, l}, d), -c);
        r.add_code(encode({n, m, l}, d), c);
      }
    }
    rows.push_back(r.as_vector());
  }
  return Subspace::span(ipow(d, 3), std::move(rows));
}

GalleryEntry epsilon_form(int s_plus_1, int N) {
  if (s_plus_1 < 2) throw ValidationError("epsilon needs s+1 >= 2");
  if (N < 2 || N > s_plus_1) throw ValidationError("epsilon needs 2 <= N <= s+1");
  MultilinearForm w(s_plus_1, s_plus_1);
  std::vector<int> p(s_plus_1);
  std::iota(p.begin(), p.end(), 0);
  do {
    w.set(p, Scalar(permutation_sign(p)));
  } while (std::next_permutation(p.begin(), p.end()));
  const int s = s_plus_1 - 1;
  GalleryEntry e{"epsilon-" + std::to_string(s_plus_1) + "-N" + std::to_string(N), w, N,
                 scalar_identity(s_plus_1, Scalar(s % 2 == 0 ? 1 : -1)), std::nullopt, std::nullopt, {}, ""};
  if (s_plus_1 >= 3) e.iii_prime = false;
  if (N == 2) {
    // polynomial algebra in s+1 variables
    for (int n = 0; n <= 5; ++n) {
      Rational c(1);
      for (int k = 1; k <= s; ++k) c = c * (n + k) / k;
      e.expected_dims.push_back(c.get_num().get_ui());
    }
  }
  e.note = "completely antisymmetric form";
  return e;
}

GalleryEntry a_u_form(const std::vector<std::pair<Rational, Rational>>& cos_sin) {
  if (cos_sin.size() != 3) throw ValidationError("A_u needs three (cos, sin) pairs");
  struct Cx {
    Rational re, im;
  };
  std::vector<Cx> u{{Rational(1), Rational(0)}};
  for (const auto& [c, s] : cos_sin) {
    if (c * c + s * s != 1) throw ValidationError("A_u needs c^2 + s^2 = 1 exactly");
    u.push_back({c, s});
  }
  auto mul = [](const Cx& a, const Cx& b) { return Cx{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; };
  auto conj = [](const Cx& a) { return Cx{a.re, -a.im}; };
  FieldPtr gi = gaussian_field();
  MultilinearForm w(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          Cx t = mul(mul(u[r], conj(u[l])), mul(u[m], conj(u[n])));
          Scalar v;
          std::vector<int> idx{r, l, m, n};
          std::vector<int> sorted = idx;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
            v = Scalar(-t.re * permutation_sign(idx));
          }
          if (r == m && l == n) v = v + Scalar(Rational(0), t.im, gi);
          if (!v.is_zero()) w.set(idx, v);
        }
  GalleryEntry e{"a-u", w, 2, scalar_identity(4, Scalar(-1)), std::nullopt, std::nullopt, {}, ""};
  e.note = "noncommutative 4-plane at an exact point of the parameter torus";
  return e;
}

GalleryEntry manin_eps_q(const Scalar& q) {
  if (q.is_zero()) throw ValidationError("q must be nonzero");
  Matrix B(2, 2);
  B.set(0, 1, Scalar(-1));
  B.set(1, 0, q);
  GalleryEntry e{"eps-q", bilinear_form(B), 2, bilinear_q(B), std::nullopt, std::nullopt, {}, ""};
  for (long long c : predicted_d2(2, 5)) e.expected_dims.push_back(static_cast<Index>(c));
  e.note = "Manin plane x^1 x^2 = q x^2 x^1";
  return e;
}

std::vector<GalleryEntry> gl2_orbit_reps(const Scalar& q) {
  std::vector<GalleryEntry> out;
  Matrix B0(2, 2);
  B0.set(0, 1, Scalar(-1));
  B0.set(1, 0, Scalar(1));
  out.push_back({"gl2-rk0", bilinear_form(B0), 2, bilinear_q(B0), std::nullopt, std::nullopt, {}, "K[x^1, x^2]"});
  Matrix B1 = B0;
  B1.set(1, 1, Scalar(1));
  out.push_back({"gl2-rk1", bilinear_form(B1), 2, bilinear_q(B1), std::nullopt, std::nullopt, {},
                 "x^1 x^2 - x^2 x^1 - (x^2)^2 = 0"});
  GalleryEntry rk2 = manin_eps_q(q);
  rk2.name = "gl2-rk2";
  out.push_back(rk2);
  for (auto& e : out) {
    e.expected_dims.clear();
    for (long long c : predicted_d2(2, 5)) e.expected_dims.push_back(static_cast<Index>(c));
  }
  return out;
}

GalleryEntry as_counterexample() {
  MultilinearForm w(3, 3);
  for (const MultiIndex& idx : std::vector<MultiIndex>{{0, 0, 0}, {1, 1, 1}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    w.set(idx, Scalar(1));
  }
  GalleryEntry e{"as-counterexample", w, 2, std::nullopt, true, std::nullopt, {}, ""};
  e.note = "x^2 + yz = 0, y^2 + zx = 0, xy = 0: 3-regular but not Koszul";
  return e;
}

std::vector<GalleryEntry> gallery() {
  std::vector<GalleryEntry> out;
  out.push_back(yang_mills(Matrix::identity(3)));
  out.push_back(super_yang_mills(Matrix::identity(3)));
  GalleryEntry ym2 = yang_mills(diagonal({Scalar(1), Scalar(-1)}));
  ym2.name = "yang-mills-2";
  out.push_back(ym2);
  out.push_back(epsilon_form(2, 2));
  out.push_back(epsilon_form(3, 2));
  out.push_back(epsilon_form(4, 3));
  out.push_back(epsilon_form(5, 3));
  out.push_back(a_u_form({{Rational(3, 5), Rational(4, 5)}, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}}));
  for (auto& e : gl2_orbit_reps()) out.push_back(e);
  out.push_back(as_counterexample());
  return out;
}

bool is_central_through(GradedQuotient& A, int c_degree, const SparseVector& c, int n_max) {
  for (int j = 0; j + c_degree <= n_max; ++j) {
    for (Index b = 0; b < A.dim(j); ++b) {
      SparseVector e = SparseVector::unit(b);
      if (A.multiply(c_degree, c, j, e) != A.multiply(j, e, c_degree, c)) return false;
    }
  }
  return true;
}

}  // namespace homform
