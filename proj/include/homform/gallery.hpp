#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homform/algebra.hpp"

namespace homform {

struct GalleryEntry {
  std::string name;
  MultilinearForm form;
  int N = 2;
  std::optional<Matrix> expected_q;
  std::optional<bool> three_regular;
  std::optional<bool> iii_prime;
  std::vector<Index> expected_dims;  // dim A_0, A_1, ... where known
  std::string note;
};

/// Form with components B[mu][nu].
MultilinearForm bilinear_form(const Matrix& B);
/// Q_b = (B^-1)^t B for a nondegenerate bilinear form.
Matrix bilinear_q(const Matrix& B);

/// W = g g + g g - 2 g g (cubic, N = 3); g symmetric and invertible.
GalleryEntry yang_mills(const Matrix& g);
/// W = g_{rl} g_{mn} - g_{rn} g_{lm} (cubic, N = 3).
GalleryEntry super_yang_mills(const Matrix& g);
/// Relations g_{lm} [x^l, [x^m, x^n]] = 0 in E^{(x)3}.
Subspace yang_mills_bracket_relations(const Matrix& g);
/// Completely antisymmetric (s+1)-linear form with eps(e_0..e_s) = 1.
GalleryEntry epsilon_form(int s_plus_1, int N);
/// 4-linear form of the noncommutative 4-plane at the point with (cos phi_k, sin phi_k), phi_0 = 0.
GalleryEntry a_u_form(const std::vector<std::pair<Rational, Rational>>& cos_sin);
/// B = [[0, -1], [q, 0]]: relation x^1 x^2 - q x^2 x^1 up to scale.
GalleryEntry manin_eps_q(const Scalar& q);
/// Orbit representatives on K^2 with symmetric part of rank 0, 1 and 2 (the last at q).
std::vector<GalleryEntry> gl2_orbit_reps(const Scalar& q = Scalar(2));
/// w = x^3 + y^3 + xyz + yzx + zxy on K^3, N = 2.
GalleryEntry as_counterexample();

/// All entries used by the examples and tests.
std::vector<GalleryEntry> gallery();

/// c commutes with every basis element of A_j for deg(c) + j <= n_max.
bool is_central_through(GradedQuotient& A, int c_degree, const SparseVector& c, int n_max);

}  // namespace homform
