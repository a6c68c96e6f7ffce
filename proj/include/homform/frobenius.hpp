#pragma once

#include <vector>

#include "homform/algebra.hpp"

namespace homform {

/// Entries omega_w(u v) = W_{uv} for standard words u of A^!_p and v of A^!_{m-p}.
Matrix pairing_matrix(GradedQuotient& dual, const MultilinearForm& w, int p);

/// omega_w restricted to A^!_m, one value per standard word.
std::vector<Scalar> omega_form(const MultilinearForm& w, int N);

struct SigmaAutomorphisms {
  Matrix q;                   // Q_w
  std::vector<Matrix> lower;  // sigma_w on A^!_n, rows are images of the standard words
  std::vector<Matrix> upper;  // sigma^w on A_n
};

/// sigma_w(e_mu) = Q^t_mu e_t on A^! and sigma^w(x^mu) = Q^mu_t x^t on A, degrees 0..n_max.
SigmaAutomorphisms sigma_automorphisms(const MultilinearForm& w, int N, int n_max);

/// omega_w(x y) = omega_w(sigma_w(y) x) on basis pairs of every complementary degree.
bool twisted_trace_property(const MultilinearForm& w, int N);

struct FrobeniusQuotient {
  std::vector<Index> dual_dims;     // dim A^!_p, p = 0..m
  std::vector<Subspace> ideal;      // I_p inside A^!_p
  std::vector<Index> dims;          // dim F_p
  std::vector<std::vector<Index>> complement;  // standard-word positions spanning F_p
  std::vector<Matrix> pairing;      // F_p x F_{m-p}
  std::vector<Matrix> sigma;        // induced sigma on F_p
  bool saturation_stable = false;   // I_p E + E I_p inside I_{p+1}
  bool pairings_invertible = false;
  bool commutation = false;         // x y = sigma(y) x in F_m
};

FrobeniusQuotient frobenius_quotient(const MultilinearForm& w, int N);

}  // namespace homform
