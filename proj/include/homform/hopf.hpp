#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homform/tensors.hpp"

namespace homform {

/// Default guard on (s+1)^(2m), the number of words of length m in the u letters.
constexpr Index kDefaultHopfGuard = 20000;

/// Right inverse of w: Wt^{a g1..g(m-1)} W_{g1..g(m-1) b} = delta^a_b, supported on the
/// lexicographically first independent rows of the last-slot flattening.
MultilinearForm solve_wtilde(const MultilinearForm& w);
bool validate_wtilde(const MultilinearForm& w, const MultilinearForm& wtilde);

/// Noncommutative polynomial in the letters u^a_b, letter code a * d + b.
/// The empty word is the unit.
struct NCPolynomial {
  std::map<std::vector<int>, Scalar> terms;

  void add(const std::vector<int>& word, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  NCPolynomial operator*(const NCPolynomial& o) const;
  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial scaled(const Scalar& c) const;
};

struct HopfPresentation {
  int dim = 0;    // s + 1
  int arity = 0;  // m
  MultilinearForm w;
  MultilinearForm wtilde;
  /// Canonical span of the relation families, in the coefficient space
  /// {1} + words of length m (code 0 is the unit, word c is 1 + c).
  Subspace relation_space;
  std::vector<NCPolynomial> relations;   // canonical rows of relation_space
  Index raw_relation_count = 0;          // 2 (s+1)^m families before deduplication
  std::vector<NCPolynomial> antipode;    // S(u^mu_nu) at mu * d + nu
  bool counit_consistent = false;
};

HopfPresentation hopf_presentation(const MultilinearForm& w, const MultilinearForm& wtilde,
                                   Index guard = kDefaultHopfGuard);

/// Vector of a polynomial supported on the unit and words of length m.
SparseVector hopf_coefficients(const HopfPresentation& hp, const NCPolynomial& p);

/// S(u) u = 1 and u S(u) = 1 modulo the span of the relations.
bool verify_antipode_identity(const HopfPresentation& hp);
/// Delta of each relation lies in Hrel (x) C + C (x) Hrel.
bool verify_coproduct_consistency(const HopfPresentation& hp);
/// The coaction x^mu -> u^mu_nu (x) x^nu maps the relations of A(w, N) into the
/// span of the Hopf relations tensor words plus words tensor the relations of A.
bool coaction_check(const MultilinearForm& w, int N, const HopfPresentation& hp);

/// Wt^{l g2..gm} W_{mu g2..gm} = (Q_w^{-1})^l_mu.
bool contraction_identity_check(const MultilinearForm& w, const MultilinearForm& wtilde);

struct QRoots {
  Scalar c;   // B^{ab} B_{ab}
  Scalar q1;  // roots of q^2 + c q + 1
  Scalar q2;
  bool in_extension = false;
};

/// Requires a nondegenerate bilinear form.
QRoots q_from_b(const MultilinearForm& b);

struct YangBaxterReport {
  Scalar q;
  bool braid_plus = false;
  bool braid_minus = false;
  bool hecke_plus = false;
  bool hecke_minus = false;
  bool all() const { return braid_plus && braid_minus && hecke_plus && hecke_minus; }
};

/// R+- = 1 + q^{+-1} B^{-1} (x) B, checked on (K^{s+1})^{(x)3}.
YangBaxterReport yang_baxter_check(const MultilinearForm& b);

std::string to_string(const NCPolynomial& p, int d);

}  // namespace homform
