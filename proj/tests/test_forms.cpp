#include <doctest.h>

#include "generators.hpp"
#include "homform/errors.hpp"
#include "homform/gallery.hpp"
#include "homform/preregularity.hpp"
#include "homform/tensors.hpp"
#include "support.hpp"

using namespace homform;
using support::mat;

namespace {

// W_{l1..lm} = sum_t Q[t][lm] W_{t l1..l(m-1)}, written out component by component.
bool twisted_cyclic_by_hand(const MultilinearForm& w, const Matrix& Q) {
  const int d = w.dim(), m = w.arity();
  for (Index c = 0; c < ipow(d, m); ++c) {
    MultiIndex idx = decode(c, d, m);
    Scalar rhs;
    for (int t = 0; t < d; ++t) {
      MultiIndex shifted{t};
      shifted.insert(shifted.end(), idx.begin(), idx.end() - 1);
      rhs = rhs + Q.at(t, idx.back()) * w.at(shifted);
    }
    if (rhs != w.at(idx)) return false;
  }
  return true;
}

Matrix scalar_matrix(int n, long s) { return Matrix::identity(n).scaled(Scalar(s)); }

}  // namespace

TEST_SUITE("tensors") {
  TEST_CASE("codes are lexicographic") {
    CHECK(encode({0, 0, 1}, 3) == 1);
    CHECK(encode({1, 0, 0}, 3) == 9);
    for (Index c = 0; c < 81; ++c) CHECK(encode(decode(c, 3, 4), 3) == c);
    CHECK_THROWS_AS(ipow(10, 40), GuardError);
  }

  TEST_CASE("flatten") {
    Matrix B = mat({{1, 2}, {3, 4}});
    CHECK(flatten(bilinear_form(B), 1) == B);
    MultilinearForm eps3 = epsilon_form(3, 2).form;
    Matrix F = flatten(eps3, 1);
    CHECK(F.rows() == 3);
    CHECK(F.cols() == 9);
    CHECK(rank(F) == 3);
    CHECK(oracle::rank(support::to_dense(F)) == 3);
    CHECK(flatten(MultilinearForm(2, 3), 1).is_zero());
  }

  TEST_CASE("gl action on bilinear forms is L^t B L") {
    gen::Rng rng(20);
    for (int k = 0; k < 20; ++k) {
      Matrix B = gen::matrix(rng, 3, 3);
      Matrix L = gen::invertible(rng, 3);
      CHECK(flatten(gl_act(bilinear_form(B), L), 1) == L.transpose() * B * L);
      CHECK(gl_act(bilinear_form(B), Matrix::identity(3)) == bilinear_form(B));
    }
  }

  TEST_CASE("gl action composes") {
    gen::Rng rng(21);
    MultilinearForm w = gen::form(rng, 2, 3);
    Matrix A = gen::invertible(rng, 2), B = gen::invertible(rng, 2);
    CHECK(gl_act(gl_act(w, A), B) == gl_act(w, A * B));
  }

  TEST_CASE("cyclic shift") {
    MultilinearForm sym(2, 3);
    for (Index c = 0; c < 8; ++c) sym.set_code(c, Scalar(1));
    CHECK(cyclic_shift(sym, Matrix::identity(2)) == sym);
    MultilinearForm e3 = epsilon_form(3, 2).form;
    CHECK(cyclic_shift(e3, Matrix::identity(3)) == e3);
    MultilinearForm e2 = epsilon_form(2, 2).form;
    CHECK(cyclic_shift(e2, scalar_matrix(2, -1)) == e2);
  }

  TEST_CASE("contractions") {
    MultilinearForm w = as_counterexample().form;
    auto rows = contractions(w, 2);
    CHECK(rows.size() == 3);
    CHECK(contractions(w, 3).size() == 1);
  }
}

TEST_SUITE("preregularity") {
  TEST_CASE("Q of the gallery forms") {
    CHECK(q_matrix(yang_mills(Matrix::identity(3)).form) == Matrix::identity(3));
    CHECK(q_matrix(super_yang_mills(Matrix::identity(3)).form) == scalar_matrix(3, -1));
    Matrix q = q_matrix(manin_eps_q(Scalar(2)).form);
    CHECK(q == support::diag({Scalar(-2), Scalar(-1, 2)}));
    CHECK(twisted_cyclic_by_hand(manin_eps_q(Scalar(2)).form, q));
    for (const auto& e : gallery()) {
      CAPTURE(e.name);
      TwistSolution t = solve_twist(e.form);
      REQUIRE(t.status == TwistStatus::unique);
      if (e.expected_q) CHECK(*t.q == *e.expected_q);
      CHECK(is_q_cyclic(e.form, *t.q));
      if (e.name != "a-u") CHECK(twisted_cyclic_by_hand(e.form, *t.q));
    }
  }

  TEST_CASE("Q of a bilinear form is (B^-1)^t B") {
    gen::Rng rng(30);
    for (int k = 0; k < 20; ++k) {
      Matrix B = gen::invertible(rng, rng.uniform(2, 4));
      MultilinearForm b = bilinear_form(B);
      CHECK(is_preregular(b));
      CHECK(q_matrix(b) == bilinear_q(B));
      CHECK(twisted_cyclic_by_hand(b, bilinear_q(B)));
    }
  }

  TEST_CASE("Q transforms by conjugation under GL") {
    gen::Rng rng(31);
    MultilinearForm w = yang_mills(Matrix::identity(3)).form;
    for (int k = 0; k < 5; ++k) {
      Matrix L = gen::invertible(rng, 3);
      CHECK(q_matrix(gl_act(w, L)) == inverse(L) * q_matrix(w) * L);
    }
  }

  TEST_CASE("one-site nondegeneracy") {
    auto all = [](const std::vector<bool>& v, bool x) {
      return std::all_of(v.begin(), v.end(), [x](bool b) { return b == x; });
    };
    CHECK(all(one_site_nondegenerate(epsilon_form(3, 2).form), true));
    CHECK(all(one_site_nondegenerate(MultilinearForm(3, 3)), false));
    CHECK(all(one_site_nondegenerate(bilinear_form(mat({{1, 0}, {0, 0}}))), false));
  }

  TEST_CASE("preregular") {
    CHECK(is_preregular(bilinear_form(mat({{1, 2}, {0, 1}}))));
    CHECK_FALSE(is_preregular(bilinear_form(mat({{1, 2}, {2, 4}}))));
    CHECK(is_preregular(gallery()[7].form));
    CHECK(solve_twist(MultilinearForm(2, 2)).status != TwistStatus::unique);
    CHECK_THROWS_AS(q_matrix(MultilinearForm(2, 2)), PreconditionError);
  }

  TEST_CASE("three-regularity and (iii)'") {
    CHECK(is_three_regular(yang_mills(Matrix::identity(3)).form));
    CHECK(is_three_regular(epsilon_form(3, 2).form));
    CHECK(is_three_regular(epsilon_form(4, 3).form));
    CHECK(is_three_regular(as_counterexample().form));
    CHECK_FALSE(satisfies_iii_prime(epsilon_form(3, 2).form));
    CHECK_FALSE(satisfies_iii_prime(epsilon_form(4, 3).form));
    CHECK(satisfies_iii_prime(yang_mills(Matrix::identity(3)).form));
    CHECK(satisfies_iii_prime(super_yang_mills(Matrix::identity(3)).form));
    ThreeRegularity t = three_regularity(epsilon_form(3, 2).form);
    CHECK(t.contains_identity);
    CHECK(t.solution_dim == 1);
  }

  TEST_CASE("analyze_regularity report") {
    RegularityReport r = analyze_regularity(yang_mills(Matrix::identity(3)).form, 3);
    CHECK(r.preregular);
    REQUIRE(r.three_regular);
    CHECK(r.three_regular->three_regular);
    CHECK(r.relation_dim == 3);
    RegularityReport e = analyze_regularity(epsilon_form(4, 3).form, 3);
    CHECK(e.relation_dim == 4);
    CHECK(*e.iii_prime == false);
  }

  TEST_CASE("cyclic projector fixes Q-cyclic forms") {
    MultilinearForm w = epsilon_form(3, 2).form;
    CHECK(cyclic_projector(w, Matrix::identity(3)) == w);
    // m odd, Q = -1: averaging kills everything, so the projector sees only zero
    gen::Rng rng(40);
    MultilinearForm z = gen::q_invariant(gen::form(rng, 2, 3), scalar_matrix(2, -1));
    CHECK(z.is_zero());
    CHECK(cyclic_projector(z, scalar_matrix(2, -1)).is_zero());
    CHECK_THROWS_AS(cyclic_projector(gen::form(rng, 2, 2, 0.0), support::diag({Scalar(2), Scalar(1)})),
                    PreconditionError);
  }

  TEST_CASE("cyclic projector is idempotent on random Q-invariant forms") {
    gen::Rng rng(41);
    for (int k = 0; k < 200; ++k) {
      const int d = rng.uniform(2, 3), m = rng.uniform(2, 4);
      Matrix Q = gen::signed_permutation(rng, d);
      MultilinearForm w = gen::q_invariant(gen::form(rng, d, m, 0.4), Q);
      REQUIRE(gl_act(w, Q) == w);
      MultilinearForm p = cyclic_projector(w, Q);
      CHECK(cyclic_projector(p, Q) == p);
      CHECK(cyclic_shift(p, Q) == p);
    }
  }
}
