#include <doctest.h>

#include "generators.hpp"
#include "homform/errors.hpp"
#include "homform/gallery.hpp"
#include "homform/hopf.hpp"
#include "homform/preregularity.hpp"
#include "support.hpp"

using namespace homform;
using support::mat;

namespace {

// P = B^{-1} (x) B in the row convention of the library, built entry by entry.
Matrix rank_one_p(const Matrix& B) {
  Matrix Bi = inverse(B);
  const Index d = B.rows();
  Matrix P(d * d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index m = 0; m < d; ++m)
        for (Index n = 0; n < d; ++n) P.set(a * d + b, m * d + n, Bi.at(a, b) * B.at(m, n));
  return P;
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("right inverses") {
    for (const auto& e : gallery()) {
      CAPTURE(e.name);
      MultilinearForm wt = solve_wtilde(e.form);
      CHECK(validate_wtilde(e.form, wt));
      CHECK(contraction_identity_check(e.form, wt));
    }
    CHECK_THROWS_AS(solve_wtilde(bilinear_form(mat({{1, 1}, {1, 1}}))), PreconditionError);
    CHECK_FALSE(validate_wtilde(epsilon_form(2, 2).form, epsilon_form(2, 2).form));
    // the natural choice for epsilon is epsilon scaled by 1/s!
    MultilinearForm e3 = epsilon_form(3, 2).form;
    CHECK(validate_wtilde(e3, e3.scaled(Scalar(1, 2))));
    CHECK(contraction_identity_check(e3, e3.scaled(Scalar(1, 2))));
  }

  TEST_CASE("q from a bilinear form") {
    QRoots eq = q_from_b(manin_eps_q(Scalar(2)).form);
    CHECK_FALSE(eq.in_extension);
    CHECK(eq.q1 * eq.q2 == Scalar(1));
    CHECK(((eq.q1 == Scalar(2)) || (eq.q2 == Scalar(2))));
    QRoots id = q_from_b(bilinear_form(Matrix::identity(2)));
    CHECK(id.q1 == Scalar(-1));
    gen::Rng rng(100);
    for (int k = 0; k < 5; ++k) {
      QRoots r = q_from_b(gen::nondegenerate_bilinear(rng, 3));
      CHECK(r.q1 * r.q1 + r.c * r.q1 + Scalar(1) == Scalar(0));
      CHECK(r.q1 * r.q2 == Scalar(1));
    }
    CHECK_THROWS_AS(q_from_b(bilinear_form(mat({{1, 1}, {1, 1}}))), PreconditionError);
  }

  TEST_CASE("Yang-Baxter and Hecke relations") {
    gen::Rng rng(101);
    std::vector<Matrix> Bs{flatten(manin_eps_q(Scalar(2)).form, 1), Matrix::identity(2)};
    for (int k = 0; k < 5; ++k) Bs.push_back(gen::invertible(rng, 3));
    for (const auto& B : Bs) {
      MultilinearForm b = bilinear_form(B);
      CHECK(yang_baxter_check(b).all());
      // P^2 = c P, the identity behind the Hecke relations
      Matrix P = rank_one_p(B);
      CHECK(P * P == P.scaled(q_from_b(b).c));
    }
  }

  TEST_CASE("Hopf presentations") {
    MultilinearForm eq = manin_eps_q(Scalar(2)).form;
    HopfPresentation h = hopf_presentation(eq, solve_wtilde(eq));
    CHECK(h.raw_relation_count == 8);
    CHECK(h.relation_space.dim() == h.relations.size());
    CHECK(h.counit_consistent);
    CHECK(verify_antipode_identity(h));
    CHECK(verify_coproduct_consistency(h));
    CHECK(coaction_check(eq, 2, h));
    CHECK(h.antipode.size() == 4);

    gen::Rng rng(102);
    MultilinearForm b3 = gen::nondegenerate_bilinear(rng, 3);
    HopfPresentation h3 = hopf_presentation(b3, solve_wtilde(b3));
    CHECK(verify_antipode_identity(h3));
    CHECK(coaction_check(b3, 2, h3));

    MultilinearForm e2 = epsilon_form(2, 2).form;
    HopfPresentation he = hopf_presentation(e2, solve_wtilde(e2));
    CHECK(verify_antipode_identity(he));
    CHECK(coaction_check(e2, 2, he));

    HopfPresentation hi = hopf_presentation(bilinear_form(Matrix::identity(2)), bilinear_form(Matrix::identity(2)));
    CHECK(verify_antipode_identity(hi));
  }

  TEST_CASE("Hopf guard") {
    MultilinearForm ym = yang_mills(Matrix::identity(3)).form;
    CHECK_THROWS_AS(hopf_presentation(ym, solve_wtilde(ym), 100), GuardError);
  }

  TEST_CASE("noncommutative polynomials") {
    NCPolynomial x, y;
    x.add({0}, Scalar(1));
    y.add({3}, Scalar(2));
    NCPolynomial xy = x * y, yx = y * x;
    CHECK(xy.terms.size() == 1);
    CHECK((xy + yx.scaled(Scalar(-1))).terms.size() == 2);
    CHECK((xy + xy.scaled(Scalar(-1))).is_zero());
    CHECK(to_string(xy, 2) == "(2)*u0_0*u1_1");
    CHECK(to_string(NCPolynomial(), 2) == "0");
  }
}
