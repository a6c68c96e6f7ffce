#include <doctest.h>

#include "generators.hpp"
#include "homform/errors.hpp"
#include "homform/frobenius.hpp"
#include "homform/gallery.hpp"
#include "support.hpp"

using namespace homform;

namespace {

SparseVector apply_rows(const Matrix& M, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, c] : v.entries()) out.axpy(c, M.row(i));
  return out;
}

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("Frobenius quotients") {
    FrobeniusQuotient e4 = frobenius_quotient(epsilon_form(4, 3).form, 3);
    CHECK(e4.dims == std::vector<Index>{1, 4, 6, 4, 1});
    CHECK(e4.dual_dims == std::vector<Index>{1, 4, 16, 4, 1});
    CHECK(e4.pairings_invertible);
    CHECK(e4.commutation);
    CHECK(e4.saturation_stable);

    FrobeniusQuotient ym = frobenius_quotient(yang_mills(Matrix::identity(3)).form, 3);
    CHECK(ym.dims == std::vector<Index>{1, 3, 9, 3, 1});
    CHECK(ym.saturation_stable);
    CHECK(ym.pairings_invertible);
    CHECK(ym.commutation);

    FrobeniusQuotient e3 = frobenius_quotient(epsilon_form(3, 2).form, 2);
    CHECK(e3.dims == std::vector<Index>{1, 3, 3, 1});
    for (const auto& P : e3.pairing) CHECK(rank(P) == P.rows());
  }

  TEST_CASE("twisted trace property on preregular forms") {
    gen::Rng rng(70);
    CHECK(twisted_trace_property(yang_mills(Matrix::identity(3)).form, 3));
    CHECK(twisted_trace_property(super_yang_mills(Matrix::identity(3)).form, 3));
    CHECK(twisted_trace_property(epsilon_form(4, 3).form, 3));
    CHECK(twisted_trace_property(manin_eps_q(Scalar(2)).form, 2));
    for (int k = 0; k < 5; ++k) CHECK(twisted_trace_property(gen::nondegenerate_bilinear(rng, 3), 2));
  }

  TEST_CASE("omega is a form on the top degree") {
    auto o = omega_form(epsilon_form(3, 2).form, 2);
    REQUIRE(o.size() == 1);
    CHECK(!o[0].is_zero());
    CHECK(omega_form(yang_mills(Matrix::identity(3)).form, 3).size() == 1);
    CHECK_THROWS_AS(omega_form(MultilinearForm(2, 2), 2), PreconditionError);
  }

  TEST_CASE("sigma maps are graded algebra automorphisms") {
    gen::Rng rng(71);
    MultilinearForm w = manin_eps_q(Scalar(3)).form;
    SigmaAutomorphisms s = sigma_automorphisms(w, 2, 4);
    GradedQuotient A(algebra_from_form(w, 2));
    GradedQuotient D(algebra_from_form(w, 2).dual());
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        for (Index a = 0; a < A.dim(p); ++a) {
          for (Index b = 0; b < A.dim(q); ++b) {
            SparseVector ea = SparseVector::unit(a), eb = SparseVector::unit(b);
            CHECK(apply_rows(s.upper[p + q], A.multiply(p, ea, q, eb)) ==
                  A.multiply(p, s.upper[p].row(a), q, s.upper[q].row(b)));
          }
        }
        for (Index a = 0; a < D.dim(p); ++a) {
          for (Index b = 0; b < D.dim(q); ++b) {
            if (p + q > 2) continue;
            SparseVector ea = SparseVector::unit(a), eb = SparseVector::unit(b);
            CHECK(apply_rows(s.lower[p + q], D.multiply(p, ea, q, eb)) ==
                  D.multiply(p, s.lower[p].row(a), q, s.lower[q].row(b)));
          }
        }
      }
    }
    CHECK(s.upper[1] == s.q);
    CHECK(s.lower[1] == s.q.transpose());
  }

  TEST_CASE("pairing matrix shapes") {
    MultilinearForm w = yang_mills(Matrix::identity(3)).form;
    GradedQuotient dual(algebra_from_form(w, 3).dual());
    Matrix P = pairing_matrix(dual, w, 2);
    CHECK(P.rows() == 9);
    CHECK(P.cols() == 9);
    CHECK(rank(P) == 9);
    Matrix P1 = pairing_matrix(dual, w, 1);
    CHECK(P1.rows() == 3);
    CHECK(P1.cols() == 3);
    CHECK_THROWS_AS(pairing_matrix(dual, w, 5), ValidationError);
  }
}
