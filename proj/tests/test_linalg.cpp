#include <doctest.h>

#include "generators.hpp"
#include "homform/errors.hpp"
#include "homform/linalg.hpp"
#include "support.hpp"

using namespace homform;
using support::mat;

TEST_SUITE("scalar") {
  TEST_CASE("rationals stay reduced") {
    Scalar x(6, 4);
    CHECK(x.to_string() == "3/2");
    CHECK((x * Scalar(2, 3)).is_one());
    CHECK((x - x).is_zero());
    CHECK(Scalar(-3, 6).to_string() == "-1/2");
    CHECK_THROWS_AS(Scalar(0).inverse(), PreconditionError);
  }

  TEST_CASE("gaussian arithmetic") {
    FieldPtr gi = gaussian_field();
    Scalar i = Scalar::generator(gi);
    CHECK(i * i == Scalar(-1));
    Scalar z = Scalar(Rational(3), Rational(4), gi);
    CHECK(z.norm() == 25);
    CHECK((z * z.inverse()).is_one());
    CHECK(z.to_string() == "3+4*t");
    CHECK((Scalar(1) - i).to_string() == "1-1*t");
  }

  TEST_CASE("quadratic field rejects reducible polynomials and mixing") {
    CHECK_THROWS(make_quadratic_field(Rational(-4), Rational(0)));
    FieldPtr f = make_quadratic_field(Rational(-2), Rational(0));
    Scalar r2 = Scalar::generator(f);
    CHECK(r2 * r2 == Scalar(2));
    Scalar i = Scalar::generator(gaussian_field());
    CHECK_THROWS_AS(r2 * i, PreconditionError);
  }

  TEST_CASE("field axioms on random quadratic elements") {
    gen::Rng rng(11);
    FieldPtr f = make_quadratic_field(Rational(3), Rational(1));
    for (int k = 0; k < 100; ++k) {
      Scalar a(rng.rational().a(), rng.rational().a(), f);
      Scalar b(rng.rational().a(), rng.rational().a(), f);
      Scalar c(rng.rational().a(), rng.rational().a(), f);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a / a).is_one());
      CHECK((a * b).norm() == a.norm() * b.norm());
    }
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rref of small matrices") {
    RrefResult id = rref(Matrix::identity(2));
    CHECK(id.reduced == Matrix::identity(2));
    CHECK(id.pivots == std::vector<Index>{0, 1});

    RrefResult r1 = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r1.reduced == mat({{1, 2}}));
    CHECK(r1.pivots == std::vector<Index>{0});
  }

  TEST_CASE("rref is idempotent and matches the oracle rank") {
    gen::Rng rng(1);
    for (int k = 0; k < 10; ++k) {
      Matrix M = gen::matrix(rng, 20, 50, 0.7);
      RrefResult r = rref(M);
      RrefResult rr = rref(r.reduced);
      CHECK(rr.reduced == r.reduced);
      CHECK(rr.pivots == r.pivots);
      CHECK(rank(M) == oracle::rank(support::to_dense(M)));
    }
  }

  TEST_CASE("rank-deficient products") {
    gen::Rng rng(2);
    for (int k = 0; k < 20; ++k) {
      const int r = rng.uniform(1, 4);
      Matrix M = gen::matrix(rng, 7, r) * gen::matrix(rng, r, 6);
      CHECK(rank(M) <= static_cast<Index>(r));
      CHECK(rank(M) == oracle::rank(support::to_dense(M)));
    }
  }

  TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix::identity(3)).dim() == 0);
    CHECK(nullspace(Matrix(3, 4)).dim() == 4);
    // the relation x1 x2 - 2 x2 x1 of the Manin plane as a single row in E (x) E
    Matrix row(1, 4);
    row.set(0, 1, Scalar(-1));
    row.set(0, 2, Scalar(2));
    CHECK(nullspace(row).dim() == 3);
  }

  TEST_CASE("nullspace vectors are killed and the count is cols - rank") {
    gen::Rng rng(3);
    for (int k = 0; k < 30; ++k) {
      Matrix M = gen::matrix(rng, rng.uniform(1, 6), rng.uniform(1, 8), 0.5);
      Subspace K = nullspace(M);
      CHECK(K.dim() + rank(M) == M.cols());
      for (const auto& v : K.basis()) CHECK(M.apply(v).empty());
      CHECK(K.dim() == oracle::nullspace(support::to_dense(M), M.cols()).size());
      Subspace L = left_nullspace(M);
      for (const auto& c : L.basis()) CHECK(M.transpose().apply(c).empty());
      CHECK(L.dim() + rank(M) == M.rows());
    }
  }

  TEST_CASE("subspace lattice") {
    gen::Rng rng(4);
    Subspace full = Subspace::full(5);
    Subspace a = Subspace::span(5, gen::matrix(rng, 2, 5).row_list());
    CHECK(subspace_sum(a, a) == a);
    CHECK(subspace_intersection(a, full) == a);
    CHECK(subspace_intersection(full, a) == a);
    CHECK(a.annihilator().dim() == 5 - a.dim());
    CHECK(a.annihilator().annihilator() == a);
  }

  TEST_CASE("dimension identity and both intersections agree on random pairs") {
    gen::Rng rng(5);
    for (int k = 0; k < 200; ++k) {
      const Index n = rng.uniform(1, 7);
      Subspace a = Subspace::span(n, gen::matrix(rng, rng.uniform(0, 5), n, 0.6).row_list());
      Subspace b = Subspace::span(n, gen::matrix(rng, rng.uniform(0, 5), n, 0.6).row_list());
      Subspace s = subspace_sum(a, b);
      Subspace i = subspace_intersection(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      CHECK(i == subspace_intersection_direct(a, b));
      CHECK(i.is_subspace_of(a));
      CHECK(i.is_subspace_of(b));
      CHECK(a.is_subspace_of(s));
    }
  }

  TEST_CASE("coordinates reconstruct the vector") {
    gen::Rng rng(6);
    Subspace a = Subspace::span(6, gen::matrix(rng, 3, 6).row_list());
    SparseVector v;
    v.axpy(Scalar(2), a.basis()[0]);
    v.axpy(Scalar(-1, 3), a.basis().back());
    auto c = a.coordinates(v);
    REQUIRE(c);
    SparseVector back;
    for (std::size_t j = 0; j < c->size(); ++j) back.axpy((*c)[j], a.basis()[j]);
    CHECK(back == v);
    CHECK_FALSE(Subspace(6).coordinates(SparseVector::unit(0)));
  }

  TEST_CASE("inverse") {
    gen::Rng rng(7);
    for (int k = 0; k < 20; ++k) {
      Matrix M = gen::invertible(rng, rng.uniform(1, 5));
      CHECK(M * inverse(M) == Matrix::identity(M.rows()));
      CHECK(inverse(M) * M == Matrix::identity(M.rows()));
    }
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), PreconditionError);
    CHECK_FALSE(try_inverse(mat({{0, 0}, {0, 0}})));
  }

  TEST_CASE("kron and transpose") {
    Matrix A = mat({{1, 2}, {3, 4}});
    Matrix B = mat({{0, 1}, {1, 0}});
    Matrix K = A.kron(B);
    CHECK(K.at(1, 0) == Scalar(1));
    CHECK(K.at(3, 2) == Scalar(4));
    CHECK(K.transpose() == A.transpose().kron(B.transpose()));
    CHECK((A * B).transpose() == B.transpose() * A.transpose());
  }
}
