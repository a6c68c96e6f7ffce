#include <doctest.h>

#include "generators.hpp"
#include "homform/errors.hpp"
#include "homform/gallery.hpp"
#include "homform/koszul.hpp"
#include "support.hpp"

using namespace homform;

namespace {

Presentation pres(const GalleryEntry& e) { return algebra_from_form(e.form, e.N); }

// Library homology against the dense subquotient computation, every complete term up to deg_max.
void check_homology_against_oracle(const Presentation& p, int deg_max) {
  ComplexTruncation c = koszul_complex(p, deg_max);
  oracle::Dense R = support::to_dense(p.relations());
  for (const auto& [key, h] : c.homology) {
    CAPTURE(key.first);
    CAPTURE(key.second);
    CHECK(h == oracle::koszul_homology(R, p.generators(), p.degree(), key.first, key.second));
  }
}

const DiagnosticItem& item(const GorensteinDiagnostics& g, const std::string& name) {
  for (const auto& it : g.items)
    if (it.name == name) return it;
  throw std::out_of_range(name);
}

}  // namespace

TEST_SUITE("koszul") {
  TEST_CASE("nu") {
    CHECK(nu(2, 3) == 3);
    CHECK(nu(3, 0) == 0);
    CHECK(nu(3, 1) == 1);
    CHECK(nu(3, 2) == 3);
    CHECK(nu(3, 3) == 4);
    CHECK(nu(3, 4) == 6);
    for (int p = 0; p < 8; ++p) CHECK(nu(4, p) == oracle::nu(4, p));
  }

  TEST_CASE("dual spaces agree with the annihilator oracle") {
    gen::Rng rng(60);
    std::vector<Presentation> cases{pres(as_counterexample()), pres(yang_mills(Matrix::identity(3))),
                                    algebra_from_form(gen::nondegenerate_bilinear(rng, 3), 2)};
    for (const auto& p : cases) {
      auto X = koszul_dual_spaces(p, 5);
      oracle::Dense R = support::to_dense(p.relations());
      for (int n = 0; n <= 5; ++n) {
        oracle::Dense O = oracle::dual_space(R, p.generators(), p.degree(), n);
        const Index amb = ipow(p.generators(), n);
        CHECK(X[n].dim() == O.size());
        CHECK(oracle::span_dim(support::to_dense(X[n]), O, amb) == O.size());
      }
    }
  }

  TEST_CASE("dual space dimensions") {
    auto X = koszul_dual_spaces(pres(as_counterexample()), 6);
    std::vector<Index> dims;
    for (const auto& x : X) dims.push_back(x.dim());
    CHECK(dims == std::vector<Index>{1, 3, 3, 1, 0, 0, 0});
    auto Y = koszul_dual_spaces(pres(yang_mills(Matrix::identity(3))), 5);
    CHECK(Y[3].dim() == 3);
    CHECK(Y[4].dim() == 1);
    CHECK(Y[4].contains(yang_mills(Matrix::identity(3)).form.as_vector()));
    CHECK(Y[5].dim() == 0);
  }

  TEST_CASE("homology agrees with the brute-force oracle") {
    gen::Rng rng(61);
    check_homology_against_oracle(pres(as_counterexample()), 5);
    check_homology_against_oracle(algebra_from_form(gen::nondegenerate_bilinear(rng, 2), 2), 5);
    check_homology_against_oracle(pres(yang_mills(Matrix::identity(3))), 5);
    check_homology_against_oracle(pres(epsilon_form(4, 3)), 4);
  }

  TEST_CASE("N-complexes are N-nilpotent and their contractions are complexes") {
    for (const auto& e : gallery()) {
      if (e.form.dim() > 3 && e.N == 2) continue;  // A_u is covered by the cycle tests
      CAPTURE(e.name);
      const int deg = e.N == 2 ? 5 : 6;
      CHECK(koszul_n_complex(pres(e), deg).nilpotent);
      CHECK(koszul_complex(pres(e), deg).nilpotent);
    }
  }

  TEST_CASE("Koszulity verdicts") {
    KoszulVerdict ym = koszulity_check(pres(yang_mills(Matrix::identity(3))), 7);
    CHECK(ym.pass);
    CHECK(ym.note.find("truncated evidence") != std::string::npos);
    CHECK(koszulity_check(pres(epsilon_form(4, 3)), 7).pass);
    CHECK(koszulity_check(pres(epsilon_form(3, 2)), 6).pass);

    KoszulVerdict as = koszulity_check(pres(as_counterexample()), 7);
    CHECK_FALSE(as.pass);
    REQUIRE(as.failure);
    CHECK(*as.failure == Key{2, 4});
    ComplexTruncation c = koszul_complex(pres(as_counterexample()), 4);
    CHECK(c.homology.at({2, 4}) == 2);
    CHECK(oracle::koszul_homology(support::to_dense(pres(as_counterexample()).relations()), 3, 2, 2, 4) == 2);
  }

  TEST_CASE("Gorenstein cochain pattern") {
    gen::Rng rng(62);
    for (int k = 0; k < 3; ++k) {
      CochainVerdict v = gorenstein_cochain_check(algebra_from_form(gen::nondegenerate_bilinear(rng, 3), 2), 6);
      CHECK(v.pattern);
      CHECK(v.D == 2);
    }
    CochainVerdict s = gorenstein_cochain_check(pres(super_yang_mills(Matrix::identity(3))), 7);
    CHECK(s.pattern);
    CHECK(s.D == 3);
    CochainVerdict e5 = gorenstein_cochain_check(pres(epsilon_form(5, 3)), 6);
    CHECK_FALSE(e5.pattern);
    CHECK(e5.D == 3);
    CHECK(e5.note.find("violated") != std::string::npos);
    CHECK_THROWS_AS(gorenstein_cochain_check(pres(as_counterexample()), 5), PreconditionError);
  }

  TEST_CASE("Gorenstein diagnostics") {
    GorensteinDiagnostics ym = gorenstein_diagnostics(yang_mills(Matrix::identity(3)).form, 3);
    CHECK(ym.all_pass());
    CHECK(ym.D == 3);
    CHECK(ym.dual_dims == std::vector<Index>{1, 3, 9, 3, 1, 0});

    GorensteinDiagnostics e4 = gorenstein_diagnostics(epsilon_form(4, 3).form, 3);
    CHECK(e4.all_pass());
    CHECK(e4.D == 3);
    CHECK(e4.dual_dims == std::vector<Index>{1, 4, 16, 4, 1, 0});

    GorensteinDiagnostics e5 = gorenstein_diagnostics(epsilon_form(5, 3).form, 3);
    CHECK_FALSE(e5.all_pass());
    CHECK_FALSE(item(e5, "dual-top-dimensions").pass);
    CHECK(e5.dual_dims == std::vector<Index>{1, 5, 25, 10, 5, 1, 0});

    GorensteinDiagnostics b = gorenstein_diagnostics(epsilon_form(2, 2).form, 2);
    CHECK(b.all_pass());
    CHECK(item(b, "frobenius-pairing-nondegenerate").applicable);
  }
}
