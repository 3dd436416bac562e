#include <doctest.h>

#include "spinlab/catalog.hpp"
#include "spinlab/homogeneous.hpp"
#include "support/oracles.hpp"

using namespace spinlab;

namespace {

HomogeneousError::Kind build_failure(int dim_g, int h_dim, std::vector<BracketRecord> recs,
                                     std::vector<double> metric = {}) {
  try {
    build_space("test", dim_g, h_dim, std::move(recs), std::move(metric));
  } catch (const HomogeneousError& e) {
    return e.kind();
  }
  FAIL("build_space accepted invalid data");
  return HomogeneousError::Kind::input;
}

}  // namespace

TEST_CASE("Stiefel spaces are naturally reductive with invariant torsion and curvature") {
  for (int N = 3; N <= 6; ++N) {
    const auto s = stiefel_space(N);
    CHECK(s.dim() == 2 * N - 3);
    CHECK(s.dim_h() == (N - 2) * (N - 3) / 2);
    const auto lie = lie_residuals(s);
    CHECK(lie.jacobi < 1e-12);
    CHECK(lie.subalgebra < 1e-12);
    CHECK(lie.reductivity < 1e-12);
    CHECK(lie.natural_reductivity < 1e-12);
    CHECK(torsion_invariance_residual(s) < 1e-12);
    CHECK(curvature_invariance_residual(s) < 1e-12);
  }
}

TEST_CASE("Stiefel torsion in the published frame") {
  const auto t4 = canonical_torsion(stiefel_space(4));
  CHECK(t4 == Form::from_terms(5, {{{1, 3, 5}, -1.0}, {{2, 4, 5}, -1.0}}));
  const auto t5 = canonical_torsion(stiefel_space(5));
  CHECK(t5 == Form::from_terms(7, {{{1, 4, 7}, -1.0}, {{2, 5, 7}, -1.0}, {{3, 6, 7}, -1.0}}));
}

TEST_CASE("Scal^g = Scal^nabla + 3/2 |T|^2 agrees with the Levi-Civita curvature") {
  CHECK(scal_nabla(stiefel_space(4)) == doctest::Approx(4.0));
  CHECK(scal_g(stiefel_space(4)) == doctest::Approx(7.0));
  CHECK(scal_nabla(stiefel_space(5)) == doctest::Approx(12.0));
  CHECK(scal_g(stiefel_space(5)) == doctest::Approx(16.5));
  for (int N = 3; N <= 6; ++N) {
    const auto s = stiefel_space(N);
    CHECK(scal_g(s) == doctest::Approx(oracle::levi_civita_scal(s.brackets(), s.dim_h())).epsilon(1e-12));
  }
}

TEST_CASE("S^2 = SO(3)/SO(2) has positive scalar curvature") {
  const auto s = build_space("S^2", 3, 1, so_brackets(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(canonical_torsion(s).is_zero());
  CHECK(scal_g(s) > 0);
  CHECK(scal_g(s) == doctest::Approx(oracle::levi_civita_scal(s.brackets(), 1)));
  CHECK(scal_g(s) == doctest::Approx(2.0));
}

TEST_CASE("canonical curvature is a validated tensor with Bianchi constant 1") {
  for (int N : {4, 5}) {
    const auto s = stiefel_space(N);
    const auto r = canonical_curvature(s);
    CHECK(r.report().pass());
    const auto cmp = compare_bianchi(bianchi_cyclic(r), sigma_T(canonical_torsion(s)));
    CHECK(cmp.consistent());
    CHECK(cmp.fitted_constant == doctest::Approx(1.0));
  }
}

TEST_CASE("isotropy acts skew-symmetrically on m") {
  const auto s = stiefel_space(5);
  for (int a = 1; a <= s.dim_h(); ++a) {
    const auto m = s.isotropy(a);
    CHECK((m + m.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK_THROWS_AS(s.isotropy(0), std::out_of_range);
}

TEST_CASE("defects are reported with their kind") {
  // [b1,b2] = b3, [b3,b4] = b1 fails Jacobi on (1,2,4).
  CHECK(build_failure(4, 0, {{1, 2, 3, 1.0}, {3, 4, 1, 1.0}}) == HomogeneousError::Kind::jacobi);
  // h = <E12, E13> is not a subalgebra of so(3).
  CHECK(build_failure(3, 2, so_brackets(3, {{1, 2}, {1, 3}, {2, 3}})) ==
        HomogeneousError::Kind::subalgebra);
  // [b1, b2] = b1 with h = <b1>: [h, m] lands in h.
  CHECK(build_failure(2, 1, {{1, 2, 1, 1.0}}) == HomogeneousError::Kind::reductivity);
  // Rescaling the fiber of V_2(R^4) leaves the naturally reductive family.
  const auto s = stiefel_space(4);
  CHECK(build_failure(6, 1, s.records(), {1, 1, 1, 1, 2}) ==
        HomogeneousError::Kind::natural_reductivity);
  // Records that contradict antisymmetry.
  CHECK(build_failure(3, 0, {{1, 2, 3, 1.0}, {2, 1, 3, 1.0}}) == HomogeneousError::Kind::input);
  CHECK(build_failure(3, 0, {{1, 2, 4, 1.0}}) == HomogeneousError::Kind::input);
}

TEST_CASE("uniform rescaling keeps natural reductivity") {
  const auto s = stiefel_space(4);
  const auto scaled = build_space("scaled", 6, 1, s.records(), {4, 4, 4, 4, 4});
  CHECK(lie_residuals(scaled).natural_reductivity < 1e-12);
  CHECK(scal_g(scaled) == doctest::Approx(scal_g(s) / 4));
}

TEST_CASE("so(N) basis validation") {
  CHECK_THROWS_AS(so_brackets(3, {{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(so_brackets(3, {{1, 2}, {1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(so_brackets(3, {{2, 1}, {1, 3}, {2, 3}}), std::invalid_argument);
}
