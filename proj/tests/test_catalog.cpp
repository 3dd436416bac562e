#include <doctest.h>

#include "spinlab/analysis.hpp"
#include "spinlab/catalog.hpp"
#include "spinlab/clifford.hpp"
#include "spinlab/homogeneous.hpp"

using namespace spinlab;

TEST_CASE("catalog lists the mandatory entries") {
  const auto names = catalog_names();
  for (const auto* n : {"nk_F12", "nk_CP3", "stiefel_v2r4", "stiefel_v2r5", "flat_trivial", "nonsplit_example"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(catalog_entry("missing"), UnknownEntry);
}

TEST_CASE("nk_F12 data") {
  const auto e = catalog_entry("nk_F12");
  CHECK(e.n == 6);
  CHECK(to_string(e.partition) == "{1,2|3,4|5,6}");
  CHECK(*e.exact_torsion == nearly_kaehler_torsion());
  CHECK(e.extras.at("Omega") ==
        RationalForm::from_terms(6, {{{1, 2}, 1}, {{3, 4}, -1}, {{5, 6}, 1}}));
  REQUIRE(e.given.has_value());
  CHECK(*e.given->scal_g_min == 30.0);
  CHECK(*e.given->t_norm2 == norm2(e.torsion));
}

TEST_CASE("nk_CP3 carries the same algebraic data") {
  const auto a = catalog_entry("nk_F12"), b = catalog_entry("nk_CP3");
  CHECK(a.torsion == b.torsion);
  CHECK(a.partition == b.partition);
  CHECK(a.extras.at("Omega") == b.extras.at("Omega"));
}

TEST_CASE("Stiefel entries: shape and reference torsion") {
  const auto a = catalog_entry("stiefel_v2r4");
  CHECK(a.n == 5);
  CHECK(a.blocks == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
  CHECK(*a.exact_torsion == *a.reference_torsion);
  const auto b = catalog_entry("stiefel_v2r5");
  CHECK(b.n == 7);
  CHECK(b.blocks == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7}});
  CHECK(*b.exact_torsion == *b.reference_torsion);
  CHECK(!b.frame_labels.empty());
}

TEST_CASE("every entry satisfies its invariants") {
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    CAPTURE(name);
    CHECK(e.torsion.dim() == e.n);
    CHECK(e.partition.dim() == e.n);
    if (e.given && e.given->t_norm2) CHECK(*e.given->t_norm2 == norm2(e.torsion));
    if (const auto* h = std::get_if<HomogeneousSpace>(&e.curvature_source)) {
      CHECK(is_split_type(e.torsion, e.partition));
      const auto r = canonical_curvature(*h);
      CHECK(block_checks(r, e.partition).pass());
      CHECK(torsion_invariance_residual(*h) < 1e-12);
    }
  }
}

TEST_CASE("pipeline on every entry reproduces the reference values") {
  struct Expect {
    const char* name;
    std::vector<double> eigenvalues;
    double beta_split, beta_univ, beta_tw;
  };
  const std::vector<Expect> table{
      {"nk_F12", {-4, 0, 4}, 4, 4, 4},
      {"stiefel_v2r4", {-2, 0, 2}, 1, 1, 15.0 / 16},
      {"stiefel_v2r5", {-1, 3}, 2.25, 2.25, 2.1875},
      {"flat_trivial", {0}, 0, 0, 0},
  };
  for (const auto& x : table) {
    CAPTURE(x.name);
    const auto rep = analyze(to_geometry(catalog_entry(x.name)));
    CHECK(rep.passed());
    const auto values = rep.clifford.spectrum.values();
    REQUIRE(values.size() == x.eigenvalues.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      CHECK(values[i] == doctest::Approx(x.eigenvalues[i]).epsilon(1e-10));
    REQUIRE(rep.bounds.report.has_value());
    CHECK(*rep.bounds.report->beta_split == doctest::Approx(x.beta_split).epsilon(1e-12));
    CHECK(rep.bounds.report->beta_univ == doctest::Approx(x.beta_univ).epsilon(1e-12));
    CHECK(*rep.bounds.report->beta_tw == doctest::Approx(x.beta_tw).epsilon(1e-12));
  }
}

TEST_CASE("nonsplit example analyses cleanly") {
  const auto rep = analyze(to_geometry(catalog_entry("nonsplit_example")));
  CHECK_FALSE(rep.split_type);
  CHECK(rep.passed());
  CHECK_FALSE(rep.bounds.report.has_value());
}
