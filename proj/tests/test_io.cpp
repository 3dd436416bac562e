#include <doctest.h>

#include "spinlab/analysis.hpp"
#include "spinlab/catalog.hpp"
#include "spinlab/geometry_io.hpp"
#include "spinlab/homogeneous.hpp"
#include "spinlab/report.hpp"

using namespace spinlab;

namespace {

std::string pointer_of(const std::string& text) {
  try {
    parse_geometry_text(text);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

const char* kMinimal = R"({"n": 3, "partition": [[1,2],[3]], "torsion": [{"indices": [1,2,3], "value": 1}]})";

}  // namespace

TEST_CASE("a minimal geometry parses") {
  const auto g = parse_geometry_text(kMinimal);
  CHECK(g.n == 3);
  CHECK(g.torsion == Form::monomial(3, {1, 2, 3}));
  CHECK_FALSE(g.curvature.has_value());
}

TEST_CASE("schema violations name the offending JSON pointer") {
  CHECK(pointer_of("{") == "");
  CHECK(pointer_of("[]") == "");
  CHECK(pointer_of(R"({"partition": [[1]], "torsion": []})") == "/n");
  CHECK(pointer_of(R"({"n": 60, "partition": [[1]], "torsion": []})") == "/n");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[3]], "torsion": [{"indices": [2,1,3], "value": 1}]})") ==
        "/torsion/0/indices");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[3]], "torsion": [{"indices": [1,2,4], "value": 1}]})") ==
        "/torsion/0/indices/2");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[3]], "torsion": [{"indices": [1,2,3]}]})") ==
        "/torsion/0/value");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[2,3]], "torsion": []})") == "/partition/1/0");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2]], "torsion": []})") == "/partition");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[3]], "torsion": [], "extra": 1})") == "/extra");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[3]], "torsion": [], "scalars": {"mu2_list": [1, -2]}})") ==
        "/scalars/mu2_list/1");
  CHECK(pointer_of(R"({"n": 3, "partition": [[1,2],[3]], "torsion": [],
                       "curvature": [{"indices": [1,2,3], "value": 1}]})") == "/curvature/0/indices");
  CHECK(pointer_of(R"({"n": 2, "partition": [[1,2]], "torsion": [],
                       "homogeneous": {"h_dim": 1, "brackets": [{"i": 1, "j": 2, "k": 4, "value": 1}]}})") ==
        "/homogeneous/brackets/0/k");
  CHECK(pointer_of(R"({"n": 2, "partition": [[1,2]], "torsion": [], "curvature": [],
                       "homogeneous": {"h_dim": 0, "brackets": []}})") == "/homogeneous");
}

TEST_CASE("catalog entries round-trip through the geometry schema") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto g = to_geometry(catalog_entry(name));
    const auto text = dump_json(geometry_to_json(g));
    const auto back = parse_geometry_text(text);
    CHECK(dump_json(geometry_to_json(back)) == text);
    CHECK(back.torsion == g.torsion);
    CHECK(dump_json(report_json(analyze(back))) == dump_json(report_json(analyze(g))));
  }
}

TEST_CASE("floats are written with 17 significant digits") {
  Json j = Json::object();
  j["x"] = 0.1;
  j["y"] = 2.0;
  j["z"] = 3;
  CHECK(dump_json(j, -1) == R"({"x":0.10000000000000001,"y":2,"z":3})");
  const auto back = nlohmann::json::parse(dump_json(j));
  CHECK(back["x"].get<double>() == 0.1);
}

TEST_CASE("explicit curvature gives the same analysis as the homogeneous source") {
  const auto e = catalog_entry("stiefel_v2r4");
  const auto& space = std::get<HomogeneousSpace>(e.curvature_source);
  const auto r = canonical_curvature(space);
  Geometry g = to_geometry(e);
  g.homogeneous.reset();
  std::vector<CurvatureRecord> recs;
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q)
      for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
          if (r(p, q, a, b) != 0.0) recs.push_back({p, q, a, b, r(p, q, a, b)});
  g.curvature = recs;
  const auto rep = analyze(g);
  CHECK(rep.passed());
  REQUIRE(rep.curvature.has_value());
  CHECK(rep.curvature->scal_nabla == doctest::Approx(4.0));
  CHECK(*rep.curvature->sigma_sum_residual < 1e-12);
  // Scal^g from the tensor matches the homogeneous value.
  CHECK(rep.bounds.input.scal_g_min == doctest::Approx(7.0));
}

TEST_CASE("inconsistent user data fails a check or is rejected as input") {
  auto g = parse_geometry_text(kMinimal);
  g.curvature = std::vector<CurvatureRecord>{{1, 2, 1, 2, 1.0}, {2, 1, 2, 1, 3.0}};
  CHECK_THROWS_AS(analyze(g), AnalysisInputError);

  // Torsion that does not match the homogeneous brackets.
  auto s = to_geometry(catalog_entry("stiefel_v2r4"));
  s.torsion = Form::from_terms(5, {{{1, 3, 5}, 1.0}, {{2, 4, 5}, -1.0}});
  s.reference_torsion.reset();
  const auto rep = analyze(s);
  CHECK_FALSE(rep.passed());

  // Given |T|^2 that disagrees with the form.
  auto nk = to_geometry(catalog_entry("nk_F12"));
  nk.scalars->t_norm2 = 5.0;
  CHECK_FALSE(analyze(nk).passed());
}

TEST_CASE("n = 3 reports beta_tw as undefined") {
  auto g = parse_geometry_text(kMinimal);
  const auto plain = report_json(analyze(g));
  CHECK(plain["bounds"]["beta_tw_status"] == "undefined (n=3)");
  g.scalars = GivenScalars{6.0, std::nullopt, std::nullopt, "test"};
  const auto rep = analyze(g);
  REQUIRE(rep.bounds.report.has_value());
  CHECK_FALSE(rep.bounds.report->beta_tw.has_value());
  CHECK(report_json(rep)["bounds"]["beta_tw_status"] == "undefined (n=3)");
  CHECK(report_table(rep).find("β_tw = undefined (n=3)") != std::string::npos);
}
