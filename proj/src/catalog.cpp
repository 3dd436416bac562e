#include "spinlab/catalog.hpp"

#include <functional>

namespace spinlab {

RationalForm nearly_kaehler_torsion() {
  return RationalForm::from_terms(
      6, {{{2, 4, 5}, 1}, {{1, 4, 6}, 1}, {{2, 3, 6}, -1}, {{1, 3, 5}, 1}});
}

HomogeneousSpace stiefel_space(int N) {
  if (N < 3) throw std::invalid_argument("stiefel_space: need N >= 3");
  std::vector<SoBasisElement> basis;
  for (int a = 3; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) basis.push_back({a, b});
  const int h_dim = static_cast<int>(basis.size());
  for (int j = 3; j <= N; ++j) basis.push_back({1, j});
  for (int j = 3; j <= N; ++j) basis.push_back({2, j});
  // E_21 = -E_12 orients the last frame vector so that T = -sum_a e_{a, a+N-2, n}.
  basis.push_back({1, 2, -1});
  const int dim_g = static_cast<int>(basis.size());
  return build_space("V2(R^" + std::to_string(N) + ")", dim_g, h_dim, so_brackets(N, basis));
}

namespace {

CatalogEntry nk_entry(std::string name, std::string description) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.n = 6;
  e.blocks = {{1, 2}, {3, 4}, {5, 6}};
  e.partition = make_partition(e.n, e.blocks);
  e.exact_torsion = nearly_kaehler_torsion();
  e.torsion = e.exact_torsion->to_real();
  e.frame_labels = "T_1 = <e1,e2>, T_2 = <e3,e4>, T_3 = <e5,e6>";
  e.given = GivenScalars{30.0, 4.0, std::nullopt,
                         "nearly Kaehler identities: Scal^g = 30, |T|^2 = 4"};
  e.extras.emplace("Omega", RationalForm::from_terms(6, {{{1, 2}, 1}, {{3, 4}, -1}, {{5, 6}, 1}}));
  return e;
}

CatalogEntry stiefel_entry(int N) {
  CatalogEntry e;
  const auto space = stiefel_space(N);
  const int half = N - 2;  // dimension of each isotropy-irreducible block
  e.n = space.dim();
  e.name = N == 4 ? "stiefel_v2r4" : "stiefel_v2r5";
  e.description = "Stiefel manifold V_2(R^" + std::to_string(N) + ") = SO(" + std::to_string(N) +
                  ")/SO(" + std::to_string(N - 2) + "), normal metric, canonical connection";
  std::vector<int> first, second;
  for (int a = 1; a <= half; ++a) {
    first.push_back(a);
    second.push_back(half + a);
  }
  e.blocks = {first, second, {e.n}};
  e.partition = make_partition(e.n, e.blocks);
  e.torsion = canonical_torsion(space);
  e.exact_torsion = exact_form(e.torsion);

  RationalForm reference(e.n);
  for (int a = 1; a <= half; ++a) reference.add_term({a, half + a, e.n}, -1);
  e.reference_torsion = reference;

  std::string labels;
  for (int j = 3; j <= N; ++j) labels += "e" + std::to_string(j - 2) + "=E1" + std::to_string(j) + " ";
  for (int j = 3; j <= N; ++j)
    labels += "e" + std::to_string(half + j - 2) + "=E2" + std::to_string(j) + " ";
  labels += "e" + std::to_string(e.n) + "=E21";
  e.frame_labels = labels;
  e.curvature_source = space;
  return e;
}

CatalogEntry flat_entry() {
  CatalogEntry e;
  e.name = "flat_trivial";
  e.description = "flat R^4 (abelian Lie algebra, trivial isotropy), T = 0, one block";
  e.n = 4;
  e.blocks = {{1, 2, 3, 4}};
  e.partition = make_partition(e.n, e.blocks);
  e.exact_torsion = RationalForm(e.n);
  e.torsion = Form(e.n);
  e.curvature_source = build_space("R^4", 4, 0, {});
  return e;
}

CatalogEntry nonsplit_entry() {
  CatalogEntry e;
  e.name = "nonsplit_example";
  e.description = "T = e_123 with blocks {1,2 | 3}: not of split type";
  e.n = 3;
  e.blocks = {{1, 2}, {3}};
  e.partition = make_partition(e.n, e.blocks);
  e.exact_torsion = RationalForm::monomial(3, {1, 2, 3});
  e.torsion = e.exact_torsion->to_real();
  return e;
}

const std::vector<std::pair<std::string, std::function<CatalogEntry()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<CatalogEntry()>>> entries = {
      {"nk_F12",
       [] { return nk_entry("nk_F12", "nearly Kaehler flag manifold F(1,2) = U(3)/U(1)^3"); }},
      {"nk_CP3",
       [] {
         return nk_entry("nk_CP3",
                         "nearly Kaehler CP^3; same algebraic data as nk_F12 at this level");
       }},
      {"stiefel_v2r4", [] { return stiefel_entry(4); }},
      {"stiefel_v2r5", [] { return stiefel_entry(5); }},
      {"flat_trivial", flat_entry},
      {"nonsplit_example", nonsplit_entry},
  };
  return entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  for (const auto& [key, make] : registry())
    if (key == name) return make();
  throw UnknownEntry(name);
}

}  // namespace spinlab
