// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance <path to spinlab executable> <golden directory>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spinlab/analysis.hpp"
#include "spinlab/bounds.hpp"
#include "spinlab/catalog.hpp"
#include "spinlab/clifford.hpp"
#include "spinlab/curvature.hpp"
#include "spinlab/homogeneous.hpp"
#include "spinlab/kernels.hpp"
#include "spinlab/splitting.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace spinlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Criterion 1.
Outcome nearly_kaehler() {
  Outcome o;
  const RationalForm t = RationalForm::from_terms(
      6, {{{2, 4, 5}, 1}, {{1, 4, 6}, 1}, {{2, 3, 6}, -1}, {{1, 3, 5}, 1}});
  o.require(norm2(t) == Rational(4), "norm2 != 4");
  const auto p = make_partition(6, {{1, 2}, {3, 4}, {5, 6}});
  const CliffordRep rep(6);
  const auto a = act(rep, t);
  o.require(adjoint_residual(a) < 1e-9, "act(T) not self-adjoint");
  const auto s = spectrum(a);
  const std::vector<double> expected{-4, 0, 4};
  const auto values = s.values();
  o.require(values.size() == 3, "spectrum has " + std::to_string(values.size()) + " values");
  for (std::size_t i = 0; i < std::min<std::size_t>(3, values.size()); ++i)
    o.require(std::abs(values[i] - expected[i]) < 1e-9, "eigenvalue " + std::to_string(values[i]));
  BoundsInput<double> in{6, p.largest_block_size(), 30.0, to_double(norm2(t)), s.squares(), 3};
  const auto split = beta_split(in);
  o.require(split && std::abs(*split - 4) < 1e-12, "beta_split != 4");
  o.require(std::abs(beta_univ(in) - 4) < 1e-12, "beta_univ != 4");
  o.detail = o.pass ? "spectrum {-4, 0, 4}, beta_split = beta_univ = 4" : o.detail;
  return o;
}

// Criterion 2.
Outcome split_predicates() {
  Outcome o;
  for (const auto* name : {"nk_F12", "stiefel_v2r4", "stiefel_v2r5"}) {
    const auto e = catalog_entry(name);
    o.require(is_split_type(*e.exact_torsion, e.partition), std::string(name) + " not split");
  }
  const auto bad = catalog_entry("nonsplit_example");
  o.require(!is_split_type(*bad.exact_torsion, bad.partition), "nonsplit_example reported split");
  if (o.pass) o.detail = "nk_F12, stiefel_v2r4, stiefel_v2r5 split; nonsplit_example not";
  return o;
}

// Criterion 3.
Outcome clifford_properties() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  double worst_anti = 0, worst_parity = 0, worst_square = 0;
  int count = 0;
  for (int n = 4; n <= 8; ++n) {
    const CliffordRep rep(n);
    worst_anti = std::max(worst_anti, anticommutator_residual(rep));
    std::vector<Form> forms;
    for (int i = 0; i < 250; ++i) forms.push_back(oracle::random_form(rng, n, 3, 8));
    count += static_cast<int>(forms.size());
    for (double r : kernels::adjoint_parity_residuals(rep, forms)) worst_parity = std::max(worst_parity, r);
    for (double r : kernels::square_identity_residuals(rep, forms)) worst_square = std::max(worst_square, r);
    std::vector<Form> kforms;
    for (int k = 1; k <= n; ++k)
      for (int i = 0; i < 10; ++i) kforms.push_back(oracle::random_form(rng, n, k, 5));
    for (double r : kernels::adjoint_parity_residuals(rep, kforms)) worst_parity = std::max(worst_parity, r);
  }
  o.require(worst_anti < 1e-9, "anticommutator " + sci(worst_anti));
  o.require(worst_parity < 1e-9, "adjoint parity " + sci(worst_parity));
  o.require(worst_square < 1e-9, "square identity " + sci(worst_square));
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count) + " random 3-forms, worst residuals " +
              sci(worst_anti) + " / " + sci(worst_parity) + " / " + sci(worst_square);
  return o;
}

// Criterion 4.
Outcome sigma_reproduction() {
  Outcome o;
  std::vector<double> constants;
  for (const auto* name : {"stiefel_v2r4", "stiefel_v2r5"}) {
    const auto e = catalog_entry(name);
    const auto& space = std::get<HomogeneousSpace>(e.curvature_source);
    const auto r = canonical_curvature(space);
    const CliffordRep rep(e.n);
    Form total(e.n);
    for (int i = 1; i <= e.partition.block_count(); ++i) total += sigma_tilde(r, e.partition, i);
    const auto sigma = sigma_T(e.torsion);
    const double res = (act(rep, total).matrix - act(rep, sigma).matrix).cwiseAbs().maxCoeff();
    o.require(res < 1e-9, std::string(name) + " sum sigma~ residual " + sci(res));
    o.require(block_checks(r, e.partition, 1e-9).pass(), std::string(name) + " block checks");
    const auto b = compare_bianchi(bianchi_cyclic(r), sigma, kBianchiConstant, 1e-9);
    o.require(b.consistent(), std::string(name) + " Bianchi residual " + sci(b.residual));
    constants.push_back(b.fitted_constant);
  }
  o.require(std::abs(constants[0] - constants[1]) < 1e-9, "Bianchi constants differ");
  if (o.pass) o.detail = "both Stiefel entries; Bianchi constant c = " + std::to_string(constants[0]);
  return o;
}

// Criterion 5.
Outcome degeneration() {
  Outcome o;
  for (int n = 4; n <= 10; ++n)
    for (int s : {-12, 0, 1, 7, 30, 144}) {
      const BoundsInput<Rational> in{n, n, Rational(s), Rational(0), {Rational(0)}, 1};
      const Rational friedrich = Rational(n, 4 * (n - 1)) * Rational(s);
      const auto split = beta_split(in), tw = beta_tw(in);
      o.require(split && *split == friedrich, "beta_split at n=" + std::to_string(n));
      o.require(tw && *tw == friedrich, "beta_tw at n=" + std::to_string(n));
      o.require(beta_univ(in) == Rational(s) / Rational(4), "beta_univ at n=" + std::to_string(n));
    }
  if (o.pass) o.detail = "n = 4..10, exact";
  return o;
}

// Criterion 6.
Outcome homogeneous_validity() {
  Outcome o;
  const std::vector<std::pair<std::string, std::set<Multiindex>>> patterns{
      {"stiefel_v2r4", {{1, 3, 5}, {2, 4, 5}}},
      {"stiefel_v2r5", {{1, 4, 7}, {2, 5, 7}, {3, 6, 7}}},
  };
  double worst = 0;
  for (const auto& [name, pattern] : patterns) {
    const auto e = catalog_entry(name);
    const auto& s = std::get<HomogeneousSpace>(e.curvature_source);
    const auto lie = lie_residuals(s);
    for (double r : {lie.jacobi, lie.reductivity, lie.subalgebra, lie.natural_reductivity,
                     torsion_invariance_residual(s), curvature_invariance_residual(s)}) {
      worst = std::max(worst, r);
      o.require(r < 1e-10, name + " residual " + sci(r));
    }
    std::set<Multiindex> support;
    const auto torsion = canonical_torsion(s);
    for (const auto& [idx, c] : torsion.terms()) support.insert(idx);
    o.require(support == pattern, name + " torsion support differs (frame: " + e.frame_labels + ")");
  }
  if (o.pass) o.detail = "worst residual " + sci(worst) + ", torsion supports {135,245} and {147,257,367}";
  return o;
}

// Criterion 7.
struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome cli_contract(const std::string& exe, const fs::path& golden) {
  Outcome o;
  const auto tmp = fs::temp_directory_path() / ("spinlab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(tmp / name) << text;
    return "'" + (tmp / name).string() + "'";
  };
  const std::string q = "'" + exe + "'";

  const auto table1 = run(q + " catalog run nk_F12");
  const auto table2 = run(q + " catalog run nk_F12");
  o.require(table1.code == 0, "catalog run nk_F12 exit " + std::to_string(table1.code));
  o.require(table1.out == table2.out, "table output not byte-stable");
  o.require(table1.out == read_file(golden / "nk_F12.txt"), "table differs from golden");
  for (const auto* needle : {"β_split = 4", "μ ∈ {-4, 0, 4}", "split-type: yes"})
    o.require(table1.out.find(needle) != std::string::npos, std::string("missing '") + needle + "'");

  const auto json1 = run(q + " catalog run nk_F12 --format json");
  const auto json2 = run(q + " catalog run nk_F12 --format json");
  o.require(json1.code == 0 && json1.out == json2.out, "JSON output not byte-stable");
  o.require(json1.out == read_file(golden / "nk_F12.json"), "JSON differs from golden");
  const auto exported = run(q + " catalog export nk_F12");
  const auto file = write("nk_F12.json", exported.out);
  const auto analyzed = run(q + " analyze " + file + " --format json");
  o.require(analyzed.code == 0 && analyzed.out == json1.out, "analyze(export) differs from run");

  o.require(run(q + " catalog list").code == 0, "catalog list");
  o.require(run(q + " catalog run nonsplit_example").out.find("split-type: no") != std::string::npos,
            "nonsplit_example");
  o.require(run(q + " catalog run nonsplit_example").code == 0, "nonsplit_example exit");
  o.require(run(q + " catalog run stiefel_v2r4").out.find("Σσ̃ⁱ = σ_T: pass") != std::string::npos,
            "stiefel_v2r4 sigma line");
  o.require(run(q + " catalog run no_such_entry").code == 2, "unknown entry exit");
  o.require(run(q + " analyze " + write("bad.json", R"({"n": 3, "partition": [[1,2,3]]})")).code == 2,
            "schema error exit");
  o.require(run(q + " analyze '" + (tmp / "missing.json").string() + "'").code == 2, "missing file exit");
  const auto failing = write(
      "fail.json",
      R"({"n": 3, "partition": [[1,2],[3]], "torsion": [{"indices": [1,2,3], "value": 1}],
          "scalars": {"t_norm2": 2}})");
  o.require(run(q + " analyze " + failing).code == 1, "failed assertion exit");
  o.require(run(q + " bounds --n 6 --nk 2").code == 2, "missing bounds flag exit");
  const auto bounds = run(q + " bounds --n 6 --nk 2 --scal 30 --t2 4 --mu2 0,16");
  o.require(bounds.code == 0 && bounds.out.find("β_split = 4") != std::string::npos &&
                bounds.out.find("β_univ = 4") != std::string::npos &&
                bounds.out.find("β_tw = 4") != std::string::npos,
            "bounds example");
  fs::remove_all(tmp);
  if (o.pass) o.detail = "exit codes 0/1/2, golden table and JSON, round-trip, byte-stable";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <spinlab executable> <golden directory>\n";
    return 2;
  }
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::string exe = argv[1];
  const fs::path golden = argv[2];
  const std::vector<Criterion> criteria{
      {1, "nearly Kaehler golden test", 1.0, nearly_kaehler},
      {2, "split-type predicates", 0.1, split_predicates},
      {3, "Clifford property suite", 30.0, clifford_properties},
      {4, "sum of block sigma terms equals sigma_T", 5.0, sigma_reproduction},
      {5, "bounds degeneration", 10.0, degeneration},
      {6, "homogeneous validity suite", 10.0, homogeneous_validity},
      {7, "CLI contract", 60.0, [&] { return cli_contract(exe, golden); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) o.require(false, "runtime over budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing
              << ") " << o.detail << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
