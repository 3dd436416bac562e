// spinlab: command-line front end.
//
//   spinlab catalog list
//   spinlab catalog run <name>     [--format table|json] [--tol t]
//   spinlab catalog export <name>  (geometry JSON on stdout)
//   spinlab analyze <file>         [--format table|json] [--tol t]
//   spinlab bounds --n N --nk K --scal S --t2 T --mu2 a,b,...  [--format table|json]
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinlab/analysis.hpp"
#include "spinlab/bounds.hpp"
#include "spinlab/catalog.hpp"
#include "spinlab/geometry_io.hpp"
#include "spinlab/homogeneous.hpp"
#include "spinlab/report.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

int emit(const spinlab::AnalysisReport& rep, const std::string& format) {
  if (format == "json")
    std::cout << spinlab::dump_json(spinlab::report_json(rep)) << '\n';
  else
    std::cout << spinlab::report_table(rep);
  return rep.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinlab: spinor algebra checks for split holonomy with parallel torsion"};
  app.require_subcommand(1);

  std::string format = "table";
  double tol = 1e-9;
  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--tol", tol, "Tolerance for floating-point assertions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* catalog = app.add_subcommand("catalog", "Built-in example geometries");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  std::string entry_name;
  auto* run = catalog->add_subcommand("run", "Run the verification pipeline on an entry");
  run->add_option("name", entry_name, "Entry name")->required();
  add_output_flags(run);
  auto* exp = catalog->add_subcommand("export", "Print an entry as a geometry file");
  exp->add_option("name", entry_name, "Entry name")->required();

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Run the verification pipeline on a geometry file");
  analyze->add_option("file", path, "Geometry JSON file")->required();
  add_output_flags(analyze);

  spinlab::BoundsInput<double> bin;
  std::vector<double> mu2;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the eigenvalue bounds");
  bounds->add_option("--n", bin.n, "Manifold dimension")->required();
  bounds->add_option("--nk", bin.largest_block, "Largest block dimension n_k")->required();
  bounds->add_option("--scal", bin.scal_g_min, "Scal^g_min")->required();
  bounds->add_option("--t2", bin.t_norm2, "|T|^2")->required();
  bounds->add_option("--mu2", mu2, "Squared eigenvalues of T, comma separated")
      ->required()
      ->delimiter(',');
  bounds->add_option("--k", bin.block_count, "Number of blocks (optional)");
  bounds->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  const spinlab::AnalysisOptions opts{tol};
  try {
    if (*list) {
      for (const auto& name : spinlab::catalog_names())
        std::cout << name << "  " << spinlab::catalog_entry(name).description << '\n';
      return kPass;
    }
    if (*run) return emit(spinlab::analyze(spinlab::to_geometry(spinlab::catalog_entry(entry_name)), opts), format);
    if (*exp) {
      const auto g = spinlab::to_geometry(spinlab::catalog_entry(entry_name));
      std::cout << spinlab::dump_json(spinlab::geometry_to_json(g)) << '\n';
      return kPass;
    }
    if (*analyze) {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "spinlab: cannot read " << path << '\n';
        return kInputError;
      }
      std::ostringstream text;
      text << in.rdbuf();
      return emit(spinlab::analyze(spinlab::parse_geometry_text(text.str()), opts), format);
    }
    if (*bounds) {
      bin.mu2_list = mu2;
      const auto rep = spinlab::compare(bin);
      if (format == "json")
        std::cout << spinlab::dump_json(spinlab::bounds_json(bin, rep)) << '\n';
      else
        std::cout << spinlab::bounds_table(bin, rep);
      return kPass;
    }
  } catch (const spinlab::SchemaError& e) {
    std::cerr << "spinlab: schema error: " << e.what() << '\n';
    return kInputError;
  } catch (const spinlab::UnknownEntry& e) {
    std::cerr << "spinlab: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "spinlab: invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "spinlab: internal assertion failed: " << e.what() << '\n';
    return kFail;
  }
  return kInputError;
}
