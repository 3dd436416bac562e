#pragma once

// The verification pipeline behind `spinlab catalog run` and `spinlab analyze`:
// split type, Clifford action of T, sigma_T, curvature checks, homogeneous
// residuals and the eigenvalue bounds. Every intermediate is kept so that the
// report writers never recompute anything.

#include <optional>
#include <string>
#include <vector>

#include "spinlab/bounds.hpp"
#include "spinlab/clifford.hpp"
#include "spinlab/curvature.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/geometry_io.hpp"
#include "spinlab/splitting.hpp"

namespace spinlab {

struct AnalysisOptions {
  double tol = 1e-9;
  double cluster_tol = kClusterTolerance;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CliffordSection {
  int spinor_dim = 0;
  double self_adjoint_residual = 0;
  Spectrum spectrum;
  double square_identity_residual = 0;
  double projector_residual = 0;
};

struct CurvatureSection {
  std::string source;  // "explicit" or "homogeneous"
  SymmetryReport symmetry;
  double scal_nabla = 0;
  std::vector<double> partial_scal;
  std::vector<double> ricci_diagonal;
  std::optional<BlockReport> blocks;          // only for split-type torsion
  std::vector<Form> sigma_tilde;              // one per canonical block
  std::optional<double> sigma_sum_residual;   // |sum act(sigma~^i) - act(sigma_T)|
  BianchiComparison bianchi;
};

struct HomogeneousSection {
  std::string name;
  int dim_g = 0;
  int dim_h = 0;
  double gram_residual = 0;
  LieResiduals lie;
  double torsion_invariance = 0;
  double curvature_invariance = 0;
  double torsion_match = 0;  // max coefficient difference to the supplied torsion
  double scal_g = 0;
};

struct BoundsSection {
  std::optional<std::string> scal_source;  // unset when Scal^g_min is unavailable
  std::string mu2_source;
  BoundsInput<double> input;
  std::optional<BoundsReport<double>> report;
  std::vector<std::string> notes;  // structural notes, also when report is unset
};

struct AnalysisReport {
  std::string name;
  int n = 0;
  Partition partition;
  Form torsion;
  double norm2 = 0;
  Lambda3Decomposition<double> decomposition;
  bool split_type = false;
  CliffordSection clifford;
  Form sigma_t;
  std::optional<CurvatureSection> curvature;
  std::optional<HomogeneousSection> homogeneous;
  std::optional<double> reference_match;  // max |T - T_ref| coefficient
  std::optional<bool> reference_support_match;
  BoundsSection bounds;
  std::vector<Check> checks;
  std::vector<std::string> caveats;
  double tol = 0;

  bool passed() const;
};

/// Thrown for geometries that are well-formed JSON but not usable input
/// (e.g. curvature records that contradict each other).
class AnalysisInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

AnalysisReport analyze(const Geometry& g, const AnalysisOptions& opts = {});

}  // namespace spinlab
