#pragma once

// Naturally reductive homogeneous spaces G/H from structure constants on an
// adapted basis g = h + m, and their canonical connection:
//   T(x, y, z) = -<[e_x, e_y]_m, e_z>,   R(x, y, z, v) = -<[[e_x, e_y]_h, e_z], e_v>.
// The torsion of the canonical connection is parallel, so these spaces are the
// source of curvature data with nabla T = 0 built in.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/curvature.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/structure_constants.hpp"

namespace spinlab {

inline constexpr double kLieTolerance = 1e-10;
inline constexpr double kGramTolerance = 1e-12;

struct BracketRecord {
  int i, j, k;  // [b_i, b_j] has coefficient `value` along b_k; 1-based over g
  double value;
};

class HomogeneousError : public std::domain_error {
 public:
  enum class Kind { input, jacobi, subalgebra, reductivity, natural_reductivity, metric, torsion };

  HomogeneousError(Kind kind, std::vector<int> witness, double residual, const std::string& what);
  Kind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }
  double residual() const { return residual_; }

 private:
  Kind kind_;
  std::vector<int> witness_;
  double residual_;
};

/// h is spanned by basis vectors 1..h_dim, m by h_dim+1..dim_g; the metric on
/// m is diagonal in that basis. After construction the m-basis is
/// orthonormal and `brackets()` refers to the rescaled basis.
class HomogeneousSpace {
 public:
  const std::string& name() const { return name_; }
  int dim_g() const { return brackets_.dim(); }
  int dim_h() const { return h_dim_; }
  /// n = dim m, the frame dimension.
  int dim() const { return dim_g() - h_dim_; }
  const std::vector<double>& metric_diag() const { return metric_; }
  const StructureConstants& brackets() const { return brackets_; }
  /// Input records, kept for export.
  const std::vector<BracketRecord>& records() const { return records_; }
  /// Max |<b_a, b_b> - delta_ab| over the orthonormalized m-basis.
  double gram_residual() const { return gram_residual_; }

  /// Matrix of ad(b_a)|_m on the orthonormal m-frame, a in 1..h_dim (0-based result).
  Eigen::MatrixXd isotropy(int a) const;

 private:
  friend HomogeneousSpace build_space(std::string, int, int, std::vector<BracketRecord>,
                                      std::vector<double>, double);
  std::string name_;
  int h_dim_ = 0;
  std::vector<double> metric_;
  std::vector<BracketRecord> records_;
  StructureConstants brackets_;
  double gram_residual_ = 0;
};

/// Builds and validates. `records` are completed by antisymmetry (a record
/// and its transpose must agree). An empty metric_diag means the identity.
/// Throws HomogeneousError naming a witness on Jacobi failure, [h, h] not in h,
/// [h, m] not in m, or a metric that is not naturally reductive.
HomogeneousSpace build_space(std::string name, int dim_g, int h_dim,
                             std::vector<BracketRecord> records,
                             std::vector<double> metric_diag = {}, double tol = kLieTolerance);

struct LieResiduals {
  double jacobi = 0;
  double subalgebra = 0;
  double reductivity = 0;
  double natural_reductivity = 0;
};

/// Worst residual of each defining condition (built spaces satisfy all < tol).
LieResiduals lie_residuals(const HomogeneousSpace& s);

Form canonical_torsion(const HomogeneousSpace& s, double tol = kLieTolerance);
AlgCurvature canonical_curvature(const HomogeneousSpace& s);

double scal_nabla(const HomogeneousSpace& s);
/// Scal^g = Scal^nabla + 3/2 |T|^2 for nabla = nabla^g + T/2.
double scal_g(const HomogeneousSpace& s);

/// Max over h-basis elements A of |T(ax, y, z) + T(x, ay, z) + T(x, y, az)|.
double torsion_invariance_residual(const HomogeneousSpace& s);
/// Same derivation test for R in all four slots.
double curvature_invariance_residual(const HomogeneousSpace& s);

/// so(N) on the basis E_ab (a < b), [E_ab, E_cd] from the matrix commutator of
/// E_ab = e_a e_b^T - e_b e_a^T.
struct SoBasisElement {
  int a, b;
  int sign = 1;  // basis vector is sign * E_ab
};

/// Records for so(N) on the listed ordered basis; the basis must span so(N).
std::vector<BracketRecord> so_brackets(int N, const std::vector<SoBasisElement>& basis);

}  // namespace spinlab
