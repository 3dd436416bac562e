#pragma once

// Algebraic curvature tensors R(p, q, r, s) = g(R(e_p, e_q) e_r, e_s) of a
// metric connection with parallel skew torsion.
//
// Conventions: frame indices are 1-based. Ric(q, s) = sum_p R(e_p, e_q, e_s, e_p),
// so Scal is positive on round spheres and the first Bianchi identity for
// parallel torsion reads  cyclic_{x,y,z} R(x, y, z, v) = sigma_T(x, y, z, v).

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/exterior.hpp"
#include "spinlab/splitting.hpp"

namespace spinlab {

inline constexpr double kSymmetryTolerance = 1e-10;

/// Constant c in  cyclic R = c * sigma_T  under our evaluation normalization.
inline constexpr double kBianchiConstant = 1.0;

/// Dense n^4 array with 1-based indexing.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {
    if (n < 1) throw std::invalid_argument("empty frame");
  }

  int dim() const { return n_; }
  double& operator()(int p, int q, int r, int s) { return data_[offset(p, q, r, s)]; }
  double operator()(int p, int q, int r, int s) const { return data_[offset(p, q, r, s)]; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double max_abs() const;
  double max_abs_difference(const Tensor4& other) const;

  friend bool operator==(const Tensor4&, const Tensor4&) = default;

 private:
  std::size_t offset(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p - 1) * n_ + (q - 1)) * n_ + (r - 1)) * n_ + (s - 1);
  }
  int n_ = 0;
  std::vector<double> data_;
};

/// 4-form evaluated on all index quadruples.
Tensor4 form_tensor(const Form& alpha);

struct SymmetryReport {
  double first_pair_antisymmetry = 0;   // |R(p,q,..) + R(q,p,..)|
  double second_pair_antisymmetry = 0;  // |R(..,r,s) + R(..,s,r)|
  double pair_symmetry = 0;             // |R(p,q,r,s) - R(r,s,p,q)|
  double tolerance = kSymmetryTolerance;

  double worst() const;
  bool pass() const { return worst() < tolerance; }
};

SymmetryReport validate(const Tensor4& coeffs, double tol = kSymmetryTolerance);

class InvalidCurvature : public std::domain_error {
 public:
  explicit InvalidCurvature(const SymmetryReport& report);
  const SymmetryReport& report() const { return report_; }

 private:
  SymmetryReport report_;
};

/// Curvature tensor that has passed `validate`. Derived operations only
/// accept this type.
class AlgCurvature {
 public:
  static AlgCurvature validated(Tensor4 coeffs, double tol = kSymmetryTolerance);
  static AlgCurvature zero(int n) { return validated(Tensor4(n)); }

  int dim() const { return coeffs_.dim(); }
  double operator()(int p, int q, int r, int s) const { return coeffs_(p, q, r, s); }
  const Tensor4& coeffs() const { return coeffs_; }
  const SymmetryReport& report() const { return report_; }

 private:
  AlgCurvature(Tensor4 c, SymmetryReport r) : coeffs_(std::move(c)), report_(r) {}
  Tensor4 coeffs_;
  SymmetryReport report_;
};

struct CurvatureRecord {
  int p, q, r, s;
  double value;
};

/// Fills every slot related to each record by the antisymmetries and pair
/// symmetry. Throws std::invalid_argument when two records disagree on a slot
/// (beyond tol) or name an index outside 1..n.
Tensor4 complete_from_records(int n, const std::vector<CurvatureRecord>& records,
                              double tol = kSymmetryTolerance);

/// Ric(q, s) = sum_p R(p, q, s, p); 0-based Eigen matrix.
Eigen::MatrixXd ricci(const AlgCurvature& r);
double scal(const AlgCurvature& r);
/// Scal_i = trace of Ric over block i (canonical block order).
std::vector<double> partial_scal(const AlgCurvature& r, const Partition& p);

struct BlockReport {
  double second_pair_cross = 0;  // max |R(., ., r, s)|, r and s in different blocks
  double first_pair_cross = 0;   // max |R(p, q, ., .)|, p and q in different blocks
  double ricci_cross = 0;        // max |Ric(q, s)|, q and s in different blocks
  /// max |R(x, y, u, v)| with x, y in T_i and u, v in T_j, i != j. Informational:
  /// this need not vanish.
  double cross_pair_blocks = 0;
  double tolerance = kSymmetryTolerance;

  bool pass() const {
    return second_pair_cross < tolerance && first_pair_cross < tolerance &&
           ricci_cross < tolerance;
  }
};

BlockReport block_checks(const AlgCurvature& r, const Partition& p,
                         double tol = kSymmetryTolerance);

/// Block-i 4-form: 1/2 sum R(a, b, p, q) e_a e_b e_p e_q over a < b in block i,
/// p < q arbitrary and {a, b, p, q} four distinct indices. The remaining
/// (repeated-index) summands contribute the scalar Scal_i / 4.
Form sigma_tilde(const AlgCurvature& r, const Partition& p, int block);

/// B(x, y, z, v) = R(x, y, z, v) + R(y, z, x, v) + R(z, x, y, v).
Tensor4 bianchi_cyclic(const AlgCurvature& r);

struct BianchiComparison {
  double fitted_constant = 0;  // least-squares c with B ~ c * sigma
  double residual = 0;         // max |B - expected_constant * sigma|
  double alternation_defect = 0;  // max |B(x,y,z,v) + B(x,y,v,z)|
  double tolerance = 1e-9;

  bool consistent() const { return residual < tolerance && alternation_defect < tolerance; }
};

BianchiComparison compare_bianchi(const Tensor4& cyclic, const Form& sigma,
                                  double expected_constant = kBianchiConstant,
                                  double tol = 1e-9);

}  // namespace spinlab
