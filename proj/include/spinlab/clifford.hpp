#pragma once

// Complex matrix realization of Cl(n) on the spinor module of dimension
// 2^floor(n/2), with the spin-geometry convention e_i e_j + e_j e_i = -2 delta_ij.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/exterior.hpp"

namespace spinlab {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kClusterTolerance = 1e-8;
/// Largest frame dimension with a dense spinor representation (4096 x 4096).
inline constexpr int kMaxFrameDim = 25;

class NotSelfAdjoint : public std::domain_error {
 public:
  explicit NotSelfAdjoint(double residual)
      : std::domain_error("endomorphism is not self-adjoint (residual " +
                          std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class CliffordRep {
 public:
  /// Jordan-Wigner construction from Pauli blocks. For odd n the last
  /// generator is volume_sign * i * (Z x ... x Z); for even n volume_sign is
  /// ignored and stored as +1.
  explicit CliffordRep(int n, int volume_sign = 1);

  int dim() const { return n_; }
  int spinor_dim() const { return spinor_dim_; }
  int volume_sign() const { return volume_sign_; }
  /// Generator e_i, 1-based.
  const ComplexMatrix& generator(int i) const;
  const std::vector<ComplexMatrix>& generators() const { return generators_; }

  /// Ordered product e_{p1} ... e_{pk}.
  ComplexMatrix product(const Multiindex& indices) const;
  ComplexMatrix identity() const { return ComplexMatrix::Identity(spinor_dim_, spinor_dim_); }

 private:
  int n_;
  int spinor_dim_;
  int volume_sign_;
  std::vector<ComplexMatrix> generators_;
};

inline CliffordRep build_rep(int n, int volume_sign = 1) { return CliffordRep(n, volume_sign); }

/// Max over i, j of |e_i e_j + e_j e_i + 2 delta_ij Id|.
double anticommutator_residual(const CliffordRep& rep);
/// Max over i of |e_i^* + e_i|.
double skew_adjoint_residual(const CliffordRep& rep);

struct SpinEndo {
  ComplexMatrix matrix;
  std::string origin;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Max entry of |A - A^*|.
double adjoint_residual(const SpinEndo& endo);
/// Max entry of |A + A^*|.
double skew_residual(const SpinEndo& endo);

template <typename S>
SpinEndo act(const CliffordRep& rep, const BasicForm<S>& form, std::string origin = {}) {
  if (form.dim() != rep.dim()) throw DimensionMismatch(rep.dim(), form.dim());
  ComplexMatrix m = ComplexMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
  for (const auto& [idx, c] : form.terms()) m += to_double(c) * rep.product(idx);
  if (origin.empty()) origin = to_string(form);
  return {std::move(m), std::move(origin)};
}

/// act(T) * act(T) for a 3-form T.
template <typename S>
SpinEndo torsion_square(const CliffordRep& rep, const BasicForm<S>& t) {
  if (!t.has_degree(3)) throw std::invalid_argument("torsion_square: torsion must be a 3-form");
  SpinEndo a = act(rep, t);
  return {a.matrix * a.matrix, "(" + a.origin + ")^2"};
}

struct Eigenvalue {
  double value;
  int multiplicity;
};

struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;  // ascending
  double tolerance = kClusterTolerance;

  int total_multiplicity() const;
  std::vector<double> values() const;
  std::vector<double> squares() const;
};

/// Real spectrum of a self-adjoint endomorphism, clustered at `tol`.
Spectrum spectrum(const SpinEndo& endo, double tol = kClusterTolerance);

struct EigenProjector {
  double value;
  int multiplicity;
  SpinEndo projector;
};

/// Orthogonal projectors onto the eigenspaces, ordered by ascending eigenvalue.
std::vector<EigenProjector> eigen_projectors(const SpinEndo& endo, double tol = kClusterTolerance);

/// Max residual of P_a P_b - delta_ab P_a, P_a - P_a^* and sum P_a - Id.
double projector_residual(const std::vector<EigenProjector>& projectors);

}  // namespace spinlab
