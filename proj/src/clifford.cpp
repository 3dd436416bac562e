#include "spinlab/clifford.hpp"

#include <algorithm>

namespace spinlab {

namespace {

using Complex = std::complex<double>;

ComplexMatrix pauli(char which) {
  ComplexMatrix m(2, 2);
  switch (which) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: m.setIdentity();
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Z^(k) x P x I^(m-k-1)
ComplexMatrix string_operator(int m, int k, char p) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 0; s < m; ++s) out = kron(out, pauli(s < k ? 'z' : (s == k ? p : 'i')));
  return out;
}

}  // namespace

CliffordRep::CliffordRep(int n, int volume_sign) : n_(n), spinor_dim_(1), volume_sign_(1) {
  if (n < 1) throw std::invalid_argument("empty frame");
  if (n > kMaxFrameDim)
    throw std::invalid_argument("frame dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxFrameDim));
  if (n % 2 == 1) {
    if (volume_sign != 1 && volume_sign != -1)
      throw std::invalid_argument("volume_sign must be +1 or -1");
    volume_sign_ = volume_sign;
  }
  const int m = n / 2;
  spinor_dim_ = 1 << m;
  const Complex i(0, 1);
  generators_.reserve(n);
  // Hermitian gammas squaring to +1; multiplying by i gives e_i^2 = -1.
  for (int k = 0; k < m; ++k) {
    generators_.push_back(i * string_operator(m, k, 'x'));
    generators_.push_back(i * string_operator(m, k, 'y'));
  }
  if (n % 2 == 1) generators_.push_back(double(volume_sign_) * i * string_operator(m, m, 'i'));
}

const ComplexMatrix& CliffordRep::generator(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("generator index " + std::to_string(i));
  return generators_[i - 1];
}

ComplexMatrix CliffordRep::product(const Multiindex& indices) const {
  ComplexMatrix out = identity();
  for (int i : indices) out = out * generator(i);
  return out;
}

double anticommutator_residual(const CliffordRep& rep) {
  double worst = 0;
  const ComplexMatrix id = rep.identity();
  for (int i = 1; i <= rep.dim(); ++i)
    for (int j = 1; j <= rep.dim(); ++j) {
      ComplexMatrix ac = rep.generator(i) * rep.generator(j) + rep.generator(j) * rep.generator(i);
      if (i == j) ac += 2.0 * id;
      worst = std::max(worst, ac.cwiseAbs().maxCoeff());
    }
  return worst;
}

double skew_adjoint_residual(const CliffordRep& rep) {
  double worst = 0;
  for (const auto& g : rep.generators())
    worst = std::max(worst, (g + g.adjoint()).cwiseAbs().maxCoeff());
  return worst;
}

double adjoint_residual(const SpinEndo& endo) {
  return (endo.matrix - endo.matrix.adjoint()).cwiseAbs().maxCoeff();
}

double skew_residual(const SpinEndo& endo) {
  return (endo.matrix + endo.matrix.adjoint()).cwiseAbs().maxCoeff();
}

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& e : eigenvalues) total += e.multiplicity;
  return total;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.push_back(e.value);
  return out;
}

std::vector<double> Spectrum::squares() const {
  std::vector<double> out;
  for (const auto& e : eigenvalues) out.push_back(e.value * e.value);
  return out;
}

namespace {

struct Cluster {
  double value;
  Eigen::Index first;
  Eigen::Index count;
};

std::vector<Cluster> clustered(const Eigen::VectorXd& sorted, double tol) {
  std::vector<Cluster> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted(i) - sorted(start) > tol) {
      const Eigen::Index count = i - start;
      out.push_back({sorted.segment(start, count).mean(), start, count});
      start = i;
    }
  }
  return out;
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> solve(const SpinEndo& endo, double tol,
                                                   bool vectors) {
  const double residual = adjoint_residual(endo);
  if (residual > tol) throw NotSelfAdjoint(residual);
  // Solve on the exactly Hermitian part.
  const ComplexMatrix herm = 0.5 * (endo.matrix + endo.matrix.adjoint());
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(
      herm, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
}

}  // namespace

Spectrum spectrum(const SpinEndo& endo, double tol) {
  auto solver = solve(endo, tol, false);
  Spectrum out;
  out.tolerance = tol;
  for (const auto& c : clustered(solver.eigenvalues(), tol))
    out.eigenvalues.push_back({c.value, static_cast<int>(c.count)});
  return out;
}

std::vector<EigenProjector> eigen_projectors(const SpinEndo& endo, double tol) {
  auto solver = solve(endo, tol, true);
  const ComplexMatrix& v = solver.eigenvectors();
  std::vector<EigenProjector> out;
  for (const auto& c : clustered(solver.eigenvalues(), tol)) {
    const ComplexMatrix block = v.middleCols(c.first, c.count);
    out.push_back({c.value, static_cast<int>(c.count),
                   SpinEndo{block * block.adjoint(), "P[" + detail::format_scalar(c.value) + "]"}});
  }
  return out;
}

double projector_residual(const std::vector<EigenProjector>& projectors) {
  if (projectors.empty()) return 0;
  const auto d = projectors.front().projector.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  double worst = 0;
  for (std::size_t a = 0; a < projectors.size(); ++a) {
    const auto& pa = projectors[a].projector.matrix;
    sum += pa;
    worst = std::max(worst, adjoint_residual(projectors[a].projector));
    for (std::size_t b = 0; b < projectors.size(); ++b) {
      ComplexMatrix prod = pa * projectors[b].projector.matrix;
      if (a == b) prod -= pa;
      worst = std::max(worst, prod.cwiseAbs().maxCoeff());
    }
  }
  sum -= ComplexMatrix::Identity(d, d);
  return std::max(worst, sum.cwiseAbs().maxCoeff());
}

}  // namespace spinlab
