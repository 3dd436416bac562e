#include "spinlab/serial_reference.hpp"

#include <cmath>
#include <stdexcept>

namespace spinlab::serial {

double square_identity_residual(const CliffordRep& rep, const Form& t) {
  const ComplexMatrix a = act(rep, t, "T").matrix;
  const ComplexMatrix s = act(rep, sigma_T(t), "sigma_T").matrix;
  const ComplexMatrix lhs = a * a;
  const ComplexMatrix rhs = norm2(t) * rep.identity() - 2.0 * s;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double trace_identity_residual(const CliffordRep& rep, const Form& t) {
  const ComplexMatrix a = act(rep, t, "T").matrix;
  const std::complex<double> tr = (a * a).trace();
  return std::abs(tr - norm2(t) * static_cast<double>(rep.spinor_dim()));
}

double adjoint_parity_residual(const CliffordRep& rep, const Form& w) {
  if (w.is_zero()) return 0;
  const auto k = w.degree();
  if (!k) throw std::invalid_argument("adjoint parity: form must be homogeneous");
  const SpinEndo e = act(rep, w, "w");
  return (*k % 4 == 1 || *k % 4 == 2) ? skew_residual(e) : adjoint_residual(e);
}

Tensor4 bianchi_cyclic(const Tensor4& r) {
  const int n = r.dim();
  Tensor4 b(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int v = 1; v <= n; ++v) b(x, y, z, v) = r(x, y, z, v) + r(y, z, x, v) + r(z, x, y, v);
  return b;
}

Tensor4 canonical_curvature(const StructureConstants& c, int h_dim) {
  const int n = c.dim() - h_dim;
  Tensor4 r(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int v = 1; v <= n; ++v) {
          double sum = 0;
          for (int a = 1; a <= h_dim; ++a)
            sum += c(h_dim + x, h_dim + y, a) * c(a, h_dim + z, h_dim + v);
          r(x, y, z, v) = -sum;
        }
  return r;
}

std::vector<double> square_identity_residuals(const CliffordRep& rep, std::span<const Form> forms) {
  std::vector<double> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = square_identity_residual(rep, forms[i]);
  return out;
}

std::vector<double> trace_identity_residuals(const CliffordRep& rep, std::span<const Form> forms) {
  std::vector<double> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = trace_identity_residual(rep, forms[i]);
  return out;
}

std::vector<double> adjoint_parity_residuals(const CliffordRep& rep, std::span<const Form> forms) {
  std::vector<double> out(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = adjoint_parity_residual(rep, forms[i]);
  return out;
}

}  // namespace spinlab::serial
