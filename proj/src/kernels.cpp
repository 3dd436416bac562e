#include "spinlab/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinlab/serial_reference.hpp"

namespace spinlab::kernels {

namespace {

// Exceptions must not escape an OpenMP region; capture the first and rethrow.
template <typename Fn>
std::vector<double> map_forms(std::span<const Form> forms, Fn&& fn) {
  const auto count = static_cast<std::ptrdiff_t>(forms.size());
  std::vector<double> out(forms.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = fn(forms[i]);
    } catch (...) {
#pragma omp critical(spinlab_kernel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Tensor4 bianchi_cyclic(const Tensor4& r) {
  const int n = r.dim();
  Tensor4 b(n);
#pragma omp parallel for collapse(2)
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int v = 1; v <= n; ++v) b(x, y, z, v) = r(x, y, z, v) + r(y, z, x, v) + r(z, x, y, v);
  return b;
}

Tensor4 canonical_curvature(const StructureConstants& c, int h_dim) {
  const int n = c.dim() - h_dim;
  Tensor4 r(n);
#pragma omp parallel for collapse(2)
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
  return map_forms(forms, [&](const Form& t) { return serial::square_identity_residual(rep, t); });
}

std::vector<double> trace_identity_residuals(const CliffordRep& rep, std::span<const Form> forms) {
  return map_forms(forms, [&](const Form& t) { return serial::trace_identity_residual(rep, t); });
}

std::vector<double> adjoint_parity_residuals(const CliffordRep& rep, std::span<const Form> forms) {
  return map_forms(forms, [&](const Form& w) { return serial::adjoint_parity_residual(rep, w); });
}

}  // namespace spinlab::kernels
