#pragma once

// OpenMP-parallel kernels. Each has a serial twin in serial_reference.hpp
// with identical arithmetic order per output element; tests require the two
// to agree bit for bit, and bench/ compares their throughput.

#include <span>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/curvature.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/structure_constants.hpp"

namespace spinlab::kernels {

/// Number of OpenMP threads available to the kernels (1 without OpenMP).
int max_threads();

/// B(x,y,z,v) = R(x,y,z,v) + R(y,z,x,v) + R(z,x,y,v).
Tensor4 bianchi_cyclic(const Tensor4& r);

/// R(x,y,z,v) = -sum_{a in h} c(x,y,a) c(a,z,v) on the m-block of an
/// adapted basis (h = 1..h_dim, m = h_dim+1..dim).
Tensor4 canonical_curvature(const StructureConstants& c, int h_dim);

/// Per form: max |act(T)^2 - |T|^2 Id + 2 act(sigma_T)|.
std::vector<double> square_identity_residuals(const CliffordRep& rep, std::span<const Form> forms);

/// Per form: |trace(act(T)^2) - |T|^2 dim_spinor|.
std::vector<double> trace_identity_residuals(const CliffordRep& rep, std::span<const Form> forms);

/// Per homogeneous k-form: residual of act(w) against self-adjointness when
/// k = 3, 0 (mod 4) and against skew-adjointness when k = 1, 2 (mod 4).
std::vector<double> adjoint_parity_residuals(const CliffordRep& rep, std::span<const Form> forms);

}  // namespace spinlab::kernels
