#pragma once

// Single-threaded reference versions of the kernels in kernels.hpp.

#include <span>
#include <vector>

#include "spinlab/clifford.hpp"
#include "spinlab/curvature.hpp"
#include "spinlab/exterior.hpp"
#include "spinlab/structure_constants.hpp"

namespace spinlab::serial {

Tensor4 bianchi_cyclic(const Tensor4& r);
Tensor4 canonical_curvature(const StructureConstants& c, int h_dim);
std::vector<double> square_identity_residuals(const CliffordRep& rep, std::span<const Form> forms);
std::vector<double> trace_identity_residuals(const CliffordRep& rep, std::span<const Form> forms);
std::vector<double> adjoint_parity_residuals(const CliffordRep& rep, std::span<const Form> forms);

/// Element formulas shared by both implementations.
double square_identity_residual(const CliffordRep& rep, const Form& t);
double trace_identity_residual(const CliffordRep& rep, const Form& t);
double adjoint_parity_residual(const CliffordRep& rep, const Form& w);

}  // namespace spinlab::serial
