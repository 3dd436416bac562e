#include "spinlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "spinlab/homogeneous.hpp"

namespace spinlab {

bool AnalysisReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

// Residuals below 1e-12 are reported as such, so texts do not depend on
// rounding noise.
std::string sci(double v) {
  if (std::abs(v) < 1e-12) return "< 1e-12";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

void residual_check(AnalysisReport& rep, std::string name, double residual, double tol) {
  rep.checks.push_back({std::move(name), residual < tol, "residual " + sci(residual)});
}

double max_coefficient_difference(const Form& a, const Form& b) {
  double worst = 0;
  const Form d = a - b;
  for (const auto& [idx, c] : d.terms()) worst = std::max(worst, std::abs(c));
  return worst;
}

std::set<Multiindex> support(const Form& f, double cutoff) {
  std::set<Multiindex> out;
  for (const auto& [idx, c] : f.terms())
    if (std::abs(c) > cutoff) out.insert(idx);
  return out;
}

void curvature_checks(AnalysisReport& rep, CurvatureSection& cs, const AlgCurvature& r,
                      const CliffordRep& cl, const AnalysisOptions& opts) {
  cs.scal_nabla = scal(r);
  cs.partial_scal = partial_scal(r, rep.partition);
  const auto ric = ricci(r);
  for (int i = 0; i < ric.rows(); ++i) cs.ricci_diagonal.push_back(ric(i, i));

  if (rep.split_type) {
    cs.blocks = block_checks(r, rep.partition, opts.tol);
    rep.checks.push_back({"block structure of R and Ric", cs.blocks->pass(),
                          "R(.,.,T_i,T_j) " + sci(cs.blocks->second_pair_cross) +
                              ", R(T_i,T_j,.,.) " + sci(cs.blocks->first_pair_cross) +
                              ", Ric(T_i,T_j) " + sci(cs.blocks->ricci_cross)});
    Form total(rep.n);
    for (int i = 1; i <= rep.partition.block_count(); ++i) {
      cs.sigma_tilde.push_back(sigma_tilde(r, rep.partition, i));
      total += cs.sigma_tilde.back();
    }
    const auto lhs = act(cl, total);
    const auto rhs = act(cl, rep.sigma_t);
    cs.sigma_sum_residual = (lhs.matrix - rhs.matrix).cwiseAbs().maxCoeff();
    residual_check(rep, "Σσ̃ⁱ = σ_T", *cs.sigma_sum_residual, opts.tol);
  }

  cs.bianchi = compare_bianchi(bianchi_cyclic(r), rep.sigma_t, kBianchiConstant, opts.tol);
  rep.checks.push_back({"Bianchi: cyclic R = σ_T", cs.bianchi.consistent(),
                        "residual " + sci(cs.bianchi.residual) + ", fitted c = " +
                            fixed(cs.bianchi.fitted_constant)});
}

}  // namespace

AnalysisReport analyze(const Geometry& g, const AnalysisOptions& opts) {
  AnalysisReport rep;
  rep.name = g.name;
  rep.n = g.n;
  rep.tol = opts.tol;
  try {
    rep.partition = make_partition(g.n, g.partition);
  } catch (const std::invalid_argument& e) {
    throw AnalysisInputError(std::string("partition: ") + e.what());
  }
  if (g.torsion.dim() != g.n) throw AnalysisInputError("torsion dimension differs from n");
  if (!g.torsion.is_zero() && !g.torsion.has_degree(3))
    throw AnalysisInputError("torsion must be a 3-form");
  rep.torsion = g.torsion;
  rep.norm2 = norm2(g.torsion);
  rep.caveats.push_back(
      "holonomy reduction along the partition is assumed; only its algebraic consequences are "
      "checked");

  // Split type.
  rep.decomposition = g.torsion.is_zero()
                          ? Lambda3Decomposition<double>{std::vector<Form>(
                                                             rep.partition.block_count(), Form(g.n)),
                                                         Form(g.n), Form(g.n)}
                          : decompose_3form(g.torsion, rep.partition);
  rep.split_type = rep.decomposition.pure_is_zero() && rep.decomposition.two_one.is_zero();
  if (!rep.split_type)
    rep.caveats.push_back("T is not of split type for this partition; beta_split presumes it is");

  // Clifford action.
  const CliffordRep cl(g.n);
  auto& c = rep.clifford;
  c.spinor_dim = cl.spinor_dim();
  const auto at = act(cl, g.torsion, "T");
  c.self_adjoint_residual = adjoint_residual(at);
  residual_check(rep, "act(T) self-adjoint", c.self_adjoint_residual, opts.tol);
  c.spectrum = spectrum(at, std::max(opts.cluster_tol, c.self_adjoint_residual));
  rep.sigma_t = g.torsion.is_zero() ? Form(g.n) : sigma_T(g.torsion);
  {
    const ComplexMatrix lhs = at.matrix * at.matrix;
    const ComplexMatrix rhs = rep.norm2 * cl.identity() - 2.0 * act(cl, rep.sigma_t).matrix;
    c.square_identity_residual = (lhs - rhs).cwiseAbs().maxCoeff();
  }
  residual_check(rep, "act(T)^2 = |T|^2 - 2 act(σ_T)", c.square_identity_residual, opts.tol);
  c.projector_residual = projector_residual(eigen_projectors(at, opts.cluster_tol));
  residual_check(rep, "eigenprojectors of act(T)", c.projector_residual, opts.tol);
  rep.checks.push_back({"spectrum multiplicities", c.spectrum.total_multiplicity() == c.spinor_dim,
                        std::to_string(c.spectrum.total_multiplicity()) + " of " +
                            std::to_string(c.spinor_dim)});

  if (g.scalars && g.scalars->t_norm2)
    residual_check(rep, "supplied |T|^2 matches T", std::abs(*g.scalars->t_norm2 - rep.norm2),
                   opts.tol);

  // Curvature.
  if (g.curvature) {
    Tensor4 coeffs;
    try {
      coeffs = complete_from_records(g.n, *g.curvature, opts.tol);
    } catch (const std::invalid_argument& e) {
      throw AnalysisInputError(std::string("curvature: ") + e.what());
    }
    CurvatureSection cs;
    cs.source = "explicit";
    cs.symmetry = validate(coeffs, opts.tol);
    residual_check(rep, "curvature symmetries", cs.symmetry.worst(), opts.tol);
    if (cs.symmetry.pass())
      curvature_checks(rep, cs, AlgCurvature::validated(std::move(coeffs), opts.tol), cl, opts);
    rep.curvature = std::move(cs);
  } else if (g.homogeneous) {
    const auto& hd = *g.homogeneous;
    try {
      const auto space = build_space(g.name, hd.h_dim + g.n, hd.h_dim, hd.brackets,
                                     hd.metric_diag, kLieTolerance);
      HomogeneousSection hs;
      hs.name = space.name();
      hs.dim_g = space.dim_g();
      hs.dim_h = space.dim_h();
      hs.gram_residual = space.gram_residual();
      hs.lie = lie_residuals(space);
      hs.torsion_invariance = torsion_invariance_residual(space);
      hs.curvature_invariance = curvature_invariance_residual(space);
      hs.torsion_match = max_coefficient_difference(canonical_torsion(space), g.torsion);
      hs.scal_g = scal_g(space);
      const double lie_tol = std::min(opts.tol, kLieTolerance);
      residual_check(rep, "Jacobi identity", hs.lie.jacobi, lie_tol);
      residual_check(rep, "[h,h] in h", hs.lie.subalgebra, lie_tol);
      residual_check(rep, "[h,m] in m", hs.lie.reductivity, lie_tol);
      residual_check(rep, "natural reductivity", hs.lie.natural_reductivity, lie_tol);
      residual_check(rep, "Ad(H)-invariance of T", hs.torsion_invariance, lie_tol);
      residual_check(rep, "Ad(H)-invariance of R", hs.curvature_invariance, lie_tol);
      residual_check(rep, "T equals the canonical torsion", hs.torsion_match, opts.tol);
      rep.homogeneous = hs;

      CurvatureSection cs;
      cs.source = "homogeneous";
      const auto r = canonical_curvature(space);
      cs.symmetry = r.report();
      residual_check(rep, "curvature symmetries", cs.symmetry.worst(), opts.tol);
      curvature_checks(rep, cs, r, cl, opts);
      rep.curvature = std::move(cs);
    } catch (const HomogeneousError& e) {
      if (e.kind() == HomogeneousError::Kind::input)
        throw AnalysisInputError(std::string("homogeneous: ") + e.what());
      rep.checks.push_back({"homogeneous structure", false, e.what()});
    } catch (const InvalidCurvature& e) {
      rep.checks.push_back({"curvature symmetries", false, e.what()});
    }
  }

  if (g.reference_torsion) {
    rep.reference_match = max_coefficient_difference(g.torsion, *g.reference_torsion);
    rep.reference_support_match =
        support(g.torsion, opts.tol) == support(*g.reference_torsion, opts.tol);
    rep.checks.push_back({"T matches the reference torsion",
                          *rep.reference_match < opts.tol && *rep.reference_support_match,
                          "max difference " + sci(*rep.reference_match)});
  }

  // Bounds.
  auto& b = rep.bounds;
  b.input.n = g.n;
  b.input.largest_block = rep.partition.largest_block_size();
  b.input.block_count = rep.partition.block_count();
  b.input.t_norm2 = rep.norm2;
  if (g.scalars && g.scalars->t_norm2) b.input.t_norm2 = *g.scalars->t_norm2;
  if (g.scalars && g.scalars->mu2_list) {
    b.input.mu2_list = *g.scalars->mu2_list;
    b.mu2_source = "supplied";
  } else {
    b.input.mu2_list = c.spectrum.squares();
    b.mu2_source = "spectrum of act(T)";
  }
  if (g.scalars && g.scalars->scal_g_min) {
    b.input.scal_g_min = *g.scalars->scal_g_min;
    b.scal_source = g.scalars->provenance.empty() ? "supplied" : "supplied: " + g.scalars->provenance;
  } else if (rep.homogeneous) {
    b.input.scal_g_min = rep.homogeneous->scal_g;
    b.scal_source = "homogeneous Scal^g";
  } else if (rep.curvature && rep.curvature->symmetry.pass()) {
    b.input.scal_g_min = rep.curvature->scal_nabla + 1.5 * b.input.t_norm2;
    b.scal_source = "Scal^nabla + 3/2 |T|^2 from the curvature tensor";
    rep.caveats.push_back(
        "Scal^g from one curvature tensor is the minimum only if the scalar curvature is constant");
  }
  if (b.scal_source) {
    b.report = compare(b.input, 1e-12);
    if (b.report->beta_split) {
      double lowest = INFINITY;
      for (const auto& [mu2, beta] : b.report->per_mu) lowest = std::min(lowest, *beta);
      residual_check(rep, "beta_split = min over mu of beta_split(mu)",
                     std::abs(lowest - *b.report->beta_split), opts.tol);
    }
  } else {
    if (b.input.largest_block < 2)
      b.notes.push_back("beta_split undefined (n_k = 1): the largest block must have dimension >= 2");
    if (g.n == 3) b.notes.push_back("beta_tw undefined (n=3): coefficient (n-3)^2 vanishes");
    b.notes.push_back("bounds not evaluated: Scal^g_min unavailable");
  }
  return rep;
}

}  // namespace spinlab
