#include "spinlab/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "spinlab/kernels.hpp"

namespace spinlab {

double Tensor4::max_abs() const {
  double worst = 0;
  for (double x : data_) worst = std::max(worst, std::abs(x));
  return worst;
}

double Tensor4::max_abs_difference(const Tensor4& other) const {
  if (other.n_ != n_) throw DimensionMismatch(n_, other.n_);
  double worst = 0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

Tensor4 form_tensor(const Form& alpha) {
  if (!alpha.has_degree(4)) throw std::invalid_argument("form_tensor: expected a 4-form");
  const int n = alpha.dim();
  Tensor4 out(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int v = 1; v <= n; ++v) out(x, y, z, v) = evaluate(alpha, {x, y, z, v});
  return out;
}

double SymmetryReport::worst() const {
  return std::max({first_pair_antisymmetry, second_pair_antisymmetry, pair_symmetry});
}

SymmetryReport validate(const Tensor4& c, double tol) {
  SymmetryReport rep;
  rep.tolerance = tol;
  const int n = c.dim();
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          const double v = c(p, q, r, s);
          rep.first_pair_antisymmetry =
              std::max(rep.first_pair_antisymmetry, std::abs(v + c(q, p, r, s)));
          rep.second_pair_antisymmetry =
              std::max(rep.second_pair_antisymmetry, std::abs(v + c(p, q, s, r)));
          rep.pair_symmetry = std::max(rep.pair_symmetry, std::abs(v - c(r, s, p, q)));
        }
  return rep;
}

namespace {
std::string describe(const SymmetryReport& r) {
  std::ostringstream os;
  os << "curvature fails symmetry validation (antisym(p,q) " << r.first_pair_antisymmetry
     << ", antisym(r,s) " << r.second_pair_antisymmetry << ", pair " << r.pair_symmetry << ")";
  return os.str();
}
}  // namespace

InvalidCurvature::InvalidCurvature(const SymmetryReport& report)
    : std::domain_error(describe(report)), report_(report) {}

AlgCurvature AlgCurvature::validated(Tensor4 coeffs, double tol) {
  auto report = validate(coeffs, tol);
  if (!report.pass()) throw InvalidCurvature(report);
  return AlgCurvature(std::move(coeffs), report);
}

Tensor4 complete_from_records(int n, const std::vector<CurvatureRecord>& records, double tol) {
  Tensor4 out(n);
  Tensor4 seen(n);
  auto put = [&](int p, int q, int r, int s, double v) {
    if (seen(p, q, r, s) != 0.0 && std::abs(out(p, q, r, s) - v) > tol) {
      std::ostringstream os;
      os << "curvature records disagree at R(" << p << "," << q << "," << r << "," << s
         << "): " << out(p, q, r, s) << " vs " << v;
      throw std::invalid_argument(os.str());
    }
    out(p, q, r, s) = v;
    seen(p, q, r, s) = 1.0;
  };
  for (const auto& rec : records) {
    for (int i : {rec.p, rec.q, rec.r, rec.s})
      if (i < 1 || i > n)
        throw std::invalid_argument("curvature record index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(n));
    const double v = rec.value;
    const auto [p, q, r, s] = std::tuple{rec.p, rec.q, rec.r, rec.s};
    if ((p == q || r == s) && v != 0.0)
      throw std::invalid_argument("curvature record with repeated index in an antisymmetric pair");
    for (int swap = 0; swap < 2; ++swap) {
      const int a = swap ? r : p, b = swap ? s : q, c = swap ? p : r, d = swap ? q : s;
      put(a, b, c, d, v);
      put(b, a, c, d, -v);
      put(a, b, d, c, -v);
      put(b, a, d, c, v);
    }
  }
  return out;
}

Eigen::MatrixXd ricci(const AlgCurvature& r) {
  const int n = r.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int q = 1; q <= n; ++q)
    for (int s = 1; s <= n; ++s) {
      double sum = 0;
      for (int p = 1; p <= n; ++p) sum += r(p, q, s, p);
      ric(q - 1, s - 1) = sum;
    }
  return ric;
}

double scal(const AlgCurvature& r) {
  const auto ric = ricci(r);
  double sum = 0;
  for (int q = 0; q < r.dim(); ++q) sum += ric(q, q);
  return sum;
}

std::vector<double> partial_scal(const AlgCurvature& r, const Partition& p) {
  if (p.dim() != r.dim()) throw DimensionMismatch(r.dim(), p.dim());
  const auto ric = ricci(r);
  std::vector<double> out;
  for (const auto& block : p.blocks()) {
    double sum = 0;
    for (int q : block) sum += ric(q - 1, q - 1);
    out.push_back(sum);
  }
  return out;
}

BlockReport block_checks(const AlgCurvature& r, const Partition& part, double tol) {
  if (part.dim() != r.dim()) throw DimensionMismatch(r.dim(), part.dim());
  BlockReport rep;
  rep.tolerance = tol;
  const int n = r.dim();
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      for (int s1 = 1; s1 <= n; ++s1)
        for (int s2 = 1; s2 <= n; ++s2) {
          const double v = std::abs(r(p, q, s1, s2));
          const int bp = part.block_of(p), bq = part.block_of(q);
          const int br = part.block_of(s1), bs = part.block_of(s2);
          if (br != bs) rep.second_pair_cross = std::max(rep.second_pair_cross, v);
          if (bp != bq) rep.first_pair_cross = std::max(rep.first_pair_cross, v);
          if (bp == bq && br == bs && bp != br)
            rep.cross_pair_blocks = std::max(rep.cross_pair_blocks, v);
        }
  const auto ric = ricci(r);
  for (int q = 1; q <= n; ++q)
    for (int s = 1; s <= n; ++s)
      if (part.block_of(q) != part.block_of(s))
        rep.ricci_cross = std::max(rep.ricci_cross, std::abs(ric(q - 1, s - 1)));
  return rep;
}

Form sigma_tilde(const AlgCurvature& r, const Partition& part, int block) {
  if (part.dim() != r.dim()) throw DimensionMismatch(r.dim(), part.dim());
  const auto& members = part.block(block);
  const int n = r.dim();
  Form out(n);
  for (std::size_t ia = 0; ia < members.size(); ++ia)
    for (std::size_t ib = ia + 1; ib < members.size(); ++ib) {
      const int a = members[ia], b = members[ib];
      for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
          if (p == a || p == b || q == a || q == b) continue;
          const double v = r(a, b, p, q);
          // add_term sorts (a, b, p, q) and applies the permutation sign
          if (v != 0.0) out.add_term({a, b, p, q}, 0.5 * v);
        }
    }
  return out;
}

Tensor4 bianchi_cyclic(const AlgCurvature& r) { return kernels::bianchi_cyclic(r.coeffs()); }

BianchiComparison compare_bianchi(const Tensor4& b, const Form& sigma, double expected_constant,
                                  double tol) {
  if (b.dim() != sigma.dim()) throw DimensionMismatch(b.dim(), sigma.dim());
  const Tensor4 s = form_tensor(sigma);
  BianchiComparison out;
  out.tolerance = tol;
  double bs = 0, ss = 0;
  const int n = b.dim();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        for (int v = 1; v <= n; ++v) {
          bs += b(x, y, z, v) * s(x, y, z, v);
          ss += s(x, y, z, v) * s(x, y, z, v);
          out.residual =
              std::max(out.residual, std::abs(b(x, y, z, v) - expected_constant * s(x, y, z, v)));
          out.alternation_defect =
              std::max(out.alternation_defect, std::abs(b(x, y, z, v) + b(x, y, v, z)));
        }
  out.fitted_constant = ss > 0 ? bs / ss : 0.0;
  return out;
}

}  // namespace spinlab
