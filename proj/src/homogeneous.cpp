#include "spinlab/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "spinlab/kernels.hpp"

namespace spinlab {

namespace {

constexpr double kCoefficientCutoff = 1e-14;

std::string witness_text(const std::vector<int>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

[[noreturn]] void fail(HomogeneousError::Kind kind, std::vector<int> witness, double residual,
                       const std::string& what) {
  std::ostringstream os;
  os << what << " at basis triple " << witness_text(witness) << " (residual " << residual << ")";
  throw HomogeneousError(kind, std::move(witness), residual, os.str());
}

// Dense T(x, y, z) on the orthonormal m-frame.
std::vector<double> torsion_array(const HomogeneousSpace& s) {
  const int n = s.dim(), h = s.dim_h();
  std::vector<double> t(static_cast<std::size_t>(n) * n * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        t[((x - 1) * n + (y - 1)) * n + (z - 1)] = -s.brackets()(h + x, h + y, h + z);
  return t;
}

}  // namespace

HomogeneousError::HomogeneousError(Kind kind, std::vector<int> witness, double residual,
                                   const std::string& what)
    : std::domain_error(what), kind_(kind), witness_(std::move(witness)), residual_(residual) {}

Eigen::MatrixXd HomogeneousSpace::isotropy(int a) const {
  if (a < 1 || a > h_dim_) throw std::out_of_range("isotropy index " + std::to_string(a));
  const int n = dim();
  Eigen::MatrixXd m(n, n);
  for (int z = 1; z <= n; ++z)
    for (int v = 1; v <= n; ++v) m(v - 1, z - 1) = brackets_(a, h_dim_ + z, h_dim_ + v);
  return m;
}

HomogeneousSpace build_space(std::string name, int dim_g, int h_dim,
                             std::vector<BracketRecord> records, std::vector<double> metric_diag,
                             double tol) {
  using Kind = HomogeneousError::Kind;
  if (dim_g < 1 || h_dim < 0 || h_dim >= dim_g)
    throw HomogeneousError(Kind::input, {}, 0,
                           "need 0 <= h_dim < dim_g (got h_dim = " + std::to_string(h_dim) +
                               ", dim_g = " + std::to_string(dim_g) + ")");
  const int n = dim_g - h_dim;
  if (metric_diag.empty()) metric_diag.assign(n, 1.0);
  if (static_cast<int>(metric_diag.size()) != n)
    throw HomogeneousError(Kind::metric, {}, 0,
                           "metric_diag has " + std::to_string(metric_diag.size()) +
                               " entries, expected dim m = " + std::to_string(n));
  for (int a = 0; a < n; ++a)
    if (!(metric_diag[a] > 0))
      throw HomogeneousError(Kind::metric, {h_dim + a + 1}, metric_diag[a],
                             "metric must be positive definite");

  StructureConstants raw(dim_g);
  StructureConstants seen(dim_g);
  for (const auto& r : records) {
    for (int idx : {r.i, r.j, r.k})
      if (idx < 1 || idx > dim_g)
        throw HomogeneousError(Kind::input, {r.i, r.j, r.k}, 0,
                               "bracket index outside 1.." + std::to_string(dim_g));
    if (r.i == r.j) {
      if (r.value != 0.0)
        fail(Kind::input, {r.i, r.j, r.k}, std::abs(r.value), "[b,b] must vanish");
      continue;
    }
    for (auto [i, j, v] : {std::tuple{r.i, r.j, r.value}, std::tuple{r.j, r.i, -r.value}}) {
      if (seen(i, j, r.k) != 0.0 && std::abs(raw(i, j, r.k) - v) > tol)
        fail(Kind::input, {i, j, r.k}, std::abs(raw(i, j, r.k) - v),
             "conflicting bracket records");
      raw(i, j, r.k) = v;
      seen(i, j, r.k) = 1.0;
    }
  }

  std::vector<double> scale(dim_g + 1, 1.0);
  double gram = 0;
  for (int a = 1; a <= n; ++a) {
    scale[h_dim + a] = 1.0 / std::sqrt(metric_diag[a - 1]);
    gram = std::max(gram, std::abs(metric_diag[a - 1] * scale[h_dim + a] * scale[h_dim + a] - 1));
  }
  if (gram > kGramTolerance)
    throw HomogeneousError(Kind::metric, {}, gram, "orthonormalization failed the Gram gate");

  StructureConstants c(dim_g);
  for (int i = 1; i <= dim_g; ++i)
    for (int j = 1; j <= dim_g; ++j)
      for (int k = 1; k <= dim_g; ++k) c(i, j, k) = raw(i, j, k) * scale[i] * scale[j] / scale[k];

  for (int i = 1; i <= dim_g; ++i)
    for (int j = i + 1; j <= dim_g; ++j)
      for (int l = j + 1; l <= dim_g; ++l)
        for (int k = 1; k <= dim_g; ++k) {
          double sum = 0;
          for (int m = 1; m <= dim_g; ++m)
            sum += c(j, l, m) * c(i, m, k) + c(l, i, m) * c(j, m, k) + c(i, j, m) * c(l, m, k);
          if (std::abs(sum) > tol) fail(Kind::jacobi, {i, j, l}, std::abs(sum), "Jacobi identity fails");
        }

  for (int a = 1; a <= h_dim; ++a)
    for (int b = 1; b <= h_dim; ++b)
      for (int k = h_dim + 1; k <= dim_g; ++k)
        if (std::abs(c(a, b, k)) > tol)
          fail(Kind::subalgebra, {a, b, k}, std::abs(c(a, b, k)), "[h, h] is not contained in h");

  for (int a = 1; a <= h_dim; ++a)
    for (int x = h_dim + 1; x <= dim_g; ++x)
      for (int k = 1; k <= h_dim; ++k)
        if (std::abs(c(a, x, k)) > tol)
          fail(Kind::reductivity, {a, x, k}, std::abs(c(a, x, k)), "[h, m] is not contained in m");

  for (int x = h_dim + 1; x <= dim_g; ++x)
    for (int y = h_dim + 1; y <= dim_g; ++y)
      for (int z = h_dim + 1; z <= dim_g; ++z) {
        const double r = std::abs(c(x, y, z) + c(x, z, y));
        if (r > tol) fail(Kind::natural_reductivity, {x, y, z}, r, "metric is not naturally reductive");
      }

  HomogeneousSpace s;
  s.name_ = std::move(name);
  s.h_dim_ = h_dim;
  s.metric_ = std::move(metric_diag);
  s.records_ = std::move(records);
  s.brackets_ = std::move(c);
  s.gram_residual_ = gram;
  return s;
}

LieResiduals lie_residuals(const HomogeneousSpace& s) {
  const auto& c = s.brackets();
  const int g = s.dim_g(), h = s.dim_h();
  LieResiduals out;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      for (int l = 1; l <= g; ++l)
        for (int k = 1; k <= g; ++k) {
          double sum = 0;
          for (int m = 1; m <= g; ++m)
            sum += c(j, l, m) * c(i, m, k) + c(l, i, m) * c(j, m, k) + c(i, j, m) * c(l, m, k);
          out.jacobi = std::max(out.jacobi, std::abs(sum));
        }
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      for (int k = 1; k <= g; ++k) {
        const bool hi = i <= h, hj = j <= h, hk = k <= h;
        if (hi && hj && !hk) out.subalgebra = std::max(out.subalgebra, std::abs(c(i, j, k)));
        if (hi && !hj && hk) out.reductivity = std::max(out.reductivity, std::abs(c(i, j, k)));
        if (!hi && !hj && !hk)
          out.natural_reductivity =
              std::max(out.natural_reductivity, std::abs(c(i, j, k) + c(i, k, j)));
      }
  return out;
}

Form canonical_torsion(const HomogeneousSpace& s, double tol) {
  const int n = s.dim();
  const auto t = torsion_array(s);
  auto at = [&](int x, int y, int z) { return t[((x - 1) * n + (y - 1)) * n + (z - 1)]; };
  double defect = 0;
  std::vector<int> witness;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) {
        const double d = std::max(std::abs(at(x, y, z) + at(y, x, z)), std::abs(at(x, y, z) + at(x, z, y)));
        if (d > defect) {
          defect = d;
          witness = {x, y, z};
        }
      }
  if (defect > tol)
    throw HomogeneousError(HomogeneousError::Kind::torsion, witness, defect,
                           "canonical torsion is not totally antisymmetric");
  Form out(n);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        if (std::abs(at(x, y, z)) > kCoefficientCutoff) out.add_term({x, y, z}, at(x, y, z));
  return out;
}

AlgCurvature canonical_curvature(const HomogeneousSpace& s) {
  return AlgCurvature::validated(kernels::canonical_curvature(s.brackets(), s.dim_h()));
}

double scal_nabla(const HomogeneousSpace& s) { return scal(canonical_curvature(s)); }

double scal_g(const HomogeneousSpace& s) {
  return scal_nabla(s) + 1.5 * norm2(canonical_torsion(s));
}

double torsion_invariance_residual(const HomogeneousSpace& s) {
  const int n = s.dim();
  const auto t = torsion_array(s);
  auto at = [&](int x, int y, int z) { return t[(x * n + y) * n + z]; };  // 0-based
  double worst = 0;
  for (int a = 1; a <= s.dim_h(); ++a) {
    const Eigen::MatrixXd m = s.isotropy(a);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          double sum = 0;
          for (int v = 0; v < n; ++v)
            sum += m(v, x) * at(v, y, z) + m(v, y) * at(x, v, z) + m(v, z) * at(x, y, v);
          worst = std::max(worst, std::abs(sum));
        }
  }
  return worst;
}

double curvature_invariance_residual(const HomogeneousSpace& s) {
  const int n = s.dim();
  const auto r = canonical_curvature(s);
  double worst = 0;
  for (int a = 1; a <= s.dim_h(); ++a) {
    const Eigen::MatrixXd m = s.isotropy(a);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        for (int z = 1; z <= n; ++z)
          for (int w = 1; w <= n; ++w) {
            double sum = 0;
            for (int v = 1; v <= n; ++v)
              sum += m(v - 1, x - 1) * r(v, y, z, w) + m(v - 1, y - 1) * r(x, v, z, w) +
                     m(v - 1, z - 1) * r(x, y, v, w) + m(v - 1, w - 1) * r(x, y, z, v);
            worst = std::max(worst, std::abs(sum));
          }
  }
  return worst;
}

std::vector<BracketRecord> so_brackets(int N, const std::vector<SoBasisElement>& basis) {
  const auto size = static_cast<int>(basis.size());
  if (size != N * (N - 1) / 2) throw std::invalid_argument("so_brackets: basis does not span so(N)");
  auto matrix = [N](const SoBasisElement& e) {
    if (e.a < 1 || e.b > N || e.a >= e.b) throw std::invalid_argument("so_brackets: need 1 <= a < b <= N");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
    m(e.a - 1, e.b - 1) = e.sign;
    m(e.b - 1, e.a - 1) = -e.sign;
    return m;
  };
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : basis) pairs.insert({e.a, e.b});
  if (static_cast<int>(pairs.size()) != size)
    throw std::invalid_argument("so_brackets: repeated basis element");
  std::vector<BracketRecord> out;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      const Eigen::MatrixXd mi = matrix(basis[i]), mj = matrix(basis[j]);
      const Eigen::MatrixXd br = mi * mj - mj * mi;
      for (int k = 0; k < size; ++k) {
        const double v = basis[k].sign * br(basis[k].a - 1, basis[k].b - 1);
        if (v != 0.0) out.push_back({i + 1, j + 1, k + 1, v});
      }
    }
  return out;
}

}  // namespace spinlab
