#pragma once

// Lower bounds for the smallest eigenvalue of the square of the
// characteristic Dirac operator with parallel torsion:
//
//   beta_split(mu) = n_k/(4(n_k-1)) Scal^g_min + n_k/(8(n_k-1)) |T|^2
//                    - (1+n_k)/(4(n_k-1)) mu^2
//   beta_univ      = 1/4 Scal^g_min + 1/8 |T|^2 - 1/4 max mu^2
//   beta_tw        = n/(4(n-1)) Scal^g_min + n(n-5)/(8(n-3)^2) |T|^2
//                    + n(4-n)/(4(n-3)^2) max mu^2
//
// beta_split is the minimum of beta_split(mu) over the eigenvalues mu of T on
// spinors. Templated on the scalar so the degeneration identities can be
// checked in exact rational arithmetic.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinlab/exterior.hpp"

namespace spinlab {

template <typename S>
struct BoundsInput {
  int n = 0;              // manifold dimension
  int largest_block = 0;  // n_k
  S scal_g_min{0};
  S t_norm2{0};
  std::vector<S> mu2_list;  // squared eigenvalues of T on spinors
  int block_count = 0;      // k, 0 when unknown
};

template <typename S>
void validate(const BoundsInput<S>& in) {
  if (in.n < 2) throw std::invalid_argument("bounds: n must be at least 2");
  if (in.largest_block < 1 || in.largest_block > in.n)
    throw std::invalid_argument("bounds: largest block size must lie in 1..n");
  if (in.t_norm2 < S(0)) throw std::invalid_argument("bounds: |T|^2 must be nonnegative");
  if (in.mu2_list.empty()) throw std::invalid_argument("bounds: mu^2 list is empty");
  for (const auto& m : in.mu2_list)
    if (m < S(0)) throw std::invalid_argument("bounds: mu^2 values must be nonnegative");
}

template <typename S>
S max_mu2(const BoundsInput<S>& in) {
  if (in.mu2_list.empty()) throw std::invalid_argument("bounds: mu^2 list is empty");
  return *std::max_element(in.mu2_list.begin(), in.mu2_list.end());
}

/// Undefined (nullopt) for n_k = 1.
template <typename S>
std::optional<S> beta_split_mu(const S& scal_g_min, const S& t_norm2, const S& mu2, int nk) {
  if (nk < 2) return std::nullopt;
  const S d(nk - 1);
  return S(nk) / (S(4) * d) * scal_g_min + S(nk) / (S(8) * d) * t_norm2 -
         S(1 + nk) / (S(4) * d) * mu2;
}

template <typename S>
std::optional<S> beta_split(const BoundsInput<S>& in) {
  return beta_split_mu(in.scal_g_min, in.t_norm2, max_mu2(in), in.largest_block);
}

template <typename S>
S beta_univ(const BoundsInput<S>& in) {
  return in.scal_g_min / S(4) + in.t_norm2 / S(8) - max_mu2(in) / S(4);
}

/// Undefined (nullopt) for n = 3.
template <typename S>
std::optional<S> beta_tw(const BoundsInput<S>& in) {
  const int n = in.n;
  if (n == 3) return std::nullopt;
  const S d2(static_cast<long>(n - 3) * (n - 3));
  return S(n) / S(4 * (n - 1)) * in.scal_g_min + S(n * (n - 5)) / (S(8) * d2) * in.t_norm2 +
         S(n * (4 - n)) / (S(4) * d2) * max_mu2(in);
}

template <typename S>
struct BoundsReport {
  std::optional<S> beta_split;
  S beta_univ{0};
  std::optional<S> beta_tw;
  std::vector<std::pair<S, std::optional<S>>> per_mu;  // (mu^2, beta_split(mu))
  std::string ordering;
  std::vector<std::string> notes;
};

/// All bounds, the per-mu table, their ordering and explanatory notes. Values
/// within `tol` of each other are reported as equal.
template <typename S>
BoundsReport<S> compare(const BoundsInput<S>& in, double tol = 1e-12) {
  validate(in);
  BoundsReport<S> rep;
  auto mu2 = in.mu2_list;
  std::sort(mu2.begin(), mu2.end());
  mu2.erase(std::unique(mu2.begin(), mu2.end()), mu2.end());
  for (const auto& m : mu2)
    rep.per_mu.emplace_back(m, beta_split_mu(in.scal_g_min, in.t_norm2, m, in.largest_block));
  rep.beta_split = beta_split(in);
  rep.beta_univ = beta_univ(in);
  rep.beta_tw = beta_tw(in);

  if (!rep.beta_split)
    rep.notes.push_back("beta_split undefined (n_k = 1): the largest block must have dimension >= 2");
  if (!rep.beta_tw) rep.notes.push_back("beta_tw undefined (n=3): coefficient (n-3)^2 vanishes");
  if (in.block_count > 0 && in.block_count < 3 && in.t_norm2 > S(0))
    rep.notes.push_back("split holonomy with T != 0 needs at least 3 blocks (k = " +
                        std::to_string(in.block_count) + ")");

  std::vector<std::pair<std::string, double>> defined;
  if (rep.beta_split) defined.emplace_back("beta_split", to_double(*rep.beta_split));
  defined.emplace_back("beta_univ", to_double(rep.beta_univ));
  if (rep.beta_tw) defined.emplace_back("beta_tw", to_double(*rep.beta_tw));
  std::stable_sort(defined.begin(), defined.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  const auto tied = [&](std::size_t i) {
    const double scale = std::max({1.0, std::abs(defined[i].second), std::abs(defined[i - 1].second)});
    return defined[i - 1].second - defined[i].second <= tol * scale;
  };
  // Within a run of tied values keep the fixed order split, univ, tw, so that
  // rounding noise cannot reorder the text.
  for (std::size_t start = 0; start < defined.size();) {
    std::size_t end = start + 1;
    while (end < defined.size() && tied(end)) ++end;
    std::vector<std::string> names;
    for (std::size_t i = start; i < end; ++i) names.push_back(defined[i].first);
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      const auto rank = [](const std::string& s) { return s == "beta_split" ? 0 : s == "beta_univ" ? 1 : 2; };
      return rank(a) < rank(b);
    });
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (start > 0 || i > 0) rep.ordering += i == 0 ? " > " : " = ";
      rep.ordering += names[i];
    }
    start = end;
  }
  if (rep.beta_split) {
    const double s = to_double(*rep.beta_split), u = to_double(rep.beta_univ);
    if (std::abs(s - u) <= tol * std::max(1.0, std::abs(u)))
      rep.notes.push_back("beta_split coincides with beta_univ");
    else if (s > u)
      rep.notes.push_back("beta_split improves on beta_univ");
  }
  return rep;
}

}  // namespace spinlab
