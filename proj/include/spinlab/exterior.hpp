#pragma once

// Sparse exterior algebra over an oriented orthonormal frame e_1 ... e_n.
//
// A form is stored as a map from strictly increasing 1-based index tuples to
// coefficients; zero coefficients are never stored. Evaluation is normalized
// so that e_{p1...pk}(e_p1, ..., e_pk) = 1 (determinant convention, no 1/k!).
//
// Everything is templated on the coefficient type. Structural identities are
// tested with RationalForm (exact); the Clifford boundary converts to double.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace spinlab {

using Rational = boost::rational<std::int64_t>;

/// Strictly increasing list of 1-based frame indices.
using Multiindex = std::vector<int>;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int expected, int actual)
      : std::invalid_argument("dimension mismatch: expected n = " + std::to_string(expected) +
                              ", got n = " + std::to_string(actual)) {}
};

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

namespace detail {

inline std::string format_scalar(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
inline std::string format_scalar(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Sorts `idx` in place; returns the permutation parity (+1/-1), or 0 if an
/// index repeats.
inline int sort_with_sign(Multiindex& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace detail

template <typename Scalar>
class BasicForm {
 public:
  using scalar_type = Scalar;
  using term_map = std::map<Multiindex, Scalar>;

  BasicForm() = default;
  explicit BasicForm(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("empty frame");
  }

  /// c * e_{idx}. `idx` may be unsorted; repeated indices give the zero form.
  static BasicForm monomial(int n, Multiindex idx, Scalar c = Scalar(1)) {
    BasicForm f(n);
    f.add_term(std::move(idx), c);
    return f;
  }

  static BasicForm from_terms(int n, const std::vector<std::pair<Multiindex, Scalar>>& terms) {
    BasicForm f(n);
    for (const auto& [idx, c] : terms) f.add_term(idx, c);
    return f;
  }

  int dim() const { return n_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Degree of a homogeneous nonzero form; nullopt for zero or mixed forms.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto k = static_cast<int>(terms_.begin()->first.size());
    for (const auto& [idx, c] : terms_)
      if (static_cast<int>(idx.size()) != k) return std::nullopt;
    return k;
  }

  /// True if every term has degree k (vacuously for the zero form).
  bool has_degree(int k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [k](const auto& t) { return static_cast<int>(t.first.size()) == k; });
  }

  Scalar coefficient(const Multiindex& increasing) const {
    auto it = terms_.find(increasing);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Multiindex idx, const Scalar& c) {
    for (int i : idx) check_index(i);
    const int sign = detail::sort_with_sign(idx);
    if (sign == 0 || c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(idx), Scalar(0));
    it->second += sign > 0 ? c : -c;
    if (it->second == Scalar(0)) terms_.erase(it);
  }

  /// Drops coefficients with magnitude <= cutoff (floating forms only).
  BasicForm pruned(double cutoff) const {
    BasicForm out(n_);
    for (const auto& [idx, c] : terms_)
      if (std::abs(to_double(c)) > cutoff) out.terms_.emplace(idx, c);
    return out;
  }

  BasicForm<double> to_real() const {
    BasicForm<double> out(n_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, to_double(c));
    return out;
  }

  BasicForm& operator+=(const BasicForm& o) {
    require_same_dim(o);
    for (const auto& [idx, c] : o.terms_) add_sorted(idx, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    require_same_dim(o);
    for (const auto& [idx, c] : o.terms_) add_sorted(idx, -c);
    return *this;
  }
  BasicForm& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
  }

  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator-(BasicForm a) { return a *= Scalar(-1); }
  friend BasicForm operator*(const Scalar& s, BasicForm a) { return a *= s; }
  friend BasicForm operator*(BasicForm a, const Scalar& s) { return a *= s; }
  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void require_same_dim(const BasicForm& o) const {
    if (o.n_ != n_) throw DimensionMismatch(n_, o.n_);
  }
  void check_index(int i) const {
    if (i < 1 || i > n_)
      throw std::out_of_range("frame index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n_));
  }

 private:
  template <typename>
  friend class BasicForm;

  void add_sorted(const Multiindex& idx, const Scalar& c) {
    auto [it, inserted] = terms_.try_emplace(idx, Scalar(0));
    it->second += c;
    if (it->second == Scalar(0)) terms_.erase(it);
  }

  int n_ = 1;
  term_map terms_;
};

using Form = BasicForm<double>;
using RationalForm = BasicForm<Rational>;

/// alpha ^ beta.
template <typename S>
BasicForm<S> wedge(const BasicForm<S>& a, const BasicForm<S>& b) {
  a.require_same_dim(b);
  BasicForm<S> out(a.dim());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      Multiindex merged;
      merged.reserve(ia.size() + ib.size());
      int inversions = 0;
      std::size_t i = 0, j = 0;
      bool repeated = false;
      while (i < ia.size() || j < ib.size()) {
        if (j == ib.size() || (i < ia.size() && ia[i] < ib[j])) {
          merged.push_back(ia[i++]);
        } else if (i == ia.size() || ib[j] < ia[i]) {
          inversions += static_cast<int>(ia.size() - i);
          merged.push_back(ib[j++]);
        } else {
          repeated = true;
          break;
        }
      }
      if (repeated) continue;
      const S c = ca * cb;
      out.add_term(std::move(merged), inversions % 2 == 0 ? c : -c);
    }
  }
  return out;
}

/// Interior product e_index _| alpha.
template <typename S>
BasicForm<S> contract(int index, const BasicForm<S>& a) {
  a.check_index(index);
  BasicForm<S> out(a.dim());
  for (const auto& [idx, c] : a.terms()) {
    auto pos = std::find(idx.begin(), idx.end(), index);
    if (pos == idx.end()) continue;
    Multiindex rest;
    rest.reserve(idx.size() - 1);
    rest.insert(rest.end(), idx.begin(), pos);
    rest.insert(rest.end(), pos + 1, idx.end());
    out.add_term(std::move(rest), (pos - idx.begin()) % 2 == 0 ? c : -c);
  }
  return out;
}

/// Sum of squared coefficients over the increasing basis.
template <typename S>
S norm2(const BasicForm<S>& a) {
  S sum(0);
  for (const auto& [idx, c] : a.terms()) sum += c * c;
  return sum;
}

/// sigma_T = 1/2 sum_k (e_k _| T) ^ (e_k _| T).
template <typename S>
BasicForm<S> sigma_T(const BasicForm<S>& t) {
  if (!t.has_degree(3)) throw std::invalid_argument("sigma_T: torsion must be a 3-form");
  BasicForm<S> out(t.dim());
  for (int k = 1; k <= t.dim(); ++k) {
    const auto ck = contract(k, t);
    if (!ck.is_zero()) out += wedge(ck, ck);
  }
  return out *= S(1) / S(2);
}

/// alpha(e_{i1}, ..., e_{ik}) for arbitrary (possibly unsorted) indices.
template <typename S>
S evaluate(const BasicForm<S>& a, Multiindex indices) {
  for (int i : indices) a.check_index(i);
  if (!a.has_degree(static_cast<int>(indices.size())))
    throw std::invalid_argument("evaluate: tuple length " + std::to_string(indices.size()) +
                                " does not match the form degree");
  const int sign = detail::sort_with_sign(indices);
  if (sign == 0) return S(0);
  const S c = a.coefficient(indices);
  return sign > 0 ? c : -c;
}

/// Exact conversion when every coefficient is an integer-valued double.
inline std::optional<RationalForm> exact_form(const Form& f) {
  RationalForm out(f.dim());
  for (const auto& [idx, c] : f.terms()) {
    if (std::abs(c) > 9.0e15 || std::floor(c) != c) return std::nullopt;
    out.add_term(idx, Rational(static_cast<std::int64_t>(c)));
  }
  return out;
}

/// Canonical text rendering, e.g. "e_{1 3 5} - 2·e_{2 4 5}"; "0" for the zero form.
template <typename S>
std::string to_string(const BasicForm<S>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : a.terms()) {
    const bool negative = c < S(0);
    const S mag = negative ? S(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mag != S(1)) os << detail::format_scalar(mag) << "·";
    os << "e_{";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? " " : "") << idx[i];
    os << "}";
  }
  return os.str();
}

}  // namespace spinlab
