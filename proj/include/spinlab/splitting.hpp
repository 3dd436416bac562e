#pragma once

// Frame partitions T_1 + ... + T_k and the induced splitting of 3-forms
//   Lambda^3 = (+) Lambda^3(T_i) (+) Lambda^2(T_i)^T_j (+) T_i^T_j^T_l.
// A 3-form is of split type when all of its monomials are of the third kind.

#include <array>
#include <string>
#include <vector>

#include "spinlab/exterior.hpp"

namespace spinlab {

/// Decomposition of {1..n} into index blocks, canonically ordered by
/// ascending size (stable, so ties keep the caller's order). Block numbers
/// in the API are 1-based positions in that canonical order.
class Partition {
 public:
  int dim() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const;
  int block_size(int i) const { return static_cast<int>(block(i).size()); }
  /// n_k, the size of the largest block.
  int largest_block_size() const;
  /// Canonical block number containing frame index `index`.
  int block_of(int index) const;
  /// Position (1-based) of each canonical block in the caller's original list.
  const std::vector<int>& original_labels() const { return labels_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend Partition make_partition(int n, std::vector<std::vector<int>> blocks);
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> labels_;
  std::vector<int> block_of_;  // indexed by frame index, entry 0 unused
};

/// Throws std::invalid_argument on overlap, gap, empty block or bad index.
Partition make_partition(int n, std::vector<std::vector<int>> blocks);

std::string to_string(const Partition& p);

enum class MonomialKind { pure, two_one, mixed };

/// pure(i): blocks = {i}; two_one(i, j): i holds two indices, j one;
/// mixed(i, j, l): i < j < l.
struct MonomialClass {
  MonomialKind kind;
  std::vector<int> blocks;

  friend bool operator==(const MonomialClass&, const MonomialClass&) = default;
};

MonomialClass classify_monomial(const Partition& p, const std::array<int, 3>& triple);

std::string to_string(const MonomialClass& c);

template <typename S>
struct Lambda3Decomposition {
  std::vector<BasicForm<S>> pure;  // one per canonical block
  BasicForm<S> two_one;
  BasicForm<S> mixed;

  BasicForm<S> sum() const {
    BasicForm<S> out = two_one + mixed;
    for (const auto& f : pure) out += f;
    return out;
  }
  bool pure_is_zero() const {
    for (const auto& f : pure)
      if (!f.is_zero()) return false;
    return true;
  }
};

template <typename S>
Lambda3Decomposition<S> decompose_3form(const BasicForm<S>& t, const Partition& p) {
  if (t.dim() != p.dim()) throw DimensionMismatch(p.dim(), t.dim());
  if (!t.has_degree(3)) throw std::invalid_argument("decompose_3form: expected a 3-form");
  Lambda3Decomposition<S> out{std::vector<BasicForm<S>>(p.block_count(), BasicForm<S>(t.dim())),
                              BasicForm<S>(t.dim()), BasicForm<S>(t.dim())};
  for (const auto& [idx, c] : t.terms()) {
    const auto cls = classify_monomial(p, {idx[0], idx[1], idx[2]});
    switch (cls.kind) {
      case MonomialKind::pure: out.pure[cls.blocks[0] - 1].add_term(idx, c); break;
      case MonomialKind::two_one: out.two_one.add_term(idx, c); break;
      case MonomialKind::mixed: out.mixed.add_term(idx, c); break;
    }
  }
  return out;
}

/// True iff every monomial of t meets three distinct blocks.
template <typename S>
bool is_split_type(const BasicForm<S>& t, const Partition& p) {
  const auto d = decompose_3form(t, p);
  return d.pure_is_zero() && d.two_one.is_zero();
}

}  // namespace spinlab
