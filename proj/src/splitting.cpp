#include "spinlab/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinlab {

const std::vector<int>& Partition::block(int i) const {
  if (i < 1 || i > block_count())
    throw std::out_of_range("block index " + std::to_string(i) + " outside 1.." +
                            std::to_string(block_count()));
  return blocks_[i - 1];
}

int Partition::largest_block_size() const {
  return blocks_.empty() ? 0 : static_cast<int>(blocks_.back().size());
}

int Partition::block_of(int index) const {
  if (index < 1 || index > n_)
    throw std::out_of_range("frame index " + std::to_string(index) + " outside 1.." +
                            std::to_string(n_));
  return block_of_[index];
}

Partition make_partition(int n, std::vector<std::vector<int>> blocks) {
  if (n < 1) throw std::invalid_argument("empty frame");
  std::vector<int> owner(n + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw std::invalid_argument("partition: block " + std::to_string(b + 1) + " is empty");
    for (int i : blocks[b]) {
      if (i < 1 || i > n)
        throw std::invalid_argument("partition: index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(n));
      if (owner[i] != 0)
        throw std::invalid_argument("partition: index " + std::to_string(i) +
                                    " appears in more than one block");
      owner[i] = static_cast<int>(b + 1);
    }
  }
  for (int i = 1; i <= n; ++i)
    if (owner[i] == 0)
      throw std::invalid_argument("partition: index " + std::to_string(i) + " is not covered");

  std::vector<int> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return blocks[a].size() < blocks[b].size(); });

  Partition p;
  p.n_ = n;
  p.block_of_.assign(n + 1, 0);
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    auto block = blocks[order[pos]];
    std::sort(block.begin(), block.end());
    for (int i : block) p.block_of_[i] = pos + 1;
    p.blocks_.push_back(std::move(block));
    p.labels_.push_back(order[pos] + 1);
  }
  return p;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "{";
  for (int b = 1; b <= p.block_count(); ++b) {
    if (b > 1) os << "|";
    for (std::size_t j = 0; j < p.block(b).size(); ++j) os << (j ? "," : "") << p.block(b)[j];
  }
  os << "}";
  return os.str();
}

MonomialClass classify_monomial(const Partition& p, const std::array<int, 3>& triple) {
  std::array<int, 3> b{p.block_of(triple[0]), p.block_of(triple[1]), p.block_of(triple[2])};
  if (triple[0] == triple[1] || triple[1] == triple[2] || triple[0] == triple[2])
    throw std::invalid_argument("classify_monomial: indices must be distinct");
  std::sort(b.begin(), b.end());
  if (b[0] == b[2]) return {MonomialKind::pure, {b[0]}};
  if (b[0] == b[1]) return {MonomialKind::two_one, {b[0], b[2]}};
  if (b[1] == b[2]) return {MonomialKind::two_one, {b[1], b[0]}};
  return {MonomialKind::mixed, {b[0], b[1], b[2]}};
}

std::string to_string(const MonomialClass& c) {
  std::ostringstream os;
  switch (c.kind) {
    case MonomialKind::pure: os << "pure"; break;
    case MonomialKind::two_one: os << "two_one"; break;
    case MonomialKind::mixed: os << "mixed"; break;
  }
  os << "(";
  for (std::size_t i = 0; i < c.blocks.size(); ++i) os << (i ? "," : "") << c.blocks[i];
  os << ")";
  return os.str();
}

}  // namespace spinlab
