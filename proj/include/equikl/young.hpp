#pragma once
/* Products of symmetric groups acting on a labelled ground set.
 *
 * A YoungGroup is determined by a set partition of the ground set into
 * blocks; the group is the direct product of the full symmetric groups on the
 * blocks.  Blocks are kept sorted internally and ordered by their smallest
 * label, so equal groups compare equal. */

#include <algorithm>
#include <compare>
#include <set>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace equikl {

class YoungGroup {
 public:
  YoungGroup() = default;  // the trivial group on the empty ground set

  YoungGroup(std::initializer_list<std::vector<int>> blocks)
      : YoungGroup(std::vector<std::vector<int>>(blocks)) {}

  explicit YoungGroup(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    std::set<int> seen;
    for (auto& b : blocks_) {
      require(!b.empty(), "group blocks must be nonempty");
      std::sort(b.begin(), b.end());
      for (int x : b) require(seen.insert(x).second, "group blocks must be disjoint");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  }

  // One block per element: the trivial group.
  static YoungGroup singletons(const std::vector<int>& ground) {
    std::vector<std::vector<int>> blocks;
    for (int x : ground) blocks.push_back({x});
    return YoungGroup(std::move(blocks));
  }

  // A single block: the full symmetric group on the ground set.
  static YoungGroup full(const std::vector<int>& ground) {
    if (ground.empty()) return YoungGroup();
    return YoungGroup({ground});
  }

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_[i]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::vector<int> ground() const {
    std::vector<int> g;
    for (const auto& b : blocks_) g.insert(g.end(), b.begin(), b.end());
    std::sort(g.begin(), g.end());
    return g;
  }

  int ground_size() const {
    int n = 0;
    for (const auto& b : blocks_) n += static_cast<int>(b.size());
    return n;
  }

  long long order() const {
    long long o = 1;
    for (const auto& b : blocks_)
      for (size_t i = 2; i <= b.size(); ++i) o *= static_cast<long long>(i);
    return o;
  }

  // Index of the block containing label x, or -1.
  int block_of(int x) const {
    for (int i = 0; i < num_blocks(); ++i)
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return i;
    return -1;
  }

  // True when every block of this group lies inside a block of coarser.
  bool refines(const YoungGroup& coarser) const {
    for (const auto& b : blocks_) {
      const int j = coarser.block_of(b[0]);
      if (j < 0) return false;
      const auto& big = coarser.block(j);
      for (int x : b)
        if (!std::binary_search(big.begin(), big.end(), x)) return false;
    }
    return true;
  }

  friend bool operator==(const YoungGroup&, const YoungGroup&) = default;
  friend auto operator<=>(const YoungGroup&, const YoungGroup&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/* One partition per group block, listed in the group's block order. */
using MultiPartition = std::vector<Partition>;

}  // namespace equikl
