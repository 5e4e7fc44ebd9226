#pragma once
/* Integer partitions and dimensions of the associated irreducible
 * symmetric-group representations (hook length formula).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace equikl {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 1 << 30;
    for (int p : parts_) {
      require(p > 0 && p <= prev, "partition parts must be positive and weakly decreasing");
      prev = p;
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  static Partition of(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
  }

  /* Build [a, b^eb, c^ec] style shapes programmatically. */
  static Partition hook_with_fat_arm(int first, int twos, int ones) {
    std::vector<int> parts;
    if (first > 0) parts.push_back(first);
    parts.insert(parts.end(), twos, 2);
    parts.insert(parts.end(), ones, 1);
    return Partition(std::move(parts));
  }

  int size() const { return size_; }                      // number of boxes
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return i >= 0 && i < rows() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
      if (mu.parts_[i] > parts_[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
      c.assign(parts_[0], 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    }
    return Partition(std::move(c));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Dimension of the irreducible S_n representation indexed by la (n = la.size()).
inline long long specht_dim(const Partition& la) {
  static std::map<Partition, long long> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(la);
    if (it != cache.end()) return it->second;
  }
  const int n = la.size();
  require(n <= 33, "partition too large for exact dimension arithmetic");
  Partition conj = la.conjugate();
  unsigned __int128 fact = 1, hooks = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned>(i);
  for (int r = 0; r < la.rows(); ++r)
    for (int c = 0; c < la.part(r); ++c)
      hooks *= static_cast<unsigned>(la.part(r) - c + conj.part(c) - r - 1);
  ensure(hooks != 0 && fact % hooks == 0, "hook product must divide the factorial");
  long long dim = static_cast<long long>(fact / hooks);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(la, dim);
  return dim;
}

}  // namespace equikl
