#pragma once
/* Matroids on small labelled ground sets, stored by their list of bases.
 *
 * Subsets of the ground set are uint32_t bitmasks indexed by the position of
 * a label in the sorted ground set; the public API speaks in labels.  All
 * queries (rank, closure, flats, minors, connectivity) are answered from the
 * basis list, which keeps every operation exact and obviously correct at the
 * sizes this library targets (up to 20 elements). */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "util.hpp"

namespace equikl {

using Mask = std::uint32_t;

class Matroid {
 public:
  static constexpr int kMaxElements = 20;

  // Validating constructor for externally supplied bases.
  static Matroid from_bases(std::vector<int> ground,
                            const std::vector<std::vector<int>>& bases) {
    Matroid m(std::move(ground), {});
    require(!bases.empty(), "a matroid needs at least one basis");
    std::set<Mask> set;
    for (const auto& b : bases) set.insert(m.mask_of(b));
    m.bases_.assign(set.begin(), set.end());
    const int r = std::popcount(m.bases_[0]);
    for (Mask b : m.bases_)
      require(std::popcount(b) == r, "bases must all have the same size");
    m.rank_ = r;
    m.validate_exchange();
    return m;
  }

  static Matroid uniform(int k, std::vector<int> ground) {
    const int n = static_cast<int>(ground.size());
    require(k >= 0 && k <= n, "uniform matroid rank out of range");
    Matroid m(std::move(ground), {});
    m.for_each_subset(m.full_mask(), k, [&](Mask s) { m.bases_.push_back(s); });
    std::sort(m.bases_.begin(), m.bases_.end());
    m.rank_ = k;
    return m;
  }

  static Matroid boolean_matroid(std::vector<int> ground) {
    const int n = static_cast<int>(ground.size());
    return uniform(n, std::move(ground));
  }

  // The graphic matroid of an n-cycle: every element but one is a basis.
  static Matroid cycle(std::vector<int> ground) {
    const int n = static_cast<int>(ground.size());
    require(n >= 1, "a cycle needs at least one element");
    return uniform(n - 1, std::move(ground));
  }

  /* Two cycles, of a and b edges, glued along one shared edge; the shared
   * edge is then removed.  Ground set 1..a+b-1 with the first cycle on
   * {1..a}, the second on {a..a+b-1}, and label a playing the glued edge.
   * The bases are the (a+b-3)-subsets containing neither full cycle. */
  static Matroid glued_cycles(int a, int b) {
    require(a >= 2 && b >= 2, "each glued cycle needs at least two edges");
    require(a + b - 1 <= kMaxElements, "ground set too large");
    std::vector<int> ground;
    for (int x = 1; x <= a + b - 1; ++x) ground.push_back(x);
    Matroid m(std::move(ground), {});
    const Mask ca = (Mask{1} << a) - 1;                       // {1..a}
    const Mask cb = m.full_mask() ^ ((Mask{1} << (a - 1)) - 1);  // {a..a+b-1}
    m.for_each_subset(m.full_mask(), a + b - 3, [&](Mask s) {
      if ((s & ca) != ca && (s & cb) != cb) m.bases_.push_back(s);
    });
    std::sort(m.bases_.begin(), m.bases_.end());
    m.rank_ = a + b - 3;
    ensure(static_cast<long long>(m.bases_.size()) ==
               binomial(a + b - 1, 2) - binomial(a - 1, 2) - binomial(b - 1, 2),
           "glued cycle basis count mismatch");
    return m;
  }

  /* Rank-k matroid on ground in which the k-subsets meeting the complement
   * of flat_labels in more than k - r elements are the nonbases. */
  static Matroid lambda_matroid(int r, int k, const std::vector<int>& flat_labels,
                                std::vector<int> ground) {
    Matroid m(std::move(ground), {});
    const Mask f = m.mask_of(flat_labels);
    const int nf = std::popcount(f);
    const int outside = m.size() - nf;
    require(r >= 1 && r <= std::min(nf, k), "rank parameters out of range");
    require(k - r <= outside, "the complement of the flat is too small");
    m.for_each_subset(m.full_mask(), k, [&](Mask s) {
      if (std::popcount(s & ~f & m.full_mask()) <= k - r) m.bases_.push_back(s);
    });
    std::sort(m.bases_.begin(), m.bases_.end());
    m.rank_ = k;
    return m;
  }

  // The direct sum of uniform matroids of ranks k - r and r on the two parts.
  static Matroid pi_matroid(int r, int k, const std::vector<int>& flat_labels,
                            const std::vector<int>& ground) {
    std::vector<int> outside;
    std::set<int> fs(flat_labels.begin(), flat_labels.end());
    for (int x : ground)
      if (!fs.count(x)) outside.push_back(x);
    require(static_cast<int>(fs.size()) == static_cast<int>(flat_labels.size()) &&
                static_cast<int>(outside.size()) + static_cast<int>(fs.size()) ==
                    static_cast<int>(ground.size()),
            "flat labels must be distinct members of the ground set");
    return direct_sum(uniform(k - r, outside), uniform(r, flat_labels));
  }

  static Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
    std::vector<int> ground = m1.ground_;
    ground.insert(ground.end(), m2.ground_.begin(), m2.ground_.end());
    Matroid m(std::move(ground), {});
    for (Mask b1 : m1.bases_) {
      std::vector<int> l1 = m1.labels_of(b1);
      for (Mask b2 : m2.bases_) {
        std::vector<int> l = l1;
        for (int x : m2.labels_of(b2)) l.push_back(x);
        m.bases_.push_back(m.mask_of(l));
      }
    }
    std::sort(m.bases_.begin(), m.bases_.end());
    m.rank_ = m1.rank_ + m2.rank_;
    return m;
  }

  // --- basic queries ---------------------------------------------------

  const std::vector<int>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  int rank() const { return rank_; }
  const std::vector<Mask>& bases_masks() const { return bases_; }
  Mask full_mask() const {
    return size() == 0 ? 0 : (size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1);
  }

  Mask mask_of(const std::vector<int>& labels) const {
    Mask m = 0;
    for (int x : labels) {
      const auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
      require(it != ground_.end() && *it == x, "label is not in the ground set");
      const Mask bit = Mask{1} << (it - ground_.begin());
      require(!(m & bit), "labels must be distinct");
      m |= bit;
    }
    return m;
  }

  std::vector<int> labels_of(Mask m) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (m & (Mask{1} << i)) out.push_back(ground_[i]);
    return out;
  }

  bool is_basis_mask(Mask m) const {
    return std::binary_search(bases_.begin(), bases_.end(), m);
  }

  int rank_of_mask(Mask s) const {
    int best = 0;
    for (Mask b : bases_) best = std::max(best, std::popcount(b & s));
    return best;
  }
  int rank_of(const std::vector<int>& labels) const { return rank_of_mask(mask_of(labels)); }

  Mask closure_mask(Mask s) const {
    const int r = rank_of_mask(s);
    Mask c = s;
    for (int i = 0; i < size(); ++i) {
      const Mask bit = Mask{1} << i;
      if (!(s & bit) && rank_of_mask(s | bit) == r) c |= bit;
    }
    return c;
  }
  std::vector<int> closure(const std::vector<int>& labels) const {
    return labels_of(closure_mask(mask_of(labels)));
  }

  bool is_flat_mask(Mask s) const { return closure_mask(s) == s; }

  std::vector<Mask> flats_masks() const {
    std::vector<Mask> out;
    const Mask full = full_mask();
    for (Mask s = 0;; ++s) {
      if (is_flat_mask(s)) out.push_back(s);
      if (s == full) break;
    }
    return out;
  }

  Mask loops_mask() const {
    Mask in_some = 0;
    for (Mask b : bases_) in_some |= b;
    return full_mask() & ~in_some;
  }
  std::vector<int> loops() const { return labels_of(loops_mask()); }
  bool loopless() const { return loops_mask() == 0; }

  Mask coloops_mask() const {
    Mask in_all = full_mask();
    for (Mask b : bases_) in_all &= b;
    return in_all;
  }
  std::vector<int> coloops() const { return labels_of(coloops_mask()); }

  // --- minors ----------------------------------------------------------

  Matroid minor(const std::vector<int>& contract, const std::vector<int>& remove) const {
    const Mask c = mask_of(contract), d = mask_of(remove);
    require((c & d) == 0, "contracted and deleted sets must be disjoint");
    const Mask keep = full_mask() & ~c & ~d;
    const int rc = rank_of_mask(c);
    const int r2 = rank_of_mask(full_mask() & ~d) - rc;
    Matroid m(labels_of(keep), {});
    for_each_subset(keep, r2, [&](Mask s) {
      if (rank_of_mask(s | c) == r2 + rc) m.bases_.push_back(compress(s, keep));
    });
    std::sort(m.bases_.begin(), m.bases_.end());
    m.rank_ = r2;
    ensure(!m.bases_.empty(), "a minor always has at least one basis");
    return m;
  }

  Matroid contraction(const std::vector<int>& contract) const { return minor(contract, {}); }
  Matroid deletion(const std::vector<int>& remove) const { return minor({}, remove); }
  Matroid restriction(const std::vector<int>& keep) const {
    mask_of(keep);  // validates membership and distinctness
    std::set<int> ks(keep.begin(), keep.end());
    std::vector<int> rest;
    for (int x : ground_)
      if (!ks.count(x)) rest.push_back(x);
    return minor({}, rest);
  }

  // --- structure -------------------------------------------------------

  bool is_connected() const {
    if (size() <= 1) return true;
    const Mask full = full_mask();
    for (Mask t = 1; t < full; ++t)
      if (rank_of_mask(t) + rank_of_mask(full & ~t) == rank_) return false;
    return true;
  }

  /* Flats whose restriction and whose contraction are both uniform. */
  std::vector<std::vector<int>> stressed_flats() const {
    std::vector<std::vector<int>> out;
    for (Mask f : flats_masks()) {
      const int r1 = rank_of_mask(f);
      bool ok = true;
      for_each_subset(f, r1, [&](Mask s) { ok = ok && rank_of_mask(s) == r1; });
      const Mask rest = full_mask() & ~f;
      if (ok && rank_ - r1 <= std::popcount(rest))
        for_each_subset(rest, rank_ - r1,
                        [&](Mask s) { ok = ok && rank_of_mask(s | f) == rank_; });
      if (ok) out.push_back(labels_of(f));
    }
    return out;
  }

  /* True when no minor on four elements has rank 2 with exactly one loop,
   * one coloop, and a parallel pair. */
  bool is_elementary_split() const {
    if (size() < 4) return true;
    const int n = size();
    for (Mask kept = 0; kept <= full_mask(); ++kept) {
      if (std::popcount(kept) != 4) continue;
      const Mask others = full_mask() & ~kept;
      std::vector<int> other_pos;
      for (int i = 0; i < n; ++i)
        if (others & (Mask{1} << i)) other_pos.push_back(i);
      const int no = static_cast<int>(other_pos.size());
      for (Mask pick = 0; pick < (Mask{1} << no); ++pick) {
        Mask c = 0;
        for (int j = 0; j < no; ++j)
          if (pick & (Mask{1} << j)) c |= Mask{1} << other_pos[j];
        const Mask d = others & ~c;
        const Matroid m = minor(labels_of(c), labels_of(d));
        if (m.rank_ != 2) continue;
        if (std::popcount(m.loops_mask()) != 1) continue;
        if (std::popcount(m.coloops_mask()) != 1) continue;
        const Mask pair = m.full_mask() & ~m.loops_mask() & ~m.coloops_mask();
        if (m.rank_of_mask(pair) == 1) return false;
      }
    }
    return true;
  }

  /* Flats of the matroid, other than the full complement of {i}, whose union
   * with {i} is again a flat. */
  std::vector<std::vector<int>> si_set(int i) const {
    const Mask bit = mask_of({i});
    std::vector<std::vector<int>> out;
    for (Mask f : flats_masks()) {
      if (f & bit) continue;
      if (f == (full_mask() & ~bit)) continue;
      if (is_flat_mask(f | bit)) out.push_back(labels_of(f));
    }
    return out;
  }

  /* The same matroid with the i-th smallest label renamed to the i-th
   * smallest entry of new_ground; the basis masks carry over unchanged. */
  Matroid relabelled(std::vector<int> new_ground) const {
    require(static_cast<int>(new_ground.size()) == size(),
            "relabelling must preserve the number of elements");
    Matroid m(std::move(new_ground), bases_);
    m.rank_ = rank_;
    return m;
  }

  /* Ground relabelled to 1..n by sorted order, then the sorted basis masks:
   * equal keys mean equal matroids up to the canonical relabelling. */
  std::string canonical_key() const {
    std::string key = std::to_string(size()) + ":" + std::to_string(rank_) + ":";
    for (Mask b : bases_) key += std::to_string(b) + ",";
    return key;
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(std::vector<int> ground, std::vector<Mask> bases)
      : ground_(std::move(ground)), bases_(std::move(bases)) {
    std::sort(ground_.begin(), ground_.end());
    require(std::adjacent_find(ground_.begin(), ground_.end()) == ground_.end(),
            "ground labels must be distinct");
    require(size() <= kMaxElements, "ground set too large");
  }

  // Apply out to every subset of pool with exactly k bits.
  template <typename F>
  void for_each_subset(Mask pool, int k, F&& out) const {
    std::vector<int> pos;
    for (int i = 0; i < size(); ++i)
      if (pool & (Mask{1} << i)) pos.push_back(i);
    const int np = static_cast<int>(pos.size());
    if (k < 0 || k > np) return;
    std::vector<int> idx(k);
    std::function<void(int, int, Mask)> rec = [&](int start, int left, Mask acc) {
      if (left == 0) {
        out(acc);
        return;
      }
      for (int i = start; i <= np - left; ++i)
        rec(i + 1, left - 1, acc | (Mask{1} << pos[i]));
    };
    rec(0, k, 0);
  }

  // Re-index the bits of s (a subset of keep) to the new ground of keep only.
  static Mask compress(Mask s, Mask keep) {
    Mask out = 0;
    int j = 0;
    for (int i = 0; i < 32; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(keep & bit)) continue;
      if (s & bit) out |= Mask{1} << j;
      ++j;
    }
    return out;
  }

  void validate_exchange() {
    for (Mask b1 : bases_) {
      for (Mask b2 : bases_) {
        Mask only1 = b1 & ~b2;
        while (only1) {
          const Mask x = only1 & (~only1 + 1);
          only1 ^= x;
          bool found = false;
          Mask only2 = b2 & ~b1;
          while (only2 && !found) {
            const Mask y = only2 & (~only2 + 1);
            only2 ^= y;
            found = is_basis_mask((b1 ^ x) | y);
          }
          require(found, "the basis exchange property fails");
        }
      }
    }
  }

  std::vector<int> ground_;
  std::vector<Mask> bases_;
  int rank_ = 0;
};

inline std::vector<int> default_ground(int n) {
  std::vector<int> g;
  for (int x = 1; x <= n; ++x) g.push_back(x);
  return g;
}

}  // namespace equikl
