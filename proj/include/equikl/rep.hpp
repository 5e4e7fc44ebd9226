#pragma once
/* Exact arithmetic in the representation ring of a YoungGroup.
 *
 * A VirtualRep is an integer combination of irreducibles; an irreducible of a
 * product of symmetric groups is an outer tensor of Specht modules, recorded
 * as one partition per block (a MultiPartition).  Induction and restriction
 * along inclusions of Young groups reduce to Littlewood-Richardson numbers.
 * GradedVirtualRep is a polynomial in one variable with VirtualRep
 * coefficients. */

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lr.hpp"
#include "util.hpp"
#include "young.hpp"

namespace equikl {

class VirtualRep {
 public:
  VirtualRep() = default;  // zero rep of the empty group
  explicit VirtualRep(YoungGroup g) : group_(std::move(g)) {}

  static VirtualRep zero(const YoungGroup& g) { return VirtualRep(g); }

  // The one-dimensional trivial representation: the single-row shape per block.
  static VirtualRep trivial(const YoungGroup& g) {
    VirtualRep r(g);
    MultiPartition mp;
    for (const auto& b : g.blocks())
      mp.push_back(Partition::hook_with_fat_arm(static_cast<int>(b.size()), 0, 0));
    r.add(mp, 1);
    return r;
  }

  static VirtualRep irreducible(const YoungGroup& g, const MultiPartition& mp) {
    VirtualRep r(g);
    r.add(mp, 1);
    return r;
  }

  const YoungGroup& group() const { return group_; }
  const std::map<MultiPartition, long long>& terms() const { return terms_; }

  void add(const MultiPartition& mp, long long c) {
    require(static_cast<int>(mp.size()) == group_.num_blocks(),
            "multipartition must have one partition per block");
    for (int i = 0; i < group_.num_blocks(); ++i)
      require(mp[i].size() == static_cast<int>(group_.block(i).size()),
              "partition size must match block size");
    if (c == 0) return;
    auto it = terms_.find(mp);
    if (it == terms_.end()) {
      terms_.emplace(mp, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  long long coefficient(const MultiPartition& mp) const {
    auto it = terms_.find(mp);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }

  // True when no irreducible occurs with negative multiplicity.
  bool is_honest() const {
    for (const auto& [mp, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  long long dimension() const {
    long long total = 0;
    for (const auto& [mp, c] : terms_) {
      long long d = c;
      for (const auto& la : mp) d *= specht_dim(la);
      total += d;
    }
    return total;
  }

  VirtualRep& operator+=(const VirtualRep& o) {
    require(group_ == o.group_, "representations live over different groups");
    for (const auto& [mp, c] : o.terms_) add(mp, c);
    return *this;
  }
  VirtualRep& operator-=(const VirtualRep& o) {
    require(group_ == o.group_, "representations live over different groups");
    for (const auto& [mp, c] : o.terms_) add(mp, -c);
    return *this;
  }
  VirtualRep& operator*=(long long s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [mp, c] : terms_) c *= s;
    }
    return *this;
  }
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend VirtualRep operator*(VirtualRep a, long long s) { return a *= s; }
  friend VirtualRep operator*(long long s, VirtualRep a) { return a *= s; }
  friend VirtualRep operator-(VirtualRep a) { return a *= -1; }

  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

 private:
  YoungGroup group_;
  std::map<MultiPartition, long long> terms_;
};

/* Outer tensor product over the disjoint union of the two ground sets. */
inline VirtualRep outer_tensor(const VirtualRep& a, const VirtualRep& b) {
  std::vector<std::vector<int>> blocks = a.group().blocks();
  const auto& bb = b.group().blocks();
  blocks.insert(blocks.end(), bb.begin(), bb.end());
  const YoungGroup g(blocks);  // validates disjointness, re-sorts blocks

  // Position of each original block in the merged canonical order.
  std::vector<int> pos;
  for (const auto& blk : blocks) pos.push_back(g.block_of(blk[0]));

  VirtualRep out(g);
  const int na = a.group().num_blocks();
  for (const auto& [mp_a, ca] : a.terms()) {
    for (const auto& [mp_b, cb] : b.terms()) {
      MultiPartition mp(g.num_blocks());
      for (int i = 0; i < na; ++i) mp[pos[i]] = mp_a[i];
      for (size_t i = 0; i < mp_b.size(); ++i) mp[pos[na + i]] = mp_b[i];
      out.add(mp, ca * cb);
    }
  }
  return out;
}

namespace detail {

/* Cross product of per-block decompositions into a rep over g. */
inline void cross_terms(VirtualRep& out, const YoungGroup& g,
                        const std::vector<std::map<Partition, long long>>& factors,
                        long long scale) {
  MultiPartition mp(g.num_blocks());
  std::function<void(int, long long)> rec = [&](int i, long long c) {
    if (i == g.num_blocks()) {
      out.add(mp, c);
      return;
    }
    for (const auto& [la, f] : factors[i]) {
      mp[i] = la;
      rec(i + 1, c * f);
    }
  };
  rec(0, scale);
}

}  // namespace detail

/* Induction along an inclusion of Young groups: every block of r's group must
 * lie inside a block of W, and the ground sets must agree. */
inline VirtualRep induce(const VirtualRep& r, const YoungGroup& W) {
  const YoungGroup& sub = r.group();
  require(sub.refines(W) && sub.ground() == W.ground(),
          "induction requires a Young subgroup on the same ground set");

  // Sub-blocks inside each W-block, in canonical order.
  std::vector<std::vector<int>> members(W.num_blocks());
  for (int i = 0; i < sub.num_blocks(); ++i)
    members[W.block_of(sub.block(i)[0])].push_back(i);

  VirtualRep out(W);
  for (const auto& [mp, c] : r.terms()) {
    std::vector<std::map<Partition, long long>> factors(W.num_blocks());
    for (int j = 0; j < W.num_blocks(); ++j) {
      std::map<Partition, long long> acc = {{Partition(), 1}};
      for (int i : members[j]) {
        std::map<Partition, long long> next;
        for (const auto& [sigma, cs] : acc)
          for (const auto& [tau, ct] : lr_product(sigma, mp[i])) next[tau] += cs * ct;
        acc = std::move(next);
      }
      factors[j] = std::move(acc);
    }
    detail::cross_terms(out, W, factors, c);
  }
  return out;
}

/* Restriction to a Young subgroup: every block of W must lie inside a block
 * of r's group, and the ground sets must agree. */
inline VirtualRep restrict_to(const VirtualRep& r, const YoungGroup& W) {
  const YoungGroup& big = r.group();
  require(W.refines(big) && W.ground() == big.ground(),
          "restriction requires a Young subgroup on the same ground set");

  std::vector<std::vector<int>> members(big.num_blocks());
  for (int j = 0; j < W.num_blocks(); ++j)
    members[big.block_of(W.block(j)[0])].push_back(j);

  VirtualRep out(W);
  for (const auto& [mp, c] : r.terms()) {
    /* Split each big-block partition along its sub-block sizes by iterated
     * two-step branching; collect per-big-block maps keyed by the tuple of
     * pieces, then place pieces at their global W positions. */
    std::vector<std::map<MultiPartition, long long>> split(big.num_blocks());
    for (int i = 0; i < big.num_blocks(); ++i) {
      std::map<MultiPartition, long long> acc;
      std::map<std::pair<MultiPartition, Partition>, long long> state = {{{{}, mp[i]}, 1}};
      const auto& subs = members[i];
      for (size_t t = 0; t + 1 < subs.size(); ++t) {
        const int d = static_cast<int>(W.block(subs[t]).size());
        std::map<std::pair<MultiPartition, Partition>, long long> next;
        for (const auto& [key, cs] : state) {
          for (const auto& [piece, ct] : lr_restrict(key.second, d)) {
            auto prefix = key.first;
            prefix.push_back(piece.first);
            next[{std::move(prefix), piece.second}] += cs * ct;
          }
        }
        state = std::move(next);
      }
      for (auto& [key, cs] : state) {
        MultiPartition pieces = key.first;
        if (!subs.empty()) pieces.push_back(key.second);  // the final remainder
        acc[std::move(pieces)] += cs;
      }
      split[i] = std::move(acc);
    }

    MultiPartition mp_out(W.num_blocks());
    std::function<void(int, long long)> rec = [&](int i, long long cc) {
      if (i == big.num_blocks()) {
        out.add(mp_out, cc);
        return;
      }
      for (const auto& [pieces, cs] : split[i]) {
        for (size_t t = 0; t < pieces.size(); ++t) mp_out[members[i][t]] = pieces[t];
        rec(i + 1, cc * cs);
      }
    };
    rec(0, c);
  }
  return out;
}

/* Remove a ground element that forms its own block and carries the trivial
 * one-box partition in every term. */
inline VirtualRep drop_singleton_block(const VirtualRep& r, int label) {
  const YoungGroup& g = r.group();
  const int i = g.block_of(label);
  require(i >= 0 && g.block(i).size() == 1, "label must form a singleton block");
  std::vector<std::vector<int>> blocks = g.blocks();
  blocks.erase(blocks.begin() + i);
  VirtualRep out((YoungGroup(blocks)));
  for (const auto& [mp, c] : r.terms()) {
    require(mp[i] == Partition::of({1}), "dropped block must carry the trivial factor");
    MultiPartition rest = mp;
    rest.erase(rest.begin() + i);
    out.add(rest, c);
  }
  return out;
}

class GradedVirtualRep {
 public:
  GradedVirtualRep() = default;
  explicit GradedVirtualRep(YoungGroup g) : group_(std::move(g)) {}

  static GradedVirtualRep zero(const YoungGroup& g) { return GradedVirtualRep(g); }

  const YoungGroup& group() const { return group_; }
  const std::map<int, VirtualRep>& terms() const { return coeffs_; }

  VirtualRep coefficient(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? VirtualRep::zero(group_) : it->second;
  }

  void add_term(int d, const VirtualRep& r) {
    require(r.group() == group_, "coefficient lives over the wrong group");
    require(d >= 0, "negative degrees are not allowed");
    if (r.is_zero()) return;
    auto it = coeffs_.find(d);
    if (it == coeffs_.end()) {
      coeffs_.emplace(d, r);
    } else if ((it->second += r).is_zero()) {
      coeffs_.erase(it);
    }
  }

  // Largest degree with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  bool is_zero() const { return coeffs_.empty(); }

  bool is_honest() const {
    for (const auto& [d, r] : coeffs_)
      if (!r.is_honest()) return false;
    return true;
  }

  long long dimension(int d) const { return coefficient(d).dimension(); }

  GradedVirtualRep shifted(int k) const {
    GradedVirtualRep out(group_);
    for (const auto& [d, r] : coeffs_) out.add_term(d + k, r);
    return out;
  }

  GradedVirtualRep& operator+=(const GradedVirtualRep& o) {
    require(group_ == o.group_, "polynomials live over different groups");
    for (const auto& [d, r] : o.coeffs_) add_term(d, r);
    return *this;
  }
  GradedVirtualRep& operator-=(const GradedVirtualRep& o) {
    require(group_ == o.group_, "polynomials live over different groups");
    for (const auto& [d, r] : o.coeffs_) add_term(d, -r);
    return *this;
  }
  friend GradedVirtualRep operator+(GradedVirtualRep a, const GradedVirtualRep& b) {
    return a += b;
  }
  friend GradedVirtualRep operator-(GradedVirtualRep a, const GradedVirtualRep& b) {
    return a -= b;
  }
  friend GradedVirtualRep operator-(GradedVirtualRep a) {
    for (auto& [d, r] : a.coeffs_) r *= -1;
    return a;
  }

  friend bool operator==(const GradedVirtualRep&, const GradedVirtualRep&) = default;

 private:
  YoungGroup group_;
  std::map<int, VirtualRep> coeffs_;
};

inline GradedVirtualRep graded_constant(const VirtualRep& r) {
  GradedVirtualRep out(r.group());
  out.add_term(0, r);
  return out;
}

// Multiply by (1 + x)^k.
inline GradedVirtualRep scale_by_binomial(const GradedVirtualRep& f, int k) {
  require(k >= 0, "binomial power must be nonnegative");
  GradedVirtualRep out(f.group());
  for (const auto& [d, r] : f.terms())
    for (int j = 0; j <= k; ++j) out.add_term(d + j, r * binomial(k, j));
  return out;
}

inline GradedVirtualRep graded_outer(const GradedVirtualRep& a, const GradedVirtualRep& b) {
  std::vector<std::vector<int>> blocks = a.group().blocks();
  const auto& bb = b.group().blocks();
  blocks.insert(blocks.end(), bb.begin(), bb.end());
  GradedVirtualRep out((YoungGroup(blocks)));
  for (const auto& [da, ra] : a.terms())
    for (const auto& [db, rb] : b.terms()) out.add_term(da + db, outer_tensor(ra, rb));
  return out;
}

inline GradedVirtualRep graded_induce(const GradedVirtualRep& f, const YoungGroup& W) {
  GradedVirtualRep out(W);
  for (const auto& [d, r] : f.terms()) out.add_term(d, induce(r, W));
  return out;
}

inline GradedVirtualRep graded_restrict(const GradedVirtualRep& f, const YoungGroup& W) {
  GradedVirtualRep out(W);
  for (const auto& [d, r] : f.terms()) out.add_term(d, restrict_to(r, W));
  return out;
}

inline GradedVirtualRep drop_singleton_block(const GradedVirtualRep& f, int label) {
  const int i = f.group().block_of(label);
  require(i >= 0 && f.group().block(i).size() == 1, "label must form a singleton block");
  std::vector<std::vector<int>> blocks = f.group().blocks();
  blocks.erase(blocks.begin() + i);
  GradedVirtualRep out((YoungGroup(blocks)));
  for (const auto& [d, r] : f.terms()) out.add_term(d, drop_singleton_block(r, label));
  return out;
}

// True when coefficient(j) == coefficient(d - j) for all degrees.
inline bool is_palindromic(const GradedVirtualRep& f, int d) {
  if (f.degree() > d) return false;
  for (int j = 0; 2 * j <= d; ++j)
    if (f.coefficient(j) != f.coefficient(d - j)) return false;
  return true;
}

}  // namespace equikl
