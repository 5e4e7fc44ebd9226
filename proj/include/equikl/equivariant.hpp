#pragma once
/* A matroid together with a Young group acting on its ground set by matroid
 * automorphisms, and the orbit decomposition of its lattice of flats.
 *
 * For a product of symmetric groups acting block-wise, two subsets lie in the
 * same orbit exactly when they meet every block in the same number of
 * elements, so orbits of flats are recognised by that signature; the orbit
 * enumeration double-checks the action by verifying that each signature class
 * has the full predicted size. */

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "rep.hpp"
#include "util.hpp"
#include "young.hpp"

namespace equikl {

class EquivariantMatroid {
 public:
  EquivariantMatroid(Matroid m, YoungGroup g) : matroid_(std::move(m)), group_(std::move(g)) {
    require(group_.ground() == matroid_.ground(),
            "the group must act on the matroid's ground set");
    /* Adjacent transpositions within blocks generate the group; the action is
     * by automorphisms iff each of them maps the basis list to itself. */
    for (const auto& block : group_.blocks()) {
      for (size_t j = 0; j + 1 < block.size(); ++j) {
        const Mask b1 = matroid_.mask_of({block[j]});
        const Mask b2 = matroid_.mask_of({block[j + 1]});
        for (Mask b : matroid_.bases_masks()) {
          Mask swapped = b;
          const bool has1 = b & b1, has2 = b & b2;
          if (has1 != has2) swapped = (b ^ b1) ^ b2;
          require(matroid_.is_basis_mask(swapped),
                  "the group does not preserve the matroid");
        }
      }
    }
  }

  const Matroid& matroid() const { return matroid_; }
  const YoungGroup& group() const { return group_; }

  // Ground set renamed to 1..n in sorted order, for memoization.
  EquivariantMatroid canonical_form() const {
    std::map<int, int> to_canonical;
    for (int i = 0; i < matroid_.size(); ++i) to_canonical[matroid_.ground()[i]] = i + 1;
    std::vector<std::vector<int>> blocks;
    for (const auto& b : group_.blocks()) {
      std::vector<int> nb;
      for (int x : b) nb.push_back(to_canonical.at(x));
      blocks.push_back(std::move(nb));
    }
    return EquivariantMatroid(matroid_.relabelled(default_ground(matroid_.size())),
                              YoungGroup(std::move(blocks)));
  }

  /* Canonical matroid key plus the block pattern of the group, written as the
   * block index of each ground position. */
  std::string cache_key() const {
    std::string key = matroid_.canonical_key() + "#";
    for (int x : matroid_.ground()) key += std::to_string(group_.block_of(x)) + ".";
    return key;
  }

 private:
  Matroid matroid_;
  YoungGroup group_;
};

struct FlatOrbit {
  std::vector<int> representative;  // the flat with the smallest bitmask
  int flat_rank = 0;
  long long orbit_size = 0;
  YoungGroup stabilizer;  // blocks of the group cut along the representative
};

inline std::vector<FlatOrbit> flat_orbits(const EquivariantMatroid& em) {
  const Matroid& m = em.matroid();
  const YoungGroup& g = em.group();

  std::map<std::vector<int>, std::pair<Mask, long long>> classes;  // signature -> (rep, count)
  for (Mask f : m.flats_masks()) {
    std::vector<int> sig(g.num_blocks(), 0);
    for (int x : m.labels_of(f)) sig[g.block_of(x)]++;
    auto [it, fresh] = classes.try_emplace(std::move(sig), f, 0);
    it->second.second++;
    if (f < it->second.first) it->second.first = f;
  }

  std::vector<FlatOrbit> out;
  for (const auto& [sig, rep_count] : classes) {
    FlatOrbit o;
    o.representative = m.labels_of(rep_count.first);
    o.flat_rank = m.rank_of_mask(rep_count.first);
    o.orbit_size = rep_count.second;

    long long expected = 1;
    for (int i = 0; i < g.num_blocks(); ++i)
      expected *= binomial(static_cast<int>(g.block(i).size()), sig[i]);
    ensure(o.orbit_size == expected,
           "every subset in the orbit of a flat must itself be a flat");

    std::vector<std::vector<int>> blocks;
    for (const auto& b : g.blocks()) {
      std::vector<int> in, outb;
      for (int x : b)
        (std::binary_search(o.representative.begin(), o.representative.end(), x) ? in : outb)
            .push_back(x);
      if (!in.empty()) blocks.push_back(std::move(in));
      if (!outb.empty()) blocks.push_back(std::move(outb));
    }
    o.stabilizer = YoungGroup(std::move(blocks));
    out.push_back(std::move(o));
  }

  std::sort(out.begin(), out.end(), [](const FlatOrbit& a, const FlatOrbit& b) {
    if (a.flat_rank != b.flat_rank) return a.flat_rank < b.flat_rank;
    return a.representative < b.representative;
  });
  return out;
}

/* Rename ground labels of a representation through an injective map;
 * blocks may change their canonical order, so terms are re-indexed. */
inline VirtualRep relabel(const VirtualRep& r, const std::map<int, int>& label_map) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : r.group().blocks()) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(label_map.at(x));
    blocks.push_back(std::move(nb));
  }
  const YoungGroup g(blocks);
  std::vector<int> pos;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    pos.push_back(g.block_of(b[0]));
  }
  VirtualRep out(g);
  for (const auto& [mp, c] : r.terms()) {
    MultiPartition nmp(g.num_blocks());
    for (size_t i = 0; i < mp.size(); ++i) nmp[pos[i]] = mp[i];
    out.add(nmp, c);
  }
  return out;
}

inline GradedVirtualRep relabel(const GradedVirtualRep& f, const std::map<int, int>& label_map) {
  GradedVirtualRep out = GradedVirtualRep::zero([&] {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : f.group().blocks()) {
      std::vector<int> nb;
      for (int x : b) nb.push_back(label_map.at(x));
      blocks.push_back(std::move(nb));
    }
    return YoungGroup(std::move(blocks));
  }());
  for (const auto& [d, r] : f.terms()) out.add_term(d, relabel(r, label_map));
  return out;
}

}  // namespace equikl
