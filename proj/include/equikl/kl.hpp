#pragma once
/* The central solver.  For a loopless equivariant matroid of rank d it
 * computes the pair (P, Z) of graded virtual representations determined by:
 *
 *   - rank 0:  P = Z = the trivial representation in degree 0;
 *   - Z is the sum over orbits of flats [F] of x^{rk F} times the induction
 *     of P of the contraction by F;
 *   - deg P < d/2, and Z is palindromic of degree d.
 *
 * Writing R for the partial sum over orbits of nonempty flats, those
 * conditions force [x^j]P = [x^{d-j}]R - [x^j]R for 2j < d, and Z = P + R.
 * Results are memoized across matroids under canonical relabelling.
 *
 * A second, independent route to P and Z of a matroid is deletion_formula,
 * which expresses both in terms of minors relative to one deleted element;
 * agreement of the two routes is a deep consistency check exercised by the
 * test suite. */

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "equivariant.hpp"

namespace equikl {

struct KlPair {
  GradedVirtualRep p, z;
};

// The given group with element i cut out into its own singleton block.
inline YoungGroup stabilizer_of_point(const YoungGroup& g, int i) {
  require(g.block_of(i) >= 0, "element is not in the ground set of the group");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : g.blocks()) {
    std::vector<int> rest;
    for (int x : b)
      if (x != i) rest.push_back(x);
    if (!rest.empty()) blocks.push_back(std::move(rest));
  }
  blocks.push_back({i});
  return YoungGroup(std::move(blocks));
}

class KlEngine {
 public:
  KlPair compute(const EquivariantMatroid& em) {
    require(em.matroid().loopless(), "these invariants require a loopless matroid");
    const std::string key = em.cache_key();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return relabel_to(it->second, em);
    }
    KlPair canonical = solve(em.canonical_form());
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto [it, fresh] = cache_.emplace(key, std::move(canonical));
      return relabel_to(it->second, em);
    }
  }

  GradedVirtualRep kl(const EquivariantMatroid& em) { return compute(em).p; }
  GradedVirtualRep zpoly(const EquivariantMatroid& em) { return compute(em).z; }

  /* The middle coefficient of P when the rank is odd, zero otherwise. */
  VirtualRep tau(const EquivariantMatroid& em) {
    const int r = em.matroid().rank();
    if (r % 2 == 0) return VirtualRep::zero(em.group());
    return compute(em).p.coefficient((r - 1) / 2);
  }

  /* P and Z recomputed from the minors relative to a non-coloop element i,
   * over the stabilizer of i inside the given group:
   *
   *   P = ext(P of M\i) - x ext(P of M/i)
   *       + sum over orbits [F] of flats compatible with i of
   *         x^{(k - rk F)/2} Ind( tau(M/(F+i)) (x) P(M|F) (x) 1_{i} )
   *
   * where ext adds {i} back as a trivially-acted point.  The x ext(P of M/i)
   * term is omitted when i has a parallel partner, because the invariants of
   * a matroid vanish in the presence of loops.  Z satisfies the same
   * identity with Z(M|F) in the orbit sum and no x ext(...) term at all. */
  KlPair deletion_formula(const EquivariantMatroid& em, int i) {
    const Matroid& m = em.matroid();
    require(m.loopless(), "these invariants require a loopless matroid");
    const Mask bit = m.mask_of({i});
    require(!(m.coloops_mask() & bit), "the deletion identity needs a non-coloop element");
    const int k = m.rank();
    const YoungGroup wi = stabilizer_of_point(em.group(), i);

    std::vector<std::vector<int>> rest_blocks;
    for (const auto& b : wi.blocks())
      if (!(b.size() == 1 && b[0] == i)) rest_blocks.push_back(b);
    const YoungGroup w_rest(rest_blocks);
    const GradedVirtualRep point =
        graded_constant(VirtualRep::trivial(YoungGroup({{i}})));

    const KlPair of_deletion = compute(EquivariantMatroid(m.deletion({i}), w_rest));
    GradedVirtualRep p = graded_outer(of_deletion.p, point);
    GradedVirtualRep z = graded_outer(of_deletion.z, point);

    if (m.closure({i}) == std::vector<int>{i}) {
      const GradedVirtualRep pc = compute(EquivariantMatroid(m.contraction({i}), w_rest)).p;
      p -= graded_outer(pc, point).shifted(1);
    }

    /* Orbits of the compatible flats under the stabilizer of i, recognised by
     * their meet pattern with the blocks. */
    std::map<std::vector<int>, std::pair<std::vector<int>, long long>> classes;
    for (const auto& f : m.si_set(i)) {
      std::vector<int> sig(wi.num_blocks(), 0);
      for (int x : f) sig[wi.block_of(x)]++;
      auto [it, fresh] = classes.try_emplace(std::move(sig), f, 0);
      it->second.second++;
    }
    for (const auto& [sig, rep_count] : classes) {
      const std::vector<int>& f = rep_count.first;
      long long expected = 1;
      for (int b = 0; b < wi.num_blocks(); ++b)
        expected *= binomial(static_cast<int>(wi.block(b).size()), sig[b]);
      ensure(rep_count.second == expected,
             "the stabilizer of i must permute the compatible flats");

      std::vector<int> f_plus_i = f;
      f_plus_i.push_back(i);
      std::sort(f_plus_i.begin(), f_plus_i.end());

      // cut the blocks of wi along f
      std::vector<std::vector<int>> inside, outside;
      for (const auto& b : wi.blocks()) {
        if (b.size() == 1 && b[0] == i) continue;
        std::vector<int> in, out;
        for (int x : b)
          (std::binary_search(f.begin(), f.end(), x) ? in : out).push_back(x);
        if (!in.empty()) inside.push_back(std::move(in));
        if (!out.empty()) outside.push_back(std::move(out));
      }

      const VirtualRep t =
          tau(EquivariantMatroid(m.contraction(f_plus_i), YoungGroup(outside)));
      if (t.is_zero()) continue;
      const int rf = m.rank_of(f);
      ensure((k - rf) % 2 == 0, "a nonzero middle coefficient forces an even rank gap");

      const KlPair of_flat = compute(EquivariantMatroid(m.restriction(f), YoungGroup(inside)));
      const GradedVirtualRep common = graded_outer(graded_constant(t), point);
      p += graded_induce(graded_outer(common, of_flat.p), wi).shifted((k - rf) / 2);
      z += graded_induce(graded_outer(common, of_flat.z), wi).shifted((k - rf) / 2);
    }
    return {p, z};
  }

  // Number of entries currently memoized.
  size_t cache_size() {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

  // Snapshot and raw insertion, used by the on-disk cache.
  std::unordered_map<std::string, KlPair> snapshot() {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_;
  }
  void absorb(const std::string& key, KlPair pair) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, std::move(pair));
  }

 private:
  KlPair solve(const EquivariantMatroid& em) {
    const Matroid& m = em.matroid();
    const YoungGroup& W = em.group();
    const int d = m.rank();
    if (d == 0) {
      ensure(m.size() == 0, "a loopless matroid of rank zero has no elements");
      GradedVirtualRep one(W);
      one.add_term(0, VirtualRep::trivial(W));
      return {one, one};
    }

    GradedVirtualRep r_sum(W);
    r_sum.add_term(d, VirtualRep::trivial(W));  // the flat F = E
    for (const FlatOrbit& o : flat_orbits(em)) {
      if (o.representative.empty() ||
          static_cast<int>(o.representative.size()) == m.size())
        continue;
      const Matroid con = m.contraction(o.representative);
      ensure(con.rank() == d - o.flat_rank, "contraction by a flat drops rank exactly");
      ensure(con.loopless(), "contraction by a flat is loopless");

      std::vector<std::vector<int>> inside, outside;
      for (const auto& b : o.stabilizer.blocks()) {
        (std::binary_search(o.representative.begin(), o.representative.end(), b[0]) ? inside
                                                                                    : outside)
            .push_back(b);
      }
      const GradedVirtualRep pc = compute(EquivariantMatroid(con, YoungGroup(outside))).p;
      const GradedVirtualRep ext =
          graded_outer(pc, graded_constant(VirtualRep::trivial(YoungGroup(inside))));
      r_sum += graded_induce(ext, W).shifted(o.flat_rank);
    }

    GradedVirtualRep p(W);
    for (int j = 0; 2 * j < d; ++j)
      p.add_term(j, r_sum.coefficient(d - j) - r_sum.coefficient(j));

    KlPair out{p, p + r_sum};
    ensure(out.p.coefficient(0) == VirtualRep::trivial(W),
           "the degree-zero coefficient of P must be the trivial representation");
    ensure(is_palindromic(out.z, d), "Z must be palindromic of degree equal to the rank");
    ensure(2 * out.p.degree() < d, "P must have degree below half the rank");
    return out;
  }

  static KlPair relabel_to(const KlPair& canonical, const EquivariantMatroid& em) {
    std::map<int, int> from_canonical;
    for (int i = 0; i < em.matroid().size(); ++i)
      from_canonical[i + 1] = em.matroid().ground()[i];
    return {relabel(canonical.p, from_canonical), relabel(canonical.z, from_canonical)};
  }

  std::unordered_map<std::string, KlPair> cache_;
  std::mutex mu_;
};

inline KlEngine& default_engine() {
  static KlEngine engine;
  return engine;
}

/* Z of a matroid extended by a coloop: tensor with the new trivially-acted
 * point, then multiply by (1 + x). */
inline GradedVirtualRep z_coloop(const GradedVirtualRep& z_del, int coloop_label) {
  const GradedVirtualRep point =
      graded_constant(VirtualRep::trivial(YoungGroup({{coloop_label}})));
  return scale_by_binomial(graded_outer(z_del, point), 1);
}

// Degree -> dimension of the coefficient; the forgetful image of f.
inline std::map<int, long long> dimension_polynomial(const GradedVirtualRep& f) {
  std::map<int, long long> out;
  for (const auto& [d, r] : f.terms()) out[d] = r.dimension();
  return out;
}

}  // namespace equikl
