#pragma once
/* Closed-form and valuative evaluations of the KL polynomial:
 *  - uniform matroids under the full symmetric group,
 *  - corank-one uniform matroids (cycle matroids),
 *  - two cycles glued along a shared edge,
 *  - elementary split matroids via corrections at their stressed flats,
 *  - connected corank-two matroids, where the relaxation piece at a flat is
 *    evaluated through an explicit chain subdivision of its base polytope
 *    into glued-cycle matroids whenever the acting group preserves it.
 */

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "equivariant.hpp"
#include "errors.hpp"
#include "kl.hpp"
#include "matroid.hpp"
#include "partition.hpp"
#include "rep.hpp"
#include "young.hpp"

namespace equikl {

namespace detail {

/* Relabel a polynomial whose group lives on 1..n onto the given labels,
 * preserving order. */
inline GradedVirtualRep onto_labels(const GradedVirtualRep& f, const std::vector<int>& labels) {
  std::map<int, int> to;
  int next = 1;
  for (int x : labels) to[next++] = x;
  return relabel(f, to);
}

}  // namespace detail

/* P of the rank-k uniform matroid on n elements under the full symmetric
 * group on 1..n.  The constant coefficient is the trivial representation and
 * the degree-j coefficient for j >= 1 is the multiplicity-free sum of the
 * irreducibles [n-2j-b+1, b+1, 2^(j-1)] over 1 <= b <= min(n-k, k-2j). */
inline GradedVirtualRep uniform_kl_sn(int k, int n) {
  require(0 <= k && k <= n, "uniform matroid rank out of range");
  require(k >= 1 || n == 0, "a loopless uniform matroid needs positive rank");
  if (n == 0) return graded_constant(VirtualRep::trivial(YoungGroup{}));
  const YoungGroup sn = YoungGroup::full(default_ground(n));
  GradedVirtualRep out(sn);
  out.add_term(0, VirtualRep::trivial(sn));
  for (int j = 1; std::min(n - k, k - 2 * j) >= 1; ++j) {
    VirtualRep coeff(sn);
    for (int b = 1; b <= std::min(n - k, k - 2 * j); ++b) {
      std::vector<int> parts = {n - 2 * j - b + 1, b + 1};
      parts.insert(parts.end(), j - 1, 2);
      coeff.add({Partition(std::move(parts))}, 1);
    }
    out.add_term(j, coeff);
  }
  return out;
}

/* P of the corank-one uniform matroid (the cycle matroid of an n-cycle)
 * under the full symmetric group: the trivial constant term plus [n-2j, 2^j]
 * in degree j for every j >= 1 with n - 2j >= 2. */
inline GradedVirtualRep corank1_kl_sn(int n) {
  require(n >= 2, "a loopless corank-one uniform matroid needs at least two elements");
  const YoungGroup sn = YoungGroup::full(default_ground(n));
  GradedVirtualRep out(sn);
  out.add_term(0, VirtualRep::trivial(sn));
  for (int j = 1; n - 2 * j >= 2; ++j) {
    std::vector<int> parts = {n - 2 * j};
    parts.insert(parts.end(), j, 2);
    out.add_term(j, VirtualRep::irreducible(sn, {Partition(std::move(parts))}));
  }
  return out;
}

/* P of two cycles of a and b edges glued along a shared edge.  Labels follow
 * the glued-cycle factory: ground 1..a+b-1 with the shared edge labelled a.
 * The result lives over the group fixing the shared edge and permuting each
 * cycle's remaining edges, with blocks {1..a-1}, {a}, {a+1..a+b-1}.  It is
 * the restriction of the corank-one closed form on the a+b-2 non-shared
 * labels, minus x times the product of the two single-cycle closed forms
 * (the subtracted term vanishes for a two-edge cycle, whose contraction
 * keeps a loop). */
inline GradedVirtualRep glued_cycles_kl(int a, int b) {
  require(a >= 2 && b >= 2, "each glued cycle needs at least two edges");
  const int n = a + b - 1;
  std::vector<int> first_cycle, second_cycle;
  for (int x = 1; x <= a - 1; ++x) first_cycle.push_back(x);
  for (int x = a + 1; x <= n; ++x) second_cycle.push_back(x);

  GradedVirtualRep head = corank1_kl_sn(a + b - 2);
  std::vector<int> lo, hi;
  for (int x = 1; x <= a - 1; ++x) lo.push_back(x);
  for (int x = a; x <= a + b - 2; ++x) hi.push_back(x);
  head = graded_restrict(head, YoungGroup(std::vector<std::vector<int>>{lo, hi}));
  std::map<int, int> make_room;  // shift the second factor past the shared label
  for (int x = 1; x <= a - 1; ++x) make_room[x] = x;
  for (int x = a; x <= a + b - 2; ++x) make_room[x] = x + 1;
  head = relabel(head, make_room);

  const GradedVirtualRep point = graded_constant(VirtualRep::trivial(YoungGroup({{a}})));
  GradedVirtualRep out = graded_outer(head, point);
  if (a >= 3 && b >= 3) {
    const GradedVirtualRep left = corank1_kl_sn(a - 1);
    const GradedVirtualRep right = detail::onto_labels(corank1_kl_sn(b - 1), second_cycle);
    out -= graded_outer(graded_outer(left, point), right).shifted(1);
  }
  return out;
}

/* P of the rank-(n-2) matroid on 1..n whose nonbases are the complements of
 * the pairs inside {1..r+1}, evaluated through the chain subdivision of its
 * base polytope: glued-cycle pieces joined at positions r+2..n-1, with the
 * pairwise intersections being direct sums of two cycles cut after positions
 * r+2..n-2.  The group must preserve every piece, which forces all blocks of
 * size at least two to sit inside {1..r+1}. */
inline GradedVirtualRep lambda_kl_subdivision(int r, int n, const YoungGroup& W) {
  require(n >= 3 && 0 <= r && r <= n - 3, "relaxation parameters out of range");
  require(W.ground() == default_ground(n), "the group must act on the labels 1..n");
  for (const auto& blk : W.blocks())
    require(blk.size() == 1 || blk.back() <= r + 1,
            "blocks of size at least two must sit inside the relaxed prefix");
  GradedVirtualRep out(W);
  for (int c = r + 2; c <= n - 1; ++c)
    out += graded_restrict(glued_cycles_kl(c, n - c + 1), W);
  for (int c = r + 2; c <= n - 2; ++c) {
    std::vector<int> tail;
    for (int x = c + 1; x <= n; ++x) tail.push_back(x);
    const GradedVirtualRep facet =
        graded_outer(corank1_kl_sn(c), detail::onto_labels(corank1_kl_sn(n - c), tail));
    out -= graded_restrict(facet, W);
  }
  return out;
}

namespace detail {

/* Shared skeleton of the stressed-flat correction formulas.  The head term
 * is the uniform closed form restricted to the acting group; each orbit of
 * stressed flats F with rk F < |F| and F != E subtracts the induced
 * difference between the one-flat relaxation at F and its fully split
 * degeneration (a direct sum of two uniform matroids).  The evaluator
 * computes the relaxation polynomial for a given flat and stabilizer. */
template <class LambdaEval>
GradedVirtualRep stressed_correction_kl(const EquivariantMatroid& em, LambdaEval&& relaxation_kl) {
  const Matroid& m = em.matroid();
  const YoungGroup& W = em.group();
  require(m.loopless(), "these invariants require a loopless matroid");
  const int k = m.rank(), n = m.size();
  const std::vector<int>& E = m.ground();

  GradedVirtualRep out = graded_restrict(onto_labels(uniform_kl_sn(k, n), E), W);

  std::map<std::vector<int>, std::pair<std::vector<int>, long long>> classes;
  for (const auto& f : m.stressed_flats()) {
    std::vector<int> sig(W.num_blocks(), 0);
    for (int x : f) sig[W.block_of(x)]++;
    auto [it, fresh] = classes.try_emplace(std::move(sig), f, 0);
    it->second.second++;
  }
  for (const auto& [sig, rep_count] : classes) {
    const std::vector<int>& f = rep_count.first;
    long long expected = 1;
    for (int b = 0; b < W.num_blocks(); ++b)
      expected *= binomial(static_cast<int>(W.block(b).size()), sig[b]);
    ensure(rep_count.second == expected,
           "every subset in the orbit of a stressed flat must itself be stressed");

    const int h = static_cast<int>(f.size());
    const int r = m.rank_of(f);
    if (h == r || h == n) continue;  // no relaxation possible at such a flat

    std::vector<std::vector<int>> cut;
    for (const auto& blk : W.blocks()) {
      std::vector<int> in, outb;
      for (int x : blk)
        (std::binary_search(f.begin(), f.end(), x) ? in : outb).push_back(x);
      if (!in.empty()) cut.push_back(std::move(in));
      if (!outb.empty()) cut.push_back(std::move(outb));
    }
    const YoungGroup wf(std::move(cut));

    std::vector<int> rest;
    for (int x : E)
      if (!std::binary_search(f.begin(), f.end(), x)) rest.push_back(x);
    const GradedVirtualRep p_pi =
        graded_restrict(graded_outer(onto_labels(uniform_kl_sn(r, h), f),
                                     onto_labels(uniform_kl_sn(k - r, n - h), rest)),
                        wf);
    out -= graded_induce(relaxation_kl(f, h, r, wf) - p_pi, W);
  }
  return out;
}

}  // namespace detail

/* P of an elementary split matroid from the uniform head term and stressed
 * flat corrections, with the relaxation polynomials computed by the
 * recursion engine. */
inline GradedVirtualRep split_kl(const EquivariantMatroid& em, KlEngine& engine = default_engine()) {
  const Matroid& m = em.matroid();
  require(m.is_elementary_split(),
          "the stressed-flat correction formula needs an elementary split matroid");
  return detail::stressed_correction_kl(
      em, [&](const std::vector<int>& f, int, int r, const YoungGroup& wf) {
        const Matroid lam = Matroid::lambda_matroid(r, m.rank(), f, m.ground());
        return engine.kl(EquivariantMatroid(lam, wf));
      });
}

/* P of a connected corank-two matroid.  Same correction structure as
 * split_kl, but the relaxation piece at a flat of corank one within itself
 * is evaluated through the chain subdivision whenever the stabilizer
 * preserves it (all non-singleton blocks inside the flat), falling back to
 * the recursion engine otherwise. */
inline GradedVirtualRep corank2_kl(const EquivariantMatroid& em, KlEngine& engine = default_engine()) {
  const Matroid& m = em.matroid();
  require(m.size() - m.rank() == 2, "this formula needs a matroid of corank two");
  require(m.is_connected(), "this formula needs a connected matroid");
  const int n = m.size();
  return detail::stressed_correction_kl(
      em, [&](const std::vector<int>& f, int h, int r, const YoungGroup& wf) {
        bool fits = (r == h - 1);
        for (const auto& blk : wf.blocks())
          fits = fits && (blk.size() == 1 ||
                          std::includes(f.begin(), f.end(), blk.begin(), blk.end()));
        if (!fits) {
          const Matroid lam = Matroid::lambda_matroid(r, m.rank(), f, m.ground());
          return engine.kl(EquivariantMatroid(lam, wf));
        }
        std::map<int, int> to_prefix, from_prefix;
        int next = 1;
        for (int x : f) to_prefix[x] = next++;
        for (int x : m.ground())
          if (!std::binary_search(f.begin(), f.end(), x)) to_prefix[x] = next++;
        for (const auto& [x, y] : to_prefix) from_prefix[y] = x;
        std::vector<std::vector<int>> mapped;
        for (const auto& blk : wf.blocks()) {
          std::vector<int> nb;
          for (int x : blk) nb.push_back(to_prefix.at(x));
          mapped.push_back(std::move(nb));
        }
        return relabel(lambda_kl_subdivision(h - 1, n, YoungGroup(std::move(mapped))),
                       from_prefix);
      });
}

}  // namespace equikl
