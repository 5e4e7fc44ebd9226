#pragma once
/* Littlewood-Richardson calculus on integer partitions.
 *
 * Coefficients are computed exactly by backtracking over column-strict skew
 * fillings whose reverse reading word stays a lattice word; the search prunes
 * on the lattice condition incrementally, so only genuine prefixes of valid
 * fillings are ever explored.
 */

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace equikl {

namespace detail {

/* Shared validity check for an explicit filling of la/mu.  grid[r][c] holds
 * the entry at row r, column c (both 0-based); cells outside la/mu are 0.
 * Verifies weakly increasing rows, strictly increasing columns, and the
 * lattice property of the reverse reading word (rows top to bottom, each row
 * scanned right to left). */
inline bool is_lattice_filling(const Partition& la, const Partition& mu,
                               const std::vector<std::vector<int>>& grid) {
  std::vector<int> count(static_cast<size_t>(la.rows()) + 2, 0);
  for (int r = 0; r < la.rows(); ++r) {
    for (int c = la.part(r) - 1; c >= mu.part(r); --c) {
      const int v = grid[r][c];
      if (v < 1) return false;
      if (c + 1 < la.part(r) && v > grid[r][c + 1]) return false;
      if (r > 0 && c >= mu.part(r - 1) && c < la.part(r - 1) && v <= grid[r - 1][c]) return false;
      if (v > 1 && count[v - 1] <= count[v]) return false;
      count[v]++;
    }
  }
  return true;
}

/* Enumerate every lattice filling of la/mu, optionally capped by a content
 * bound, reporting the content partition of each completed filling. */
inline void for_each_lattice_filling(const Partition& la, const Partition& mu,
                                     const std::vector<int>* content_bound,
                                     const std::function<void(const std::vector<int>&)>& out) {
  struct Cell { int r, c; };
  std::vector<Cell> cells;
  for (int r = 0; r < la.rows(); ++r)
    for (int c = la.part(r) - 1; c >= mu.part(r); --c) cells.push_back({r, c});
  const int max_v = la.rows();
  std::vector<std::vector<int>> grid(la.rows(), std::vector<int>(la.part(0), 0));
  std::vector<int> count(static_cast<size_t>(max_v) + 1, 0);

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      out(count);
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = max_v;
    if (c + 1 < la.part(r)) hi = grid[r][c + 1];           // row: weakly increasing
    int lo = 1;
    if (r > 0 && c >= mu.part(r - 1)) lo = grid[r - 1][c] + 1;  // column: strictly increasing
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && count[v - 1] <= count[v]) continue;     // lattice word
      if (content_bound && count[v] >= (*content_bound)[v - 1]) continue;
      grid[r][c] = v;
      count[v]++;
      rec(idx + 1);
      count[v]--;
      grid[r][c] = 0;
    }
  };
  rec(0);
}

inline Partition content_to_partition(const std::vector<int>& count) {
  std::vector<int> parts;
  for (size_t v = 1; v < count.size() && count[v] > 0; ++v) parts.push_back(count[v]);
  return Partition(std::move(parts));
}

/* All sub-partitions of la with exactly d boxes. */
inline void for_each_subpartition(const Partition& la, int d,
                                  const std::function<void(const Partition&)>& out) {
  std::vector<int> parts;
  std::function<void(int, int, int)> rec = [&](int row, int remaining, int prev) {
    if (remaining == 0) {
      out(Partition(parts));
      return;
    }
    if (row >= la.rows()) return;
    const int hi = std::min({la.part(row), prev, remaining});
    for (int v = hi; v >= 1; --v) {
      if (static_cast<long long>(v) * (la.rows() - row) < remaining) break;
      parts.push_back(v);
      rec(row + 1, remaining - v, v);
      parts.pop_back();
    }
  };
  rec(0, d, d == 0 ? 1 : d);
}

}  // namespace detail

// Number of lattice fillings of la/mu with content nu (0 when degenerate).
inline long long lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != la.size()) return 0;
  if (!la.contains(mu) || !la.contains(nu)) return 0;
  if (nu.rows() > la.rows()) return 0;
  std::vector<int> bound(static_cast<size_t>(la.rows()), 0);
  for (int v = 0; v < nu.rows(); ++v) bound[v] = nu.part(v);
  long long n = 0;
  detail::for_each_lattice_filling(la, mu, &bound, [&](const std::vector<int>& count) {
    if (detail::content_to_partition(count) == nu) n++;
  });
  return n;
}

/* Branching of the irreducible la from S_n to S_d x S_{n-d}:
 * a map (mu, nu) -> multiplicity with |mu| = d, |nu| = n - d. */
inline std::map<std::pair<Partition, Partition>, long long> lr_restrict(const Partition& la,
                                                                        int d) {
  require(d >= 0 && d <= la.size(), "restriction size out of range");
  std::map<std::pair<Partition, Partition>, long long> out;
  detail::for_each_subpartition(la, d, [&](const Partition& mu) {
    detail::for_each_lattice_filling(la, mu, nullptr, [&](const std::vector<int>& count) {
      out[{mu, detail::content_to_partition(count)}]++;
    });
  });
  return out;
}

/* Decomposition of the induction product of mu and nu: la -> c(la; mu, nu). */
inline std::map<Partition, long long> lr_product(const Partition& mu, const Partition& nu) {
  static std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> cache;
  static std::mutex cache_mu;
  const auto key = mu <= nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Partition &p = key.first, &q = key.second;
  const int total = p.size() + q.size();
  const int max_rows = p.rows() + q.rows();
  const int max_first = p.empty() || q.empty() ? std::max(p.part(0), q.part(0))
                                               : p.part(0) + q.part(0);
  std::map<Partition, long long> out;
  std::vector<int> parts;
  std::function<void(int, int, int)> rec = [&](int row, int remaining, int prev) {
    if (remaining == 0 && row >= p.rows()) {
      Partition la(parts);
      long long c = lr_coefficient(la, p, q);
      if (c != 0) out[la] += c;
      return;  // only positive parts may follow, so the shape is complete
    }
    if (row >= max_rows) return;
    const int hi = std::min(prev, remaining);
    const int lo = std::max(p.part(row), 1);
    for (int v = hi; v >= lo; --v) {
      parts.push_back(v);
      rec(row + 1, remaining - v, v);
      parts.pop_back();
    }
  };
  rec(0, total, std::min(max_first, total));
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(key, std::move(out)).first->second;
}

/* Branching targets when la is the two-column hook [N-2i, 2^i] and the first
 * tensor factor is mu = [p, 2^l, 1^m]: the candidate second factors come from
 * four closed-form (q, s) patterns, each certified by constructing its unique
 * filling and validating it.  All multiplicities on such shapes are 0 or 1. */
inline std::vector<Partition> fat_hook_pairs(int N, int i, const Partition& mu) {
  require(N >= 0 && i >= 0, "invalid shape parameters");
  const int W = N - 2 * i;
  require(i == 0 ? W >= 0 : W >= 2, "shape [N-2i, 2^i] is not a partition");
  const Partition la = Partition::hook_with_fat_arm(W, i, 0);

  int p = 0, l = 0, m = 0;
  if (!mu.empty()) {
    p = mu.part(0);
    for (int r = 1; r < mu.rows(); ++r) {
      const int x = mu.part(r);
      require(x <= 2, "mu must have shape [p, 2^l, 1^m]");
      (x == 2 ? l : m)++;
    }
  }
  require(la.contains(mu), "mu is not contained in [N-2i, 2^i]");

  const int d = mu.size();
  const int total = N - d;
  if (total == 0) return {Partition{}};

  const int arm = W - p;        // forced 1s in the first row
  const int full = i - l - m;   // rows contributing to both columns

  struct Pattern { int q, s; bool one_in_col1, one_in_col2; };
  const std::array<Pattern, 4> patterns = {{{arm, full, false, false},
                                            {arm + 1, full, false, true},
                                            {arm + 1, full - 1, true, false},
                                            {arm + 2, full - 1, true, true}}};

  std::set<Partition> out;
  for (const auto& pat : patterns) {
    const int t = total - pat.q - 2 * pat.s;
    if (pat.q < 1 || pat.s < 0 || t < 0) continue;
    if (pat.s > 0 && pat.q < 2) continue;  // [q, 2^s, ...] must stay weakly decreasing

    // Column values forced by the pattern (top to bottom).
    std::vector<int> col1, col2;
    for (int v = pat.one_in_col1 ? 1 : 2; static_cast<int>(col1.size()) < full; ++v)
      col1.push_back(v);
    for (int v = pat.one_in_col2 ? 1 : 2; v <= pat.s + t + 1; ++v) col2.push_back(v);
    ensure(static_cast<int>(col2.size()) == m + full, "pattern cell count mismatch");

    std::vector<std::vector<int>> grid(la.rows(), std::vector<int>(std::max(W, 1), 0));
    for (int c = p; c < W; ++c) grid[0][c] = 1;
    for (int r = 0; r < m; ++r) grid[1 + l + r][1] = col2[r];
    for (int r = 0; r < full; ++r) {
      grid[1 + l + m + r][0] = col1[r];
      grid[1 + l + m + r][1] = col2[m + r];
    }
    if (detail::is_lattice_filling(la, mu, grid))
      out.insert(Partition::hook_with_fat_arm(pat.q, pat.s, t));
  }
  return {out.begin(), out.end()};
}

}  // namespace equikl
