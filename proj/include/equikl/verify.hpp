#pragma once
/* The verification corpus behind `equikl verify` and the acceptance binary.
 * Eight numbered criteria; each produces a list of labelled pass/fail
 * results.  Criteria 1-4 and 6 reproduce frozen reference values, criteria
 * 5, 7, and 8 cross-check independent computation routes and structural
 * properties over a bundled corpus of matroids and group actions. */

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "closed_forms.hpp"
#include "equivariant.hpp"
#include "gamma.hpp"
#include "kl.hpp"
#include "lr.hpp"
#include "matroid.hpp"
#include "rep.hpp"
#include "text.hpp"
#include "young.hpp"

namespace equikl {

struct CheckResult {
  std::string label;
  bool ok = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.ok) return false;
  return !results.empty();
}

/* One verdict of the gamma survey: the Z-polynomial of the n-th family
 * member under the group permuting {1..prefix} and fixing the rest. */
struct SurveyRow {
  int n = 0;
  bool positive = false;
};

inline std::vector<SurveyRow> survey_gamma(const std::string& family, int prefix, int max_n,
                                           KlEngine& engine = default_engine()) {
  require(family == "corank1" || family == "boolean",
          "survey families are 'corank1' and 'boolean'");
  require(prefix >= 1, "the permuted prefix must be nonempty");
  std::vector<SurveyRow> out;
  for (int n = std::max(2, prefix); n <= max_n; ++n) {
    const Matroid m =
        family == "corank1" ? Matroid::cycle(default_ground(n))
                            : Matroid::boolean_matroid(default_ground(n));
    std::vector<std::vector<int>> blocks;
    std::vector<int> head;
    for (int x = 1; x <= prefix; ++x) head.push_back(x);
    blocks.push_back(head);
    for (int x = prefix + 1; x <= n; ++x) blocks.push_back({x});
    const EquivariantMatroid em(m, YoungGroup(std::move(blocks)));
    const GammaExpansion ge = gamma_expansion(engine.zpoly(em), m.rank());
    out.push_back({n, ge.positive});
  }
  return out;
}

namespace verify_detail {

inline MultiPartition mp2(std::initializer_list<int> a, std::initializer_list<int> b) {
  return {Partition::of(a), Partition::of(b)};
}

using PairList = std::vector<std::pair<std::initializer_list<int>, std::initializer_list<int>>>;

inline GradedVirtualRep frozen_poly(const YoungGroup& g, const std::vector<PairList>& data) {
  GradedVirtualRep out(g);
  for (size_t d = 0; d < data.size(); ++d) {
    VirtualRep c(g);
    for (const auto& [a, b] : data[d]) c.add(mp2(a, b), 1);
    out.add_term(static_cast<int>(d), c);
  }
  return out;
}

/* Reference coefficients of the corank-one matroid on {1..4}u{6..10} under
 * the group permuting {1,2,3,4} and {6,7,8,9,10} separately. */
inline GradedVirtualRep u89_reference(const YoungGroup& g) {
  return frozen_poly(
      g,
      {{{{4}, {5}}},
       {{{4}, {5}}, {{4}, {4, 1}}, {{4}, {3, 2}}, {{3, 1}, {5}}, {{3, 1}, {4, 1}}, {{2, 2}, {5}}},
       {{{4}, {3, 2}},
        {{4}, {2, 2, 1}},
        {{3, 1}, {4, 1}},
        {{3, 1}, {3, 2}},
        {{3, 1}, {3, 1, 1}},
        {{3, 1}, {2, 2, 1}},
        {{2, 2}, {5}},
        {{2, 2}, {4, 1}},
        {{2, 2}, {3, 2}},
        {{2, 1, 1}, {4, 1}},
        {{2, 1, 1}, {3, 1, 1}}},
       {{{3, 1}, {2, 2, 1}},
        {{2, 2}, {2, 2, 1}},
        {{2, 2}, {3, 2}},
        {{2, 1, 1}, {2, 2, 1}},
        {{2, 1, 1}, {2, 1, 1, 1}},
        {{2, 1, 1}, {3, 1, 1}},
        {{1, 1, 1, 1}, {2, 1, 1, 1}}}});
}

/* Reference coefficients of the glued five- and six-cycles after dropping
 * the fixed shared edge, same group as above. */
inline GradedVirtualRep c56_reference(const YoungGroup& g) {
  return frozen_poly(
      g,
      {{{{4}, {5}}},
       {{{4}, {4, 1}}, {{4}, {3, 2}}, {{3, 1}, {5}}, {{3, 1}, {4, 1}}, {{2, 2}, {5}}},
       {{{4}, {2, 2, 1}},
        {{3, 1}, {4, 1}},
        {{3, 1}, {3, 2}},
        {{3, 1}, {3, 1, 1}},
        {{3, 1}, {2, 2, 1}},
        {{2, 2}, {4, 1}},
        {{2, 2}, {3, 2}},
        {{2, 1, 1}, {4, 1}},
        {{2, 1, 1}, {3, 1, 1}}},
       {{{3, 1}, {2, 2, 1}},
        {{2, 2}, {2, 2, 1}},
        {{2, 1, 1}, {2, 2, 1}},
        {{2, 1, 1}, {2, 1, 1, 1}},
        {{2, 1, 1}, {3, 1, 1}},
        {{1, 1, 1, 1}, {2, 1, 1, 1}}}});
}

struct Checker {
  std::vector<CheckResult> results;
  void check(const std::string& label, bool ok, const std::string& detail = "") {
    results.push_back({label, ok, detail});
  }
};

inline std::vector<int> iota1(int n) { return default_ground(n); }

inline YoungGroup prefix_group(int h, int n) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> pre;
  for (int x = 1; x <= h; ++x) pre.push_back(x);
  blocks.push_back(pre);
  for (int x = h + 1; x <= n; ++x) blocks.push_back({x});
  return YoungGroup(std::move(blocks));
}

inline YoungGroup suffix_group(int h, int n) {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= h; ++x) blocks.push_back({x});
  std::vector<int> suf;
  for (int x = h + 1; x <= n; ++x) suf.push_back(x);
  blocks.push_back(suf);
  return YoungGroup(std::move(blocks));
}

inline YoungGroup glued_blocks(int a, int b) {
  std::vector<int> lo, hi;
  for (int x = 1; x <= a - 1; ++x) lo.push_back(x);
  for (int x = a + 1; x <= a + b - 1; ++x) hi.push_back(x);
  return YoungGroup(std::vector<std::vector<int>>{lo, {a}, hi});
}

struct CorpusEntry {
  Matroid m;
  std::vector<YoungGroup> actions;
};

/* Uniform, glued-cycle, relaxed, and two-block-sum matroids on at most
 * nine elements, each with at least two group actions.  The size knobs keep
 * the deletion sweep within its time budget. */
inline std::vector<CorpusEntry> bundled_corpus(int max_uniform_n, int max_glued_total,
                                               int max_relaxed_n) {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= max_uniform_n; ++n)
    for (int k = 1; k <= n; ++k)
      out.push_back({Matroid::uniform(k, iota1(n)),
                     {YoungGroup::full(iota1(n)), prefix_group(n / 2, n)}});
  for (int a = 2; a <= max_glued_total - 2; ++a)
    for (int b = 2; a + b <= max_glued_total; ++b)
      out.push_back({Matroid::glued_cycles(a, b),
                     {glued_blocks(a, b), YoungGroup::singletons(iota1(a + b - 1))}});
  for (int n = 4; n <= max_relaxed_n; ++n)
    for (int h = 2; h <= n - 2; ++h)
      for (int r = 1; r <= h - 1; ++r)
        for (int k = r + 1; k <= std::min(n - 2, r + n - h); ++k) {
          const std::vector<YoungGroup> actions = {
              YoungGroup(std::vector<std::vector<int>>{iota1(h),
                                                       [&] {
                                                         std::vector<int> rest;
                                                         for (int x = h + 1; x <= n; ++x)
                                                           rest.push_back(x);
                                                         return rest;
                                                       }()}),
              prefix_group(2, n)};
          out.push_back({Matroid::lambda_matroid(r, k, iota1(h), iota1(n)), actions});
          out.push_back({Matroid::pi_matroid(r, k, iota1(h), iota1(n)), actions});
        }
  return out;
}

// --- criterion bodies --------------------------------------------------

inline void criterion_1(Checker& ck, KlEngine& eng) {
  std::vector<int> nine;  // the labels {1..10} without the shared edge 5
  for (int x = 1; x <= 10; ++x)
    if (x != 5) nine.push_back(x);
  const YoungGroup two_blocks({{1, 2, 3, 4}, {6, 7, 8, 9, 10}});

  const GradedVirtualRep u89 =
      eng.kl(EquivariantMatroid(Matroid::uniform(8, nine), two_blocks));
  const GradedVirtualRep u89_ref = u89_reference(two_blocks);
  for (int d = 0; d <= 3; ++d) {
    std::ostringstream label;
    label << "corank-one on nine labels, coefficient of x^" << d;
    ck.check(label.str(), u89.coefficient(d) == u89_ref.coefficient(d),
             std::to_string(u89.coefficient(d).terms().size()) + " summands");
  }

  const EquivariantMatroid c56(Matroid::glued_cycles(5, 6), glued_blocks(5, 6));
  const GradedVirtualRep dropped = drop_singleton_block(eng.kl(c56), 5);
  const GradedVirtualRep c56_ref = c56_reference(two_blocks);
  for (int d = 0; d <= 3; ++d) {
    std::ostringstream label;
    label << "glued five- and six-cycles, coefficient of x^" << d;
    ck.check(label.str(), dropped.coefficient(d) == c56_ref.coefficient(d),
             std::to_string(dropped.coefficient(d).terms().size()) + " summands");
  }
}

inline void criterion_2(Checker& ck, KlEngine& eng) {
  const GradedVirtualRep pc = eng.kl(EquivariantMatroid(
      Matroid::glued_cycles(5, 6), YoungGroup::singletons(iota1(10))));
  ck.check("glued five- and six-cycles, plain coefficients",
           render_int_poly(dimension_polynomial(pc)) == "74x^3+113x^2+26x+1",
           render_int_poly(dimension_polynomial(pc)));

  const GradedVirtualRep pu = eng.kl(EquivariantMatroid(
      Matroid::uniform(8, iota1(9)), YoungGroup::full(iota1(9))));
  ck.check("rank eight on nine elements, plain coefficients",
           render_int_poly(dimension_polynomial(pu)) == "84x^3+120x^2+27x+1",
           render_int_poly(dimension_polynomial(pu)));
}

inline void criterion_3(Checker& ck, KlEngine& eng) {
  const YoungGroup s2 = YoungGroup::full({1, 2});
  const GradedVirtualRep z =
      eng.zpoly(EquivariantMatroid(Matroid::boolean_matroid({1, 2}), s2));
  const GammaExpansion ge = gamma_expansion(z, 2);
  const VirtualRep triv = VirtualRep::irreducible(s2, {Partition::of({2})});
  const VirtualRep sign = VirtualRep::irreducible(s2, {Partition::of({1, 1})});
  ck.check("two-coloop gamma coefficients",
           ge.coefficients.size() == 2 && ge.coefficients[0] == triv &&
               ge.coefficients[1] == sign - triv,
           "Gamma_1 = " + render_virtual_rep(ge.coefficients.back()));
  ck.check("two-coloop expansion is not positive", !ge.positive);

  const auto rows = survey_gamma("boolean", 2, 8, eng);
  bool all_negative = rows.size() == 7;
  for (const auto& row : rows) all_negative = all_negative && !row.positive;
  ck.check("free matroids on 2..8 elements under the two-element swap",
           all_negative, "none gamma positive");
}

inline void criterion_4(Checker& ck, KlEngine& eng) {
  const YoungGroup w({{1, 2}, {3}});
  const GradedVirtualRep z =
      eng.zpoly(EquivariantMatroid(Matroid::uniform(2, iota1(3)), w));
  VirtualRep t(w), s(w);
  t.add({Partition::of({2}), Partition::of({1})}, 1);
  s.add({Partition::of({1, 1}), Partition::of({1})}, 1);
  const GradedVirtualRep expected =
      scale_by_binomial(graded_constant(t), 2) + graded_constant(s).shifted(1);
  ck.check("three-point line Z-polynomial under the two-element swap", z == expected,
           "matches the binomial-plus-sign form");
  const GammaExpansion ge = gamma_expansion(z, 2);
  ck.check("three-point line expansion is positive",
           ge.positive && ge.coefficients[0] == t && ge.coefficients[1] == s);

  const auto rows = survey_gamma("corank1", 2, 10, eng);
  bool all_positive = rows.size() == 9;
  for (const auto& row : rows) all_positive = all_positive && row.positive;
  ck.check("corank-one matroids on 2..10 elements under the two-element swap",
           all_positive, "all gamma positive");
}

inline void criterion_5(Checker& ck, KlEngine& eng) {
  const auto corpus = bundled_corpus(9, 10, 7);
  long long checked = 0;
  bool ok = true;
  std::string first_failure;
  for (const auto& entry : corpus) {
    const auto coloops = entry.m.coloops();
    for (const auto& g : entry.actions) {
      const EquivariantMatroid em(entry.m, g);
      for (int i : entry.m.ground()) {
        if (std::find(coloops.begin(), coloops.end(), i) != coloops.end()) continue;
        const YoungGroup wi = stabilizer_of_point(g, i);
        const KlPair via_deletion = eng.deletion_formula(em, i);
        const KlPair direct = eng.compute(em);
        const bool match = via_deletion.p == graded_restrict(direct.p, wi) &&
                           via_deletion.z == graded_restrict(direct.z, wi);
        if (!match && ok) {
          std::ostringstream os;
          os << "first mismatch: ground size " << entry.m.size() << ", rank "
             << entry.m.rank() << ", element " << i;
          first_failure = os.str();
        }
        ok = ok && match;
        ++checked;
      }
    }
  }
  ck.check("deletion route equals the defining recursion over the stabilizer", ok,
           ok ? std::to_string(checked) + " element checks" : first_failure);
}

inline void criterion_6(Checker& ck) {
  bool ok = true;
  long long rows_checked = 0;
  std::string first_failure;
  for (int N = 0; N <= 14 && ok; ++N)
    for (int i = 0; 2 * i <= N && ok; ++i) {
      if (i > 0 && N - 2 * i < 2) continue;
      const Partition la = Partition::hook_with_fat_arm(N - 2 * i, i, 0);
      for (int d = 0; d <= N && ok; ++d) {
        std::map<Partition, std::set<Partition>> expected;
        bool mult_free = true;
        for (const auto& [pair, c] : lr_restrict(la, d)) {
          mult_free = mult_free && c == 1;
          expected[pair.first].insert(pair.second);
        }
        std::map<Partition, std::set<Partition>> produced;
        const int w = N - 2 * i;
        for (int p = 0; p <= w; ++p)
          for (int l = 0; l <= i; ++l)
            for (int m = 0; l + m <= i; ++m) {
              if (l > 0 && p < 2) continue;
              if (m > 0 && p < 1) continue;
              if (p == 0 && (l > 0 || m > 0)) continue;
              std::vector<int> parts;
              if (p > 0) parts.push_back(p);
              parts.insert(parts.end(), l, 2);
              parts.insert(parts.end(), m, 1);
              const Partition mu(std::move(parts));
              if (mu.size() != d) continue;
              const auto nus = fat_hook_pairs(N, i, mu);
              if (!nus.empty())
                produced[mu] = std::set<Partition>(nus.begin(), nus.end());
              ++rows_checked;
            }
        if (!(mult_free && expected == produced)) {
          ok = false;
          std::ostringstream os;
          os << "first mismatch at N=" << N << " i=" << i << " d=" << d;
          first_failure = os.str();
        }
      }
    }
  ck.check("closed-form branching equals the tableau rule for two-column hooks", ok,
           ok ? std::to_string(rows_checked) + " factor rows" : first_failure);

  const Partition mu = Partition::of({3, 2, 2, 1, 1, 1});
  const auto nus = fat_hook_pairs(20, 7, mu);
  std::set<Partition> expected;
  for (const auto& [pair, c] : lr_restrict(Partition::of({6, 2, 2, 2, 2, 2, 2, 2}), 10))
    if (pair.first == mu) expected.insert(pair.second);
  ck.check("the four-way branching of [6,2^7] against [3,2^2,1^3]",
           nus.size() == 4 && std::set<Partition>(nus.begin(), nus.end()) == expected,
           std::to_string(nus.size()) + " second factors");
}

inline void criterion_7(Checker& ck, KlEngine& eng) {
  {
    bool ok = true;
    int count = 0;
    for (int n = 1; n <= 7; ++n)
      for (int k = 1; k <= n; ++k, ++count)
        ok = ok && uniform_kl_sn(k, n) ==
                       eng.kl(EquivariantMatroid(Matroid::uniform(k, iota1(n)),
                                                 YoungGroup::full(iota1(n))));
    ck.check("uniform closed form, ranks one to seven", ok,
             std::to_string(count) + " matroids");
  }
  {
    bool ok = true;
    int count = 0;
    for (int a = 2; a <= 9; ++a)
      for (int b = 2; a + b <= 11; ++b, ++count)
        ok = ok && glued_cycles_kl(a, b) ==
                       eng.kl(EquivariantMatroid(Matroid::glued_cycles(a, b),
                                                 glued_blocks(a, b)));
    ck.check("glued-cycles closed form, up to eleven edges", ok,
             std::to_string(count) + " matroids");
  }
  {
    bool ok = true;
    int count = 0;
    for (int n = 4; n <= 7; ++n)
      for (int r = 0; r <= n - 3; ++r) {
        const Matroid lam =
            r == 0 ? Matroid::uniform(n - 2, iota1(n))
                   : Matroid::lambda_matroid(r, n - 2, iota1(r + 1), iota1(n));
        std::vector<YoungGroup> groups = {YoungGroup::singletons(iota1(n)),
                                          prefix_group(r + 1, n)};
        if (r >= 1) groups.push_back(prefix_group(2, n));
        for (const auto& w : groups) {
          ok = ok && lambda_kl_subdivision(r, n, w) ==
                         eng.kl(EquivariantMatroid(lam, w));
          ++count;
        }
      }
    ck.check("chain-subdivision evaluation of relaxed prefix matroids", ok,
             std::to_string(count) + " cases");
  }
  {
    bool ok = true;
    int count = 0;
    const auto corpus = bundled_corpus(6, 8, 6);
    for (const auto& entry : corpus) {
      if (!entry.m.is_elementary_split()) continue;
      for (const auto& g : entry.actions) {
        const EquivariantMatroid em(entry.m, g);
        ok = ok && split_kl(em, eng) == eng.kl(em);
        ++count;
      }
    }
    ck.check("stressed-flat corrections on the split corpus", ok,
             std::to_string(count) + " cases");
  }
  {
    bool ok = true;
    int count = 0;
    std::vector<std::pair<Matroid, YoungGroup>> cases;
    for (int a = 2; a <= 6; ++a)
      for (int b = 2; a + b <= 8; ++b) {
        cases.emplace_back(Matroid::glued_cycles(a, b), glued_blocks(a, b));
        cases.emplace_back(Matroid::glued_cycles(a, b),
                           YoungGroup::singletons(iota1(a + b - 1)));
      }
    for (int n = 4; n <= 6; ++n) {
      cases.emplace_back(Matroid::uniform(n - 2, iota1(n)), YoungGroup::full(iota1(n)));
      for (int r = 1; r <= n - 3; ++r)
        cases.emplace_back(Matroid::lambda_matroid(r, n - 2, iota1(r + 1), iota1(n)),
                           suffix_group(r + 1, n));
    }
    for (const auto& [m, g] : cases) {
      const EquivariantMatroid em(m, g);
      ok = ok && corank2_kl(em, eng) == eng.kl(em);
      ++count;
    }
    ck.check("corank-two closed form on its corpus", ok, std::to_string(count) + " cases");
  }
}

inline void criterion_8(Checker& ck, KlEngine& eng) {
  const auto corpus = bundled_corpus(7, 9, 6);
  bool palindromic = true, degree_bound = true, honest = true, unimodal = true;
  bool restriction = true, dimensions = true;
  long long cases = 0;
  for (const auto& entry : corpus) {
    const YoungGroup fine = YoungGroup::singletons(entry.m.ground());
    const KlPair base = eng.compute(EquivariantMatroid(entry.m, fine));
    const std::map<int, long long> base_dims = dimension_polynomial(base.p);
    const int d = entry.m.rank();
    for (const auto& g : entry.actions) {
      const EquivariantMatroid em(entry.m, g);
      const KlPair pair = eng.compute(em);
      ++cases;
      palindromic = palindromic && is_palindromic(pair.z, d);
      degree_bound = degree_bound && (d == 0 ? pair.p.degree() == 0 : 2 * pair.p.degree() < d);
      honest = honest && pair.p.is_honest() && pair.z.is_honest();
      for (int j = 1; 2 * j <= d; ++j)
        unimodal = unimodal && (pair.z.coefficient(j) - pair.z.coefficient(j - 1)).is_honest();
      restriction = restriction && graded_restrict(pair.p, fine) == base.p &&
                    graded_restrict(pair.z, fine) == base.z;
      dimensions = dimensions && dimension_polynomial(pair.p) == base_dims;
    }
  }
  const std::string scope = std::to_string(cases) + " matroid actions";
  ck.check("Z-polynomials are palindromic", palindromic, scope);
  ck.check("P stays strictly below half the rank", degree_bound, scope);
  ck.check("P and Z have nonnegative coefficients", honest, scope);
  ck.check("consecutive Z-coefficients embed into the next", unimodal, scope);
  ck.check("coarse results restrict to fine results", restriction, scope);
  ck.check("dimensions are independent of the action", dimensions, scope);
}

}  // namespace verify_detail

inline const char* criterion_title(int which) {
  switch (which) {
    case 1: return "frozen equivariant coefficient lists";
    case 2: return "frozen plain coefficient lists";
    case 3: return "gamma-negative references";
    case 4: return "gamma-positive references";
    case 5: return "deletion route against the recursion";
    case 6: return "two-column branching against the tableau rule";
    case 7: return "closed forms against the recursion";
    case 8: return "structural properties of P and Z";
    default: return "unknown criterion";
  }
}

inline std::vector<CheckResult> run_criterion(int which,
                                              KlEngine& engine = default_engine()) {
  require(which >= 1 && which <= 8, "criteria are numbered 1 to 8");
  verify_detail::Checker ck;
  switch (which) {
    case 1: verify_detail::criterion_1(ck, engine); break;
    case 2: verify_detail::criterion_2(ck, engine); break;
    case 3: verify_detail::criterion_3(ck, engine); break;
    case 4: verify_detail::criterion_4(ck, engine); break;
    case 5: verify_detail::criterion_5(ck, engine); break;
    case 6: verify_detail::criterion_6(ck); break;
    case 7: verify_detail::criterion_7(ck, engine); break;
    case 8: verify_detail::criterion_8(ck, engine); break;
  }
  return ck.results;
}

}  // namespace equikl
