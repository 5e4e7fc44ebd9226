#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "equikl/errors.hpp"
#include "equikl/matroid.hpp"

using equikl::Mask;
using equikl::Matroid;
using equikl::default_ground;

namespace {

std::vector<Matroid> sample_matroids() {
  return {
      Matroid::uniform(2, default_ground(4)),
      Matroid::uniform(3, default_ground(5)),
      Matroid::uniform(0, default_ground(2)),
      Matroid::boolean_matroid(default_ground(4)),
      Matroid::glued_cycles(3, 3),
      Matroid::glued_cycles(4, 2),
      Matroid::lambda_matroid(2, 4, {1, 2, 3}, default_ground(6)),
      Matroid::pi_matroid(2, 4, {1, 2, 3}, default_ground(6)),
      Matroid::from_bases(default_ground(3), {{1, 2}, {1, 3}, {2, 3}}),
  };
}

}  // namespace

TEST_CASE("uniform matroid basics", "[matroid]") {
  const Matroid u24 = Matroid::uniform(2, default_ground(4));
  CHECK(u24.size() == 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.bases_masks().size() == 6);
  CHECK(u24.rank_of({1}) == 1);
  CHECK(u24.rank_of({1, 2, 3}) == 2);
  CHECK(u24.closure({1, 2}) == std::vector<int>({1, 2, 3, 4}));
  CHECK(u24.closure({3}) == std::vector<int>({3}));
  CHECK(u24.flats_masks().size() == 6);  // empty set, four points, everything
  CHECK(u24.loopless());
  CHECK(u24.coloops().empty());

  const Matroid u02 = Matroid::uniform(0, default_ground(2));
  CHECK(u02.loops() == std::vector<int>({1, 2}));
  CHECK_FALSE(u02.loopless());

  const Matroid b3 = Matroid::boolean_matroid(default_ground(3));
  CHECK(b3.coloops() == std::vector<int>({1, 2, 3}));
  CHECK(b3.bases_masks().size() == 1);
  CHECK(b3.flats_masks().size() == 8);

  CHECK(Matroid::cycle(default_ground(5)) == Matroid::uniform(4, default_ground(5)));

  const Matroid empty = Matroid::uniform(0, {});
  CHECK(empty.size() == 0);
  CHECK(empty.rank() == 0);
  CHECK(empty.bases_masks() == std::vector<Mask>{0});
  CHECK(empty.flats_masks() == std::vector<Mask>{0});
  CHECK(empty.loopless());

  CHECK_THROWS_AS(Matroid::uniform(3, default_ground(2)), equikl::precondition_error);
}

TEST_CASE("rank function satisfies the matroid axioms", "[matroid]") {
  for (const Matroid& m : sample_matroids()) {
    const Mask full = m.full_mask();
    CHECK(m.rank_of_mask(0) == 0);
    CHECK(m.rank_of_mask(full) == m.rank());
    for (Mask s = 0; s <= full; ++s) {
      const int rs = m.rank_of_mask(s);
      CHECK(rs >= 0);
      CHECK(rs <= std::popcount(s));
      for (Mask t = 0; t <= full; ++t) {
        const int rt = m.rank_of_mask(t);
        if ((s & t) == s) CHECK(rs <= rt);  // monotone
        CHECK(m.rank_of_mask(s | t) + m.rank_of_mask(s & t) <= rs + rt);  // submodular
      }
      if (s == full) break;
    }
  }
}

TEST_CASE("closure operator and flats", "[matroid]") {
  for (const Matroid& m : sample_matroids()) {
    const Mask full = m.full_mask();
    for (Mask s = 0; s <= full; ++s) {
      const Mask c = m.closure_mask(s);
      CHECK((s & c) == s);                     // extensive
      CHECK(m.closure_mask(c) == c);           // idempotent
      CHECK(m.rank_of_mask(c) == m.rank_of_mask(s));
      if (s == full) break;
    }
    const auto flats = m.flats_masks();
    for (Mask f : flats) CHECK(m.is_flat_mask(f));
    for (Mask f : flats)
      for (Mask g : flats) CHECK(m.is_flat_mask(f & g));  // meet-closed
  }
}

TEST_CASE("from_bases validates the exchange property", "[matroid]") {
  const Matroid tri = Matroid::from_bases(default_ground(3), {{1, 2}, {1, 3}, {2, 3}});
  CHECK(tri == Matroid::uniform(2, default_ground(3)));

  CHECK_THROWS_AS(Matroid::from_bases(default_ground(4), {{1, 2}, {3, 4}}),
                  equikl::precondition_error);
  CHECK_THROWS_AS(Matroid::from_bases(default_ground(3), {{1, 2}, {3}}),
                  equikl::precondition_error);
  CHECK_THROWS_AS(Matroid::from_bases(default_ground(3), {}), equikl::precondition_error);
  CHECK_THROWS_AS(Matroid::from_bases(default_ground(3), {{1, 4}}),
                  equikl::precondition_error);
}

TEST_CASE("minors of uniform matroids", "[matroid]") {
  const Matroid u35 = Matroid::uniform(3, default_ground(5));
  CHECK(u35.contraction({1}) == Matroid::uniform(2, {2, 3, 4, 5}));
  CHECK(u35.deletion({5}) == Matroid::uniform(3, default_ground(4)));
  CHECK(u35.restriction({2, 4}) == Matroid::uniform(2, {2, 4}));
  CHECK(u35.minor({1}, {2}) == Matroid::uniform(2, {3, 4, 5}));

  const Matroid all = u35.contraction(default_ground(5));
  CHECK(all.size() == 0);
  CHECK(all.rank() == 0);

  CHECK_THROWS_AS(u35.minor({1}, {1}), equikl::precondition_error);
  CHECK_THROWS_AS(u35.contraction({9}), equikl::precondition_error);

  // deletion and contraction commute
  const Matroid g = Matroid::glued_cycles(4, 3);
  CHECK(g.deletion({5}).contraction({1}) == g.minor({1}, {5}));
  CHECK(g.contraction({1}).deletion({5}) == g.minor({1}, {5}));
}

TEST_CASE("glued cycles", "[matroid]") {
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      const Matroid g = Matroid::glued_cycles(a, b);
      const int n = a + b - 1;
      CHECK(g.size() == n);
      CHECK(g.rank() == n - 2);
      CHECK(static_cast<long long>(g.bases_masks().size()) ==
            equikl::binomial(n, 2) - equikl::binomial(a - 1, 2) - equikl::binomial(b - 1, 2));
      CHECK(g.loopless());
      CHECK(g.coloops().empty());
      CHECK(g.is_connected());

      std::vector<int> ca, cb;
      for (int x = 1; x <= a; ++x) ca.push_back(x);
      for (int x = a; x <= n; ++x) cb.push_back(x);
      CHECK(g.rank_of(ca) == a - 1);   // each glued cycle is a circuit
      CHECK(g.rank_of(cb) == b - 1);
      CHECK(g.restriction(ca) == Matroid::cycle(ca));
      CHECK(g.restriction(cb) == Matroid::cycle(cb));
    }
  }

  // contracting the shared edge splits the matroid into two smaller cycles
  const Matroid g33 = Matroid::glued_cycles(3, 3);
  CHECK(g33.contraction({3}) ==
        Matroid::direct_sum(Matroid::uniform(1, {1, 2}), Matroid::uniform(1, {4, 5})));

  CHECK_THROWS_AS(Matroid::glued_cycles(1, 4), equikl::precondition_error);
}

TEST_CASE("rank-constrained and direct-sum constructions", "[matroid]") {
  const Matroid la = Matroid::lambda_matroid(2, 4, {1, 2, 3}, default_ground(6));
  CHECK(la.rank() == 4);
  CHECK(la.bases_masks().size() == 12);  // 15 four-subsets minus 3 with all of {4,5,6}
  CHECK(la.loopless());
  CHECK(la.rank_of({4, 5, 6}) == 2);
  CHECK(la.closure({4, 5, 6}) == std::vector<int>({4, 5, 6}));

  const Matroid pi = Matroid::pi_matroid(2, 4, {1, 2, 3}, default_ground(6));
  CHECK(pi == Matroid::direct_sum(Matroid::uniform(2, {4, 5, 6}),
                                  Matroid::uniform(2, {1, 2, 3})));
  CHECK(pi.rank() == 4);
  CHECK_FALSE(pi.is_connected());
  CHECK(la.is_connected());

  // the two glued triangles coincide with a rank-constrained construction
  CHECK(Matroid::glued_cycles(4, 2) ==
        Matroid::lambda_matroid(2, 3, {1, 2, 3}, default_ground(5)));

  // degenerate parameter regimes
  CHECK(Matroid::lambda_matroid(2, 4, {1, 2, 3, 4}, default_ground(6)) ==
        Matroid::uniform(4, default_ground(6)));
  CHECK(Matroid::lambda_matroid(2, 4, {1, 2}, default_ground(6)) ==
        Matroid::pi_matroid(2, 4, {1, 2}, default_ground(6)));
  CHECK(Matroid::lambda_matroid(4, 4, {1, 2, 3, 4}, default_ground(6)).loops() ==
        std::vector<int>({5, 6}));

  CHECK_THROWS_AS(Matroid::lambda_matroid(0, 4, {1, 2}, default_ground(6)),
                  equikl::precondition_error);
  CHECK_THROWS_AS(Matroid::lambda_matroid(3, 4, {1, 2}, default_ground(6)),
                  equikl::precondition_error);
  CHECK_THROWS_AS(Matroid::lambda_matroid(1, 4, {1, 2, 3}, default_ground(4)),
                  equikl::precondition_error);
}

TEST_CASE("connectivity", "[matroid]") {
  CHECK(Matroid::uniform(2, default_ground(4)).is_connected());
  CHECK(Matroid::uniform(1, default_ground(2)).is_connected());
  CHECK(Matroid::uniform(1, default_ground(1)).is_connected());
  CHECK_FALSE(Matroid::boolean_matroid(default_ground(2)).is_connected());
  CHECK_FALSE(Matroid::uniform(0, default_ground(2)).is_connected());
  CHECK_FALSE(Matroid::direct_sum(Matroid::uniform(1, {1, 2}), Matroid::uniform(1, {3, 4}))
                  .is_connected());
}

TEST_CASE("stressed flats", "[matroid]") {
  // in a uniform matroid every flat has uniform restriction and contraction
  const Matroid u24 = Matroid::uniform(2, default_ground(4));
  CHECK(u24.stressed_flats().size() == u24.flats_masks().size());

  const Matroid g33 = Matroid::glued_cycles(3, 3);
  std::vector<std::vector<int>> fat;  // stressed flats larger than their rank
  for (const auto& f : g33.stressed_flats())
    if (static_cast<int>(f.size()) > g33.rank_of(f)) fat.push_back(f);
  CHECK(fat == std::vector<std::vector<int>>({{1, 2, 3}, {3, 4, 5}}));

  const Matroid la = Matroid::lambda_matroid(2, 4, {1, 2, 3}, default_ground(6));
  std::vector<std::vector<int>> fat_la;
  for (const auto& f : la.stressed_flats())
    if (static_cast<int>(f.size()) > la.rank_of(f)) fat_la.push_back(f);
  CHECK(fat_la == std::vector<std::vector<int>>({{4, 5, 6}}));
}

TEST_CASE("minor exclusion test for split structure", "[matroid]") {
  CHECK(Matroid::uniform(2, default_ground(4)).is_elementary_split());
  CHECK(Matroid::uniform(3, default_ground(6)).is_elementary_split());
  CHECK(Matroid::glued_cycles(3, 3).is_elementary_split());
  CHECK(Matroid::glued_cycles(4, 3).is_elementary_split());
  CHECK(Matroid::lambda_matroid(2, 4, {1, 2, 3}, default_ground(6)).is_elementary_split());
  CHECK(Matroid::pi_matroid(2, 4, {1, 2, 3}, default_ground(6)).is_elementary_split());

  // the excluded pattern itself: loop 4, coloop 1, parallel pair {2,3}
  const Matroid bad = Matroid::from_bases(default_ground(4), {{1, 2}, {1, 3}});
  CHECK_FALSE(bad.is_elementary_split());

  // still excluded after adding a coloop that must be contracted away
  const Matroid bad5 = Matroid::direct_sum(bad, Matroid::boolean_matroid({5}));
  CHECK_FALSE(bad5.is_elementary_split());
}

TEST_CASE("flats compatible with adding one element", "[matroid]") {
  const Matroid u23 = Matroid::uniform(2, default_ground(3));
  CHECK(u23.si_set(1) == std::vector<std::vector<int>>({{}}));

  const Matroid u34 = Matroid::uniform(3, default_ground(4));
  CHECK(u34.si_set(1) == std::vector<std::vector<int>>({{}, {2}, {3}, {4}}));

  const Matroid g33 = Matroid::glued_cycles(3, 3);
  CHECK(g33.si_set(1) == std::vector<std::vector<int>>({{}, {4}, {5}}));
  CHECK(g33.si_set(3) == std::vector<std::vector<int>>({{}}));
}

TEST_CASE("canonical keys identify relabelled matroids", "[matroid]") {
  CHECK(Matroid::uniform(2, default_ground(4)).canonical_key() ==
        Matroid::uniform(2, {3, 5, 7, 9}).canonical_key());
  CHECK(Matroid::uniform(2, default_ground(4)).canonical_key() !=
        Matroid::uniform(2, default_ground(5)).canonical_key());
  CHECK(Matroid::uniform(2, default_ground(4)).canonical_key() !=
        Matroid::uniform(3, default_ground(4)).canonical_key());
}
