#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include <equikl/equivariant.hpp>
#include <equikl/gamma.hpp>
#include <equikl/kl.hpp>

using namespace equikl;

namespace {

Partition pa(std::initializer_list<int> parts) { return Partition::of(parts); }

VirtualRep vr(const YoungGroup& g,
              const std::vector<std::pair<MultiPartition, long long>>& terms) {
  VirtualRep out(g);
  for (const auto& [mp, c] : terms) out.add(mp, c);
  return out;
}

GradedVirtualRep poly(const YoungGroup& g, const std::vector<VirtualRep>& coeffs) {
  GradedVirtualRep out(g);
  for (int d = 0; d < static_cast<int>(coeffs.size()); ++d) out.add_term(d, coeffs[d]);
  return out;
}

std::vector<long long> dims(const GradedVirtualRep& f) {
  std::vector<long long> out;
  for (int d = 0; d <= f.degree(); ++d) out.push_back(f.dimension(d));
  return out;
}

std::vector<int> iota1(int n) { return default_ground(n); }

}  // namespace

TEST_CASE("rank-two boolean matroid under the full symmetric group") {
  KlEngine eng;
  const YoungGroup s2 = YoungGroup::full({1, 2});
  const EquivariantMatroid em(Matroid::boolean_matroid({1, 2}), s2);

  const VirtualRep triv = VirtualRep::irreducible(s2, {pa({2})});
  const VirtualRep sign = VirtualRep::irreducible(s2, {pa({1, 1})});

  CHECK(eng.kl(em) == poly(s2, {triv}));
  CHECK(eng.zpoly(em) == poly(s2, {triv, triv + sign, triv}));

  SECTION("its Z-polynomial is not gamma positive") {
    const GammaExpansion ge = gamma_expansion(eng.zpoly(em), 2);
    REQUIRE(ge.coefficients.size() == 2);
    CHECK(ge.coefficients[0] == triv);
    CHECK(ge.coefficients[1] == sign - triv);
    CHECK_FALSE(ge.positive);
  }
}

TEST_CASE("three-point line under several groups") {
  KlEngine eng;
  const Matroid m = Matroid::uniform(2, {1, 2, 3});

  SECTION("trivial group") {
    const YoungGroup g = YoungGroup::singletons({1, 2, 3});
    const EquivariantMatroid em(m, g);
    const VirtualRep one = VirtualRep::trivial(g);
    CHECK(eng.kl(em) == poly(g, {one}));
    CHECK(eng.zpoly(em) == poly(g, {one, 3 * one, one}));
    CHECK(dimension_polynomial(eng.zpoly(em)) ==
          std::map<int, long long>{{0, 1}, {1, 3}, {2, 1}});
  }

  SECTION("full symmetric group") {
    const YoungGroup s3 = YoungGroup::full({1, 2, 3});
    const EquivariantMatroid em(m, s3);
    const VirtualRep t3 = VirtualRep::irreducible(s3, {pa({3})});
    const VirtualRep std3 = VirtualRep::irreducible(s3, {pa({2, 1})});
    CHECK(eng.kl(em) == poly(s3, {t3}));
    CHECK(eng.zpoly(em) == poly(s3, {t3, t3 + std3, t3}));
  }

  SECTION("transpositions of two of the three points") {
    const YoungGroup g({{1, 2}, {3}});
    const EquivariantMatroid em(m, g);
    const VirtualRep a = VirtualRep::irreducible(g, {pa({2}), pa({1})});
    const VirtualRep b = VirtualRep::irreducible(g, {pa({1, 1}), pa({1})});
    CHECK(eng.kl(em) == poly(g, {a}));
    CHECK(eng.zpoly(em) == poly(g, {a, 2 * a + b, a}));

    const GammaExpansion ge = gamma_expansion(eng.zpoly(em), 2);
    REQUIRE(ge.coefficients.size() == 2);
    CHECK(ge.coefficients[0] == a);
    CHECK(ge.coefficients[1] == b);
    CHECK(ge.positive);
  }

  SECTION("restriction commutes with the computation") {
    const YoungGroup s3 = YoungGroup::full({1, 2, 3});
    const YoungGroup mid({{1, 2}, {3}});
    const YoungGroup triv = YoungGroup::singletons({1, 2, 3});
    const KlPair top = eng.compute(EquivariantMatroid(m, s3));
    CHECK(graded_restrict(top.p, mid) == eng.kl(EquivariantMatroid(m, mid)));
    CHECK(graded_restrict(top.z, mid) == eng.zpoly(EquivariantMatroid(m, mid)));
    CHECK(graded_restrict(top.z, triv) == eng.zpoly(EquivariantMatroid(m, triv)));
  }
}

TEST_CASE("rank-one uniform matroids") {
  KlEngine eng;
  for (int n = 1; n <= 4; ++n) {
    const YoungGroup g = YoungGroup::full(iota1(n));
    const EquivariantMatroid em(Matroid::uniform(1, iota1(n)), g);
    const VirtualRep one = VirtualRep::trivial(g);
    CHECK(eng.kl(em) == poly(g, {one}));
    CHECK(eng.zpoly(em) == poly(g, {one, one}));
  }
}

TEST_CASE("corank-one uniform matroids") {
  KlEngine eng;

  SECTION("four elements") {
    const YoungGroup s4 = YoungGroup::full(iota1(4));
    const EquivariantMatroid em(Matroid::cycle(iota1(4)), s4);
    const VirtualRep t = VirtualRep::irreducible(s4, {pa({4})});
    const VirtualRep sq = VirtualRep::irreducible(s4, {pa({2, 2})});
    const VirtualRep hook = VirtualRep::irreducible(s4, {pa({3, 1})});
    CHECK(eng.kl(em) == poly(s4, {t, sq}));
    CHECK(eng.zpoly(em) == poly(s4, {t, t + hook + sq, t + hook + sq, t}));
  }

  SECTION("five elements") {
    const YoungGroup s5 = YoungGroup::full(iota1(5));
    const EquivariantMatroid em(Matroid::cycle(iota1(5)), s5);
    const VirtualRep t = VirtualRep::irreducible(s5, {pa({5})});
    const VirtualRep w = VirtualRep::irreducible(s5, {pa({3, 2})});
    CHECK(eng.kl(em) == poly(s5, {t, w}));
  }
}

TEST_CASE("uniform matroid of rank three on five elements") {
  KlEngine eng;
  const YoungGroup s5 = YoungGroup::full(iota1(5));
  const EquivariantMatroid em(Matroid::uniform(3, iota1(5)), s5);
  const VirtualRep t = VirtualRep::irreducible(s5, {pa({5})});
  const VirtualRep h = VirtualRep::irreducible(s5, {pa({4, 1})});
  const VirtualRep w = VirtualRep::irreducible(s5, {pa({3, 2})});
  CHECK(eng.kl(em) == poly(s5, {t, w}));
  CHECK(eng.zpoly(em) == poly(s5, {t, t + h + w, t + h + w, t}));
}

TEST_CASE("rank-two uniform matroids have constant KL polynomial") {
  KlEngine eng;
  for (int n = 2; n <= 5; ++n) {
    const YoungGroup g = YoungGroup::full(iota1(n));
    const EquivariantMatroid em(Matroid::uniform(2, iota1(n)), g);
    CHECK(eng.kl(em) == poly(g, {VirtualRep::trivial(g)}));
    CHECK(is_palindromic(eng.zpoly(em), 2));
  }
}

TEST_CASE("boolean matroids are not gamma positive beyond rank one") {
  KlEngine eng;
  {
    const YoungGroup g = YoungGroup::full({1});
    const GradedVirtualRep z = eng.zpoly(EquivariantMatroid(Matroid::boolean_matroid({1}), g));
    CHECK(gamma_expansion(z, 1).positive);
  }
  for (int n = 2; n <= 5; ++n) {
    const YoungGroup g = YoungGroup::full(iota1(n));
    const GradedVirtualRep z =
        eng.zpoly(EquivariantMatroid(Matroid::boolean_matroid(iota1(n)), g));
    CHECK_FALSE(gamma_expansion(z, n).positive);
  }
}

TEST_CASE("two-element symmetry of corank-one matroids is gamma positive") {
  KlEngine eng;
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<int>> blocks{{1, 2}};
    for (int x = 3; x <= n; ++x) blocks.push_back({x});
    const YoungGroup g((blocks));
    const GradedVirtualRep z = eng.zpoly(EquivariantMatroid(Matroid::cycle(iota1(n)), g));
    CHECK(gamma_expansion(z, n - 1).positive);
  }
}

TEST_CASE("two glued triangles") {
  KlEngine eng;
  const Matroid m = Matroid::glued_cycles(3, 3);
  const YoungGroup g({{1, 2}, {3}, {4, 5}});
  const EquivariantMatroid em(m, g);

  CHECK(dims(eng.kl(em)) == std::vector<long long>{1, 1});
  CHECK(dims(eng.zpoly(em)) == std::vector<long long>{1, 6, 6, 1});
  CHECK(is_palindromic(eng.zpoly(em), 3));

  const YoungGroup triv = YoungGroup::singletons(iota1(5));
  CHECK(graded_restrict(eng.kl(em), triv) == eng.kl(EquivariantMatroid(m, triv)));

  SECTION("a non-preserving group is rejected") {
    CHECK_THROWS_AS(EquivariantMatroid(m, YoungGroup({{1}, {2}, {3, 4}, {5}})),
                    precondition_error);
  }
}

TEST_CASE("deletion identity agrees with the defining recursion") {
  KlEngine eng;
  struct Case {
    Matroid m;
    YoungGroup g;
    std::vector<int> elements;
  };
  const std::vector<Case> cases = {
      {Matroid::uniform(2, iota1(3)), YoungGroup::singletons(iota1(3)), {1, 2, 3}},
      {Matroid::uniform(2, iota1(3)), YoungGroup({{1}, {2, 3}}), {1, 2}},
      {Matroid::uniform(2, iota1(3)), YoungGroup::full(iota1(3)), {2}},
      {Matroid::uniform(1, iota1(2)), YoungGroup::full(iota1(2)), {1}},
      {Matroid::uniform(1, iota1(3)), YoungGroup({{1, 2}, {3}}), {1, 3}},
      {Matroid::uniform(2, iota1(4)), YoungGroup::full(iota1(4)), {1}},
      {Matroid::uniform(3, iota1(5)), YoungGroup::full(iota1(5)), {1}},
      {Matroid::cycle(iota1(4)), YoungGroup::full(iota1(4)), {1}},
      {Matroid::cycle(iota1(5)), YoungGroup({{1, 2}, {3}, {4, 5}}), {1, 3}},
      {Matroid::glued_cycles(3, 3), YoungGroup({{1, 2}, {3}, {4, 5}}), {1, 3, 4}},
      {Matroid::glued_cycles(3, 2), YoungGroup({{1, 2}, {3}, {4}}), {1, 4}},
      {Matroid::direct_sum(Matroid::uniform(1, {1, 2}), Matroid::uniform(1, {3, 4})),
       YoungGroup({{1, 2}, {3, 4}}), {1, 3}},
  };
  for (const auto& c : cases) {
    const EquivariantMatroid em(c.m, c.g);
    const KlPair direct = eng.compute(em);
    for (int i : c.elements) {
      INFO("element " << i);
      // The identity lives over the stabilizer of i, so restrict before comparing.
      const YoungGroup wi = stabilizer_of_point(c.g, i);
      const KlPair via_deletion = eng.deletion_formula(em, i);
      CHECK(via_deletion.p == graded_restrict(direct.p, wi));
      CHECK(via_deletion.z == graded_restrict(direct.z, wi));
    }
  }
}

TEST_CASE("middle coefficient extraction") {
  KlEngine eng;
  const YoungGroup s2 = YoungGroup::full({1, 2});
  CHECK(eng.tau(EquivariantMatroid(Matroid::uniform(1, {1, 2}), s2)) ==
        VirtualRep::irreducible(s2, {pa({2})}));

  const YoungGroup s3 = YoungGroup::full(iota1(3));
  CHECK(eng.tau(EquivariantMatroid(Matroid::uniform(2, iota1(3)), s3)).is_zero());
  CHECK(eng.tau(EquivariantMatroid(Matroid::boolean_matroid(iota1(3)), s3)).is_zero());

  const YoungGroup s4 = YoungGroup::full(iota1(4));
  CHECK(eng.tau(EquivariantMatroid(Matroid::cycle(iota1(4)), s4)) ==
        VirtualRep::irreducible(s4, {pa({2, 2})}));
}

TEST_CASE("adding a coloop to a Z-polynomial") {
  KlEngine eng;
  const YoungGroup one = YoungGroup::singletons({1});
  const GradedVirtualRep z1 =
      eng.zpoly(EquivariantMatroid(Matroid::boolean_matroid({1}), one));

  const YoungGroup two = YoungGroup::singletons({1, 2});
  CHECK(z_coloop(z1, 2) ==
        eng.zpoly(EquivariantMatroid(Matroid::boolean_matroid({1, 2}), two)));

  const YoungGroup three = YoungGroup::singletons(iota1(3));
  CHECK(z_coloop(z_coloop(z1, 2), 3) ==
        eng.zpoly(EquivariantMatroid(Matroid::boolean_matroid(iota1(3)), three)));
}

TEST_CASE("results are relabelled consistently with the cache") {
  KlEngine eng;
  const std::vector<int> odd = {3, 5, 7, 9};
  const Matroid m1 = Matroid::uniform(2, iota1(4));
  const Matroid m2 = Matroid::uniform(2, odd);

  const KlPair first = eng.compute(EquivariantMatroid(m1, YoungGroup::full(iota1(4))));
  const size_t filled = eng.cache_size();

  const KlPair second = eng.compute(EquivariantMatroid(m2, YoungGroup::full(odd)));
  CHECK(eng.cache_size() == filled);  // served from the cache, relabelled on the way out
  CHECK(second.z.group().ground() == odd);

  const std::map<int, int> up = {{1, 3}, {2, 5}, {3, 7}, {4, 9}};
  CHECK(second.p == relabel(first.p, up));
  CHECK(second.z == relabel(first.z, up));

  const KlPair blocked1 = eng.compute(EquivariantMatroid(m1, YoungGroup({{1, 3}, {2, 4}})));
  const KlPair blocked2 = eng.compute(EquivariantMatroid(m2, YoungGroup({{3, 7}, {5, 9}})));
  CHECK(blocked2.p == relabel(blocked1.p, up));
  CHECK(blocked2.z == relabel(blocked1.z, up));

  CHECK(eng.compute(EquivariantMatroid(m1, YoungGroup::full(iota1(4)))).z == first.z);
}

TEST_CASE("engine rejects bad inputs") {
  KlEngine eng;
  const Matroid loopy = Matroid::from_bases({1, 2}, {{1}});
  CHECK_THROWS_AS(eng.compute(EquivariantMatroid(loopy, YoungGroup::singletons({1, 2}))),
                  precondition_error);

  const EquivariantMatroid coloop(Matroid::boolean_matroid({1, 2}),
                                  YoungGroup::singletons({1, 2}));
  CHECK_THROWS_AS(eng.deletion_formula(coloop, 1), precondition_error);

  const EquivariantMatroid line(Matroid::uniform(2, iota1(3)),
                                YoungGroup::singletons(iota1(3)));
  CHECK_THROWS_AS(eng.deletion_formula(line, 9), precondition_error);
}

TEST_CASE("gamma expansion rejects non-palindromic input") {
  const YoungGroup g = YoungGroup::full({1, 2});
  const VirtualRep t = VirtualRep::irreducible(g, {pa({2})});
  CHECK_THROWS_AS(gamma_expansion(poly(g, {t, t + t}), 1), precondition_error);
  CHECK_THROWS_AS(gamma_expansion(poly(g, {t, t, t}), 1), precondition_error);
  CHECK_THROWS_AS(gamma_expansion(poly(g, {t}), -1), precondition_error);
}

TEST_CASE("gamma expansion of a shifted binomial is itself") {
  const YoungGroup g = YoungGroup::full(iota1(3));
  const VirtualRep t = VirtualRep::irreducible(g, {pa({3})});
  const VirtualRep s = VirtualRep::irreducible(g, {pa({2, 1})});
  // t (1+x)^4 + s x (1+x)^2
  const GradedVirtualRep f = scale_by_binomial(graded_constant(t), 4) +
                             scale_by_binomial(graded_constant(s), 2).shifted(1);
  const GammaExpansion ge = gamma_expansion(f, 4);
  REQUIRE(ge.coefficients.size() == 3);
  CHECK(ge.coefficients[0] == t);
  CHECK(ge.coefficients[1] == s);
  CHECK(ge.coefficients[2].is_zero());
  CHECK(ge.positive);
}
