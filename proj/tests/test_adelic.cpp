#include "pw/adelic.hpp"
#include "pw/errors.hpp"
#include "pw/globalbasis.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace pw;

TEST_CASE("adelic_ordering of the profinite integers") {
  AdelicOrdering o = adelic_ordering(AdelicSet{}, 5, 32);
  REQUIRE(o.points.size() == 5);
  for (long n = 0; n < 5; ++n)
    CHECK(o.points[static_cast<std::size_t>(n)].fallback == Rat(n));
  CHECK(o.exceptions[4] == std::vector<long>{2, 3});
  CHECK(o.exceptions[0].empty());
  CHECK(o.exceptions[1].empty());
}

TEST_CASE("adelic_ordering with a tracked component") {
  AdelicSet a;
  a.tracked.emplace(2, CompactSet::balls(2, {{1, 1}}));
  AdelicOrdering o = adelic_ordering(a, 2, 32);
  CHECK(o.points[0].tracked.at(2).residue() == 1);
  CHECK(o.points[1].tracked.at(2).residue() == 3);
  CHECK(o.points[0].fallback == 0);
  CHECK(o.points[1].fallback == 1);
  CHECK(o.exceptions[1] == std::vector<long>{2});

  AdelicSet pzp;
  pzp.fallback = DefaultFamily::MaximalIdeal;
  CHECK_THROWS_AS(adelic_ordering(pzp, 2, 32), NoAdelicOrdering);
  CHECK_NOTHROW(adelic_ordering(pzp, 1, 32));
}

TEST_CASE("adelic_basis") {
  AdelicOrdering nat = adelic_ordering(AdelicSet{}, 6, 32);
  AdelicPoly g3 = adelic_basis(nat, 3);
  CHECK(g3.fallback == RatPoly::binomial(3));
  CHECK(g3.tracked.count(2));
  CHECK(g3.tracked.count(3));
  CHECK(adelic_basis(nat, 0).fallback == RatPoly::constant(1));
  CHECK(adelic_membership(g3, nat));

  AdelicSet a;
  a.tracked.emplace(3, CompactSet::maximal_ideal(3));
  AdelicOrdering o = adelic_ordering(a, 3, 32);
  REQUIRE(o.local.at(3).values()[1] == Rat(3));
  AdelicPoly g1 = adelic_basis(o, 1);
  CHECK(congruent(g1.tracked.at(3)[1], embed(Rat(1, 3), 3, 32)));
  CHECK(g1.tracked.at(3)[0].is_zero());
  CHECK(g1.fallback == RatPoly({0, 1}));
}

TEST_CASE("adelic_membership") {
  AdelicOrdering nat = adelic_ordering(AdelicSet{}, 4, 32);
  CHECK(adelic_membership(AdelicPoly::from_rational(RatPoly::binomial(2), AdelicSet{}, 32), nat));
  CHECK_FALSE(adelic_membership(AdelicPoly::from_rational(RatPoly::monomial(Rat(1, 2), 1), AdelicSet{}, 32), nat));
  CHECK(adelic_membership(AdelicPoly::from_rational(RatPoly(), AdelicSet{}, 32), nat));
}

TEST_CASE("triangularity of the adelic basis") {
  std::mt19937 rng(29);
  for (int t = 0; t < 6; ++t) {
    AdelicSet a;
    for (long p : {2L, 3L, 5L})
      if (rng() % 2)
        a.tracked.emplace(p, oracle::random_ball_set(rng, p, 2, 3));
    AdelicOrdering o = adelic_ordering(a, 7, 32);
    for (long n = 0; n <= 6; ++n) {
      AdelicPoly g = adelic_basis(o, n);
      CHECK(adelic_membership(g, o));
      for (long k = 0; k <= n; ++k) {
        AdelicValue v = evaluate(g, o.points[static_cast<std::size_t>(k)], 32);
        const Rat want = k == n ? 1 : 0;
        CHECK(v.fallback == want);
        for (const auto& [p, x] : v.tracked)
          CHECK(congruent(x, embed(want, p, 8)));
      }
    }
  }
}

TEST_CASE("scale_into_Z") {
  std::map<long, std::vector<RationalBall>> one{{2, {{Rat(1, 2), 1}}}};
  ScaledSet s = scale_into_Z(one);
  CHECK(s.d == 2);
  CHECK(s.set.tracked.at(2).ball_list() == std::vector<Ball>{{1, 2}});

  std::map<long, std::vector<RationalBall>> integral{{3, {{Rat(2), 1}}}};
  CHECK(scale_into_Z(integral).d == 1);

  std::map<long, std::vector<RationalBall>> two{{2, {{Rat(1, 2), 3}}}, {3, {{Rat(1, 9), 2}}}};
  CHECK(scale_into_Z(two).d == 18);
}

TEST_CASE("conjugate_poly") {
  CHECK(conjugate_poly(RatPoly({0, 0, 1}), 2, 4) == RatPoly({0, 0, 1}));
  CHECK(conjugate_poly(RatPoly({0, 1}), 3, 1) == RatPoly({0, 3}));
  CHECK(conjugate_poly(RatPoly({1, 1}), 2, 2) == RatPoly({Rat(1, 2), 1}));
  CHECK_THROWS_AS(conjugate_poly(RatPoly({1}), 0, 1), ValidationError);

  // Sampled consistency: g(x) = f(d x)/d1 on the scaled set.
  std::map<long, std::vector<RationalBall>> comps{{2, {{Rat(1, 2), 1}}}, {5, {{Rat(3, 5), 1}}}};
  ScaledSet s = scale_into_Z(comps);
  RatPoly f({Rat(1, 3), 2, Rat(-1, 7)});
  RatPoly g = conjugate_poly(f, s.d, 5);
  for (const auto& [p, set] : s.set.tracked)
    for (const Int& r : set.residues(set.max_exponent() + 2)) {
      const Rat x(r);
      CHECK(g(x) == f(Rat(s.d) * x) / 5);
      CHECK(set.contains(x));
    }
}

TEST_CASE("basis transfer: Z-basis polynomials are adelic members") {
  AdelicSet a;
  a.tracked.emplace(2, CompactSet::balls(2, {{1, 1}}));
  a.tracked.emplace(5, CompactSet::balls(5, {{0, 1}, {3, 2}}));
  BasisFamily b = regular_basis(a, 6, 32);
  AdelicOrdering o = adelic_ordering(a, 7, 32);
  for (const RatPoly& g : b.polys)
    CHECK(adelic_membership(AdelicPoly::from_rational(g, a, 32), o));
  // and a non-member is rejected
  CHECK_FALSE(adelic_membership(AdelicPoly::from_rational(Rat(1, 2) * b.polys[6], a, 32), o));
}
