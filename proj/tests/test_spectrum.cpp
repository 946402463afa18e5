#include <doctest.h>

#include "helpers.hpp"
#include "pgn/errors.hpp"
#include "pgn/hull.hpp"
#include "pgn/spectrum.hpp"

using namespace pgn;
using namespace pgn::testing;

namespace {

SelfSimilarSystem r_system(const Rational& a) {
  return SelfSimilarSystem(r_base_path(a), a, SystemClass::generalized());
}

SelfSimilarSystem s_system(const Rational& b) {
  return SelfSimilarSystem(s_base_path(b), b, SystemClass::generalized());
}

SelfSimilarSystem diagonal_system() {
  // P(q) = q * (1/4, 1/4, 1/4, 1/4) over one period [4, 8].
  PLPath base(4, {Rational(4), Rational(8)},
              {make_vector({1, 1, 1, 1}), make_vector({2, 2, 2, 2})});
  return SelfSimilarSystem(base, Rational(2), SystemClass::generalized());
}

// The 5-component map at (alpha, beta) = (2, 3), frozen.
LinearMap min_map_23() {
  RationalMatrix rows(5, 4);
  rows << Rational(-3), Rational(-1), Rational(0), Rational(2),
      Rational(3), Rational(-3), Rational(4), Rational(-2),
      Rational(6), Rational(-2), Rational(2), Rational(-2),
      Rational(0), Rational(0), Rational(1), Rational(-1),
      Rational(0), Rational(-1), Rational(0), Rational(1);
  return LinearMap(rows);
}

}  // namespace

TEST_CASE("self-similar construction checks its invariants") {
  CHECK_THROWS_AS(
      SelfSimilarSystem(r_base_path(Rational(2)), Rational(3),
                        SystemClass::generalized()),
      InvalidSystemError);  // wrong period span for ratio 3
  CHECK_THROWS_AS(
      SelfSimilarSystem(r_base_path(Rational(2)), Rational(1),
                        SystemClass::generalized()),
      BadParametersError);
  CHECK_THROWS_AS(
      SelfSimilarSystem(r_base_path(Rational(2)), Rational(2),
                        SystemClass::exact()),
      InvalidSystemError);  // R is generalized, not exact
}

TEST_CASE("self-similar evaluation rescales into the base period") {
  const SelfSimilarSystem r = r_system(Rational(2));
  CHECK(r.eval(Rational(10)) == make_vector({2, 2, 2, 4}));
  CHECK(r.eval(Rational(20)) == make_vector({4, 4, 4, 8}));
  CHECK(r.eval(Rational(5)) == make_vector({1, 1, 1, 2}));
  CHECK(r.eval(Rational(11)) == make_vector({2, 2, 3, 4}));
  CHECK_THROWS_AS(r.eval(rq("9/2")), OutOfDomainError);
}

TEST_CASE("normalize") {
  const SimplexPoint a3 = normalize(make_vector({1, 1, 2, 4}));
  CHECK(a3.coordinates() ==
        make_vector({rq("1/8"), rq("1/8"), rq("1/4"), rq("1/2")}));
  CHECK(normalize(make_vector({0, 0, 0, 1})).coordinates() ==
        make_vector({0, 0, 0, 1}));
  const Rational c(7, 3);
  CHECK(normalize(make_vector({c, c, c, c})).coordinates() ==
        make_vector({rq("1/4"), rq("1/4"), rq("1/4"), rq("1/4")}));
  CHECK_THROWS_AS(normalize(make_vector({0, 0, 0, 0})), ZeroSumError);
  CHECK_THROWS_AS(normalize(make_vector({2, 1, 3, 4})), NotSortedError);
  CHECK_THROWS_AS(normalize(make_vector({-1, 1, 3, 4})), NotSortedError);
}

TEST_CASE("limit-set vertices of R, S and the diagonal") {
  const std::vector<SimplexPoint> r_vertices =
      limit_set_vertices(r_system(Rational(2)));
  REQUIRE(r_vertices.size() == 3);
  CHECK(r_vertices[0] == normalize(make_vector({1, 1, 1, 2})));
  CHECK(r_vertices[1] == normalize(make_vector({1, 1, 2, 2})));
  CHECK(r_vertices[2] == normalize(make_vector({1, 1, 2, 4})));

  const std::vector<SimplexPoint> s_vertices =
      limit_set_vertices(s_system(Rational(3)));
  REQUIRE(s_vertices.size() == 3);
  CHECK(s_vertices[0] == normalize(make_vector({1, 3, 3, 3})));
  CHECK(s_vertices[1] == normalize(make_vector({1, 3, 9, 9})));
  CHECK(s_vertices[2] == normalize(make_vector({3, 3, 9, 9})));

  const std::vector<SimplexPoint> diag = limit_set_vertices(diagonal_system());
  REQUIRE(diag.size() == 1);
  CHECK(diag[0] == normalize(make_vector({1, 1, 1, 1})));
}

TEST_CASE("limit-set vertices are invariant under shifting the base period") {
  const SelfSimilarSystem r = r_system(Rational(2));
  const SelfSimilarSystem shifted(r.base().scaled(Rational(2)), Rational(2),
                                  SystemClass::generalized());
  CHECK(limit_set_vertices(r) == limit_set_vertices(shifted));
}

TEST_CASE("extreme points: collinear and singleton cases") {
  const SimplexPoint p = normalize(make_vector({0, 0, 0, 1}));
  const SimplexPoint q = normalize(make_vector({0, 0, 1, 1}));
  const SimplexPoint mid = normalize(make_vector({0, 0, 1, 3}));
  // mid = (0,0,1/4,3/4) = ((0,0,0,1) + (0,0,1/2,1/2)) / 2
  std::vector<SimplexPoint> collinear{p, mid, q};
  const std::vector<SimplexPoint> extremes = extreme_points(collinear);
  REQUIRE(extremes.size() == 2);
  CHECK(extremes[0] == p);
  CHECK(extremes[1] == q);

  std::vector<SimplexPoint> single{mid};
  CHECK(extreme_points(single) == std::vector<SimplexPoint>{mid});
}

TEST_CASE("extreme points: minimum-counterexample vertex set at (2,3)") {
  std::vector<SimplexPoint> points{
      normalize(make_vector({1, 1, 1, 2})),   // A1^
      normalize(make_vector({1, 1, 2, 2})),   // A2^
      normalize(make_vector({1, 1, 2, 4})),   // A3^
      normalize(make_vector({1, 3, 3, 3})),   // B1^
      normalize(make_vector({1, 3, 9, 9})),   // B2^
      normalize(make_vector({3, 3, 9, 9})),   // B3^
      normalize(make_vector({0, 0, 1, 1})),   // E3
  };
  const std::vector<SimplexPoint> extremes = extreme_points(points);
  REQUIRE(extremes.size() == 5);
  CHECK(extremes[0] == points[0]);
  CHECK(extremes[1] == points[1]);
  CHECK(extremes[2] == points[2]);
  CHECK(extremes[3] == points[3]);
  CHECK(extremes[4] == points[6]);
}

TEST_CASE("extreme points are idempotent and generate the input hull") {
  std::vector<SimplexPoint> points{
      normalize(make_vector({1, 1, 1, 2})),
      normalize(make_vector({1, 1, 2, 2})),
      normalize(make_vector({1, 1, 2, 4})),
      normalize(make_vector({1, 3, 3, 3})),
      normalize(make_vector({1, 3, 9, 9})),
      normalize(make_vector({0, 0, 1, 1})),
      normalize(make_vector({1, 1, 1, 2})),  // duplicate
  };
  const std::vector<SimplexPoint> extremes = extreme_points(points);
  CHECK(extreme_points(extremes) == extremes);
  for (const SimplexPoint& p : points) {
    CHECK(hull_contains(extremes, p));
  }
}

TEST_CASE("hull membership: segment points and outsiders") {
  const SimplexPoint b1 = normalize(make_vector({1, 3, 3, 3}));
  const SimplexPoint e3 = normalize(make_vector({0, 0, 1, 1}));
  const SimplexPoint b2 = normalize(make_vector({1, 3, 9, 9}));
  // B2^ = (5/11) B1^ + (6/11) E3
  std::vector<SimplexPoint> segment{b1, e3};
  CHECK(hull_contains(segment, b2));
  CHECK(hull_contains(segment, b1));  // generator inside its own hull
  const SimplexPoint e1 = normalize(make_vector({1, 1, 1, 1}));
  CHECK_FALSE(hull_contains(segment, e1));
}

TEST_CASE("mu_exact matches the frozen corollary values at (2,3)") {
  const LinearMap map = min_map_23();
  const SpectrumPoint mu_r = mu_exact(map, r_system(Rational(2)));
  CHECK(mu_r.mode() == SpectrumMode::Exact);
  CHECK(mu_r.values() == make_vector({0, 0, 0, rq("-1/4"), rq("1/6")}));
  const SpectrumPoint mu_s = mu_exact(map, s_system(Rational(3)));
  CHECK(mu_s.values() == make_vector({0, 0, 0, 0, 0}));
}

TEST_CASE("mu_exact agrees with the brute-force path oracle") {
  const LinearMap map = min_map_23();
  const SelfSimilarSystem r = r_system(Rational(2));
  // Brute force over four explicit periods, including segment midpoints.
  CHECK(mu_exact(map, r).values() == brute_force_mu(map, r.extended(4)));
  const SelfSimilarSystem s = s_system(Rational(3));
  CHECK(mu_exact(map, s).values() == brute_force_mu(map, s.extended(3)));
}

TEST_CASE("mu_exact rejects dimension mismatches and improper systems") {
  RationalMatrix one_row(1, 3);
  one_row << Rational(1), Rational(1), Rational(1);
  CHECK_THROWS_AS(mu_exact(LinearMap(one_row), r_system(Rational(2))),
                  DimensionMismatchError);
  // P(q) = (0, q) is self-similar but P_1 stays bounded: not proper.
  PLPath flat(2, {Rational(1), Rational(2)},
              {make_vector({0, 1}), make_vector({0, 2})});
  const SelfSimilarSystem improper(flat, Rational(2),
                                   SystemClass::generalized());
  CHECK_FALSE(improper.proper());
  CHECK_THROWS_AS(limit_set_vertices(improper), NotProperError);
  RationalMatrix two_row(1, 2);
  two_row << Rational(1), Rational(1);
  CHECK_THROWS_AS(mu_exact(LinearMap(two_row), improper), NotProperError);
}

TEST_CASE("sum map always attains exactly 1") {
  RationalMatrix sum_row(1, 4);
  sum_row << Rational(1), Rational(1), Rational(1), Rational(1);
  const LinearMap sum_map(sum_row);
  CHECK(mu_exact(sum_map, r_system(Rational(2))).values() == make_vector({1}));
  CHECK(mu_exact(sum_map, s_system(Rational(3))).values() == make_vector({1}));
  CHECK(mu_exact(sum_map, diagonal_system()).values() == make_vector({1}));
}

TEST_CASE("positive scaling of the map scales mu_exact") {
  const LinearMap map = min_map_23();
  const LinearMap tripled(RationalMatrix(3 * map.rows()));
  const SelfSimilarSystem r = r_system(Rational(2));
  CHECK(mu_exact(tripled, r).values() ==
        RationalVector(3 * mu_exact(map, r).values()));
}

TEST_CASE("mu_estimate over exactly one period equals mu_exact") {
  const LinearMap map = min_map_23();
  for (const SelfSimilarSystem& sys :
       {r_system(Rational(2)), s_system(Rational(3)), diagonal_system()}) {
    const SpectrumPoint exact = mu_exact(map, sys);
    // One period: window [q_0, ratio*q_0] via tail_fraction = 1/ratio.
    const SpectrumPoint one_period =
        mu_estimate(map, sys.base(), 1 / sys.ratio());
    CHECK(one_period.mode() == SpectrumMode::Estimate);
    CHECK(one_period.values() == exact.values());
    // Any window containing at least one full period also attains it.
    const SpectrumPoint tail =
        mu_estimate(map, sys.extended(3), 1 / (sys.ratio() * sys.ratio()));
    CHECK(tail.values() == exact.values());
  }
}

TEST_CASE("mu_estimate of a constant-direction path returns T of it") {
  RationalMatrix rows(2, 4);
  rows << Rational(1), Rational(0), Rational(0), Rational(0),
      Rational(0), Rational(-1), Rational(0), Rational(1);
  const LinearMap map(rows);
  PLPath diag(4, {Rational(4), Rational(40)},
              {make_vector({1, 1, 1, 1}), make_vector({10, 10, 10, 10})});
  const SpectrumPoint est = mu_estimate(map, diag, rq("1/2"));
  CHECK(est.values() == make_vector({rq("1/4"), 0}));
  CHECK(est.window()->lo == 20);
  CHECK(est.window()->hi == 40);
}

TEST_CASE("mu_estimate rejects degenerate tail fractions") {
  const LinearMap map = min_map_23();
  const PLPath r = r_base_path(Rational(2));
  CHECK_THROWS_AS(mu_estimate(map, r, Rational(1)), EmptyWindowError);
  CHECK_THROWS_AS(mu_estimate(map, r, Rational(3, 2)), EmptyWindowError);
  CHECK_THROWS_AS(mu_estimate(map, r, Rational(0)), EmptyWindowError);
  CHECK_THROWS_AS(mu_estimate(map, r, Rational(-1, 2)), EmptyWindowError);
}

TEST_CASE("coordinatewise_min") {
  const SpectrumPoint x = SpectrumPoint::exact(make_vector({0, rq("-1/4"), 1}));
  const SpectrumPoint y = SpectrumPoint::exact(make_vector({rq("-1/8"), 0, 1}));
  const SpectrumPoint m = coordinatewise_min(x, y);
  CHECK(m.values() == make_vector({rq("-1/8"), rq("-1/4"), 1}));
  CHECK(m.mode() == SpectrumMode::Exact);
  // idempotent and commutative
  CHECK(coordinatewise_min(x, x) == x);
  CHECK(coordinatewise_min(x, y).values() == coordinatewise_min(y, x).values());
  // dimension mismatch
  const SpectrumPoint z = SpectrumPoint::exact(make_vector({0, 0}));
  CHECK_THROWS_AS(coordinatewise_min(x, z), DimensionMismatchError);
  // estimate mode dominates
  const SpectrumPoint e =
      SpectrumPoint::estimate(make_vector({0, 0, 0}), {Rational(1), Rational(2)});
  CHECK(coordinatewise_min(x, e).mode() == SpectrumMode::Estimate);
}

TEST_CASE("limit-set vertices satisfy the simplex invariants exactly") {
  for (const SelfSimilarSystem& sys :
       {r_system(rq("3/2")), s_system(rq("5/2")), r_system(Rational(2))}) {
    for (const SimplexPoint& v : limit_set_vertices(sys)) {
      CHECK(v.coordinates().sum() == 1);  // constructor enforced, re-checked
    }
  }
}
