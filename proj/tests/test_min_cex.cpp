#include <doctest.h>

#include "helpers.hpp"
#include "pgn/ballgame.hpp"
#include "pgn/errors.hpp"
#include "pgn/min_cex.hpp"

using namespace pgn;
using namespace pgn::testing;

TEST_CASE("build_min_instance rejects bad parameter ranges") {
  CHECK_THROWS_AS(build_min_instance(Rational(3), Rational(2)),
                  BadParametersError);
  CHECK_THROWS_AS(build_min_instance(Rational(2), Rational(2)),
                  BadParametersError);
  CHECK_THROWS_AS(build_min_instance(Rational(1), Rational(2)),
                  BadParametersError);
  CHECK_THROWS_AS(build_min_instance(rq("1/2"), Rational(2)),
                  BadParametersError);
}

TEST_CASE("instance at (2,3) has the frozen map rows") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  RationalMatrix expected(5, 4);
  expected << Rational(-3), Rational(-1), Rational(0), Rational(2),
      Rational(3), Rational(-3), Rational(4), Rational(-2),
      Rational(6), Rational(-2), Rational(2), Rational(-2),
      Rational(0), Rational(0), Rational(1), Rational(-1),
      Rational(0), Rational(-1), Rational(0), Rational(1);
  CHECK(instance.map.rows() == expected);
}

TEST_CASE("instance systems match the frozen division data") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  CHECK(instance.r_system.base() == r_base_path(Rational(2)));
  CHECK(instance.s_system.base() == s_base_path(Rational(3)));
  CHECK(division_numbers(instance.r_system.base()) ==
        std::vector<Rational>{5, 6, 8, 10});
  CHECK(division_numbers(instance.s_system.base()) ==
        std::vector<Rational>{10, 22, 24, 30});
  CHECK(instance.r_system.proper());
  CHECK(instance.s_system.proper());
}

TEST_CASE("halfspace representation report at (2,3)") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  const CheckReport report = verify_halfspace_rep(instance);
  for (const CheckLine& line : report.lines) {
    INFO(line.name, ": ", line.detail);
    CHECK(line.passed);
  }
  // spot values: T at A_1 = (1,1,1,2)
  const RationalVector a1 = make_vector({1, 1, 1, 2});
  CHECK(instance.map.component(0, a1) == 0);
  CHECK(instance.map.component(1, a1) == 0);
  CHECK(instance.map.component(2, a1) == 2);
  // E_1 is cut away by T_1
  const RationalVector e1 = make_vector({rq("1/4"), rq("1/4"), rq("1/4"), rq("1/4")});
  CHECK(instance.map.component(0, e1) == rq("-1/2"));
  CHECK_FALSE(hull_contains(instance.hull_generators, SimplexPoint(e1)));
  // B_1 kills all five components
  const RationalVector b1 = make_vector({1, 3, 3, 3});
  for (Eigen::Index i = 0; i < 5; ++i) {
    CHECK(instance.map.component(i, b1) == 0);
  }
}

TEST_CASE("halfspace representation holds across the parameter grid") {
  for (const auto& [a, b] : {std::pair{rq("2"), rq("3")},
                             std::pair{rq("3/2"), rq("2")},
                             std::pair{rq("2"), rq("5")},
                             std::pair{rq("5/4"), rq("7/2")}}) {
    const MinCexInstance instance = build_min_instance(a, b);
    CHECK(verify_halfspace_rep(instance).passed());
    CHECK(verify_spectrum_values(instance).passed());
    CHECK(verify_kappa_form_bounds(instance).passed());
  }
}

TEST_CASE("corollary spectrum values at (2,3) and (3/2,2)") {
  const MinCexInstance at23 = build_min_instance(Rational(2), Rational(3));
  const SpectrumPoint mu_r = mu_exact(at23.map, at23.r_system);
  CHECK(mu_r.values() == make_vector({0, 0, 0, rq("-1/4"), rq("1/6")}));
  const SpectrumPoint mu_s = mu_exact(at23.map, at23.s_system);
  CHECK(mu_s.values() == make_vector({0, 0, 0, 0, 0}));
  CHECK(coordinatewise_min(mu_r, mu_s).values() ==
        make_vector({0, 0, 0, rq("-1/4"), 0}));
  CHECK(at23.target.values() == make_vector({0, 0, 0, rq("-1/4"), 0}));

  const MinCexInstance at32 = build_min_instance(rq("3/2"), Rational(2));
  const SpectrumPoint mu_r32 = mu_exact(at32.map, at32.r_system);
  CHECK(mu_r32.values()(3) == rq("-3/23"));
  CHECK(verify_spectrum_values(at32).passed());
}

TEST_CASE("the target fourth coordinate is negative for every alpha > 1") {
  for (const char* a : {"3/2", "2", "5", "101/100"}) {
    for (const char* b : {"2", "3", "11"}) {
      if (parse_rational(a) >= parse_rational(b)) continue;
      const MinCexInstance instance =
          build_min_instance(parse_rational(a), parse_rational(b));
      CHECK(instance.target.values()(3) < 0);
    }
  }
}

TEST_CASE("kappa values at frozen points") {
  const auto s_kappa = kappa_values(s_base_path(Rational(3)), Rational(3),
                                    Rational(10));
  CHECK(s_kappa[0] == 0);
  CHECK(s_kappa[1] == 0);
  CHECK(s_kappa[2] == 0);
  const auto r_kappa = kappa_values(r_base_path(Rational(2)), Rational(3),
                                    Rational(5));
  CHECK(r_kappa[0] == rq("2/5"));
  CHECK(r_kappa[1] == rq("1/5"));
  CHECK(r_kappa[2] == rq("1/5"));
  // kappa_3 vanishes whenever P_3 = P_4
  const auto s_kappa22 = kappa_values(s_base_path(Rational(3)), Rational(3),
                                      Rational(22));
  CHECK(s_kappa22[2] == 0);
}

TEST_CASE("kappa preconditions") {
  CHECK_THROWS_AS(kappa_values(r_base_path(Rational(2)), Rational(3),
                               Rational(100)),
                  OutOfDomainError);
  PLPath three(3, {Rational(3), Rational(4)},
               {make_vector({1, 1, 1}), make_vector({1, 1, 2})});
  CHECK_THROWS_AS(kappa_values(three, Rational(3), Rational(3)),
                  DimensionMismatchError);
}

TEST_CASE("clock identity residual vanishes at frozen points") {
  CHECK(clock_identity_residual(s_base_path(Rational(3)), Rational(3),
                                Rational(10)) == 0);
  CHECK(clock_identity_residual(r_base_path(Rational(2)), Rational(3),
                                Rational(5)) == 0);
}

TEST_CASE("clock identity residual vanishes on random generalized systems") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenerationPolicy policy;
    policy.dimension = 4;
    policy.steps = 40;
    policy.seed = seed;
    const PLPath path = random_generalized_system(policy);
    const Rational beta = 1 + Rational(seed % 7 + 1, 3);
    for (const Rational& q : division_numbers(path)) {
      if (q <= 0) continue;
      CHECK(clock_identity_residual(path, beta, q) == 0);
    }
  }
}

TEST_CASE("kappa form bounds at (2,3), tightness included") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  CHECK(verify_kappa_form_bounds(instance).passed());
  // A_1: f1 = 2, f2 = 1, bound (beta-1)/(alpha-1) * f2 = 2: tight.
  const RationalVector a1 = make_vector({1, 1, 1, 2});
  const Rational f1 = 3 * a1(0) - a1(1);
  const Rational f2 = a1(3) - a1(1);
  CHECK(f1 == 2);
  CHECK((instance.beta - 1) * f2 == (instance.alpha - 1) * f1);
  // A_3: f3 = 2 with bound (alpha^2-alpha)/(beta-1) * f1 = 2: tight.
  const RationalVector a3 = make_vector({1, 1, 2, 4});
  const Rational f1_a3 = 3 * a3(0) - a3(1);
  const Rational f3_a3 = a3(3) - a3(2);
  CHECK((instance.beta - 1) * f3_a3 == (instance.alpha * instance.alpha - instance.alpha) * f1_a3);
}

TEST_CASE("kappa_3 probe: S is identically zero, R violates the hypothesis") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  std::vector<WindowInterval> windows{
      {Rational(10), Rational(30)},
      {Rational(30), Rational(90)},
      {Rational(90), Rational(270)},
  };
  const std::vector<Rational> sups =
      kappa3_window_suprema(instance.s_system, instance, windows);
  REQUIRE(sups.size() == 3);
  for (const Rational& sup : sups) CHECK(sup == 0);

  CHECK_THROWS_AS(kappa3_window_suprema(instance.r_system, instance, windows),
                  PreconditionViolatedError);
}

TEST_CASE("kappa_3 probe on constrained simulator paths stays bounded") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  // Constrain the game to the polytope via the halfspace predicate.
  GenerationPolicy policy;
  policy.dimension = 4;
  policy.steps = 60;
  policy.seed = 11;
  policy.state_constraint = [&](const RationalVector& direction) {
    for (Eigen::Index i = 0; i < 3; ++i) {
      if (instance.map.component(i, direction) < 0) return false;
    }
    return true;
  };
  const PLPath path = random_rigid_system(policy);
  std::vector<WindowInterval> windows{
      {path.domain_start(), (path.domain_start() + path.domain_end()) / 2},
      {(path.domain_start() + path.domain_end()) / 2, path.domain_end()},
  };
  const std::vector<Rational> sups =
      kappa3_window_suprema(path, instance, windows);
  REQUIRE(sups.size() == 2);
  // f_3 over the polytope K at (2,3) is at most 1/4 (attained at A_3^).
  for (const Rational& sup : sups) {
    CHECK(sup >= 0);
    CHECK(sup <= rq("1/4"));
  }
}

TEST_CASE("probe rejects paths that wander outside the polytope") {
  const MinCexInstance instance = build_min_instance(Rational(2), Rational(3));
  GenerationPolicy policy;
  policy.dimension = 4;
  policy.steps = 60;
  policy.seed = 3;
  const PLPath path = random_rigid_system(policy);  // unconstrained
  std::vector<WindowInterval> windows{{path.domain_start(), path.domain_end()}};
  CHECK_THROWS_AS(kappa3_window_suprema(path, instance, windows),
                  PreconditionViolatedError);
}

TEST_CASE("simplex sample grid matches its counting formula") {
  const std::vector<SimplexPoint> sample = simplex_sample_grid(6);
  // Monotone 4-tuples over {0..6} minus the all-zero tuple, then deduplicated
  // by normalization (e.g. (0,0,0,1) and (0,0,0,2) coincide).  The count is
  // fixed by determinism; freeze it.
  CHECK(sample.size() == 209);
  for (const SimplexPoint& p : sample) {
    CHECK(p.coordinates().sum() == 1);
  }
}
