#include "pgn/min_cex.hpp"

#include <algorithm>
#include <utility>

#include "pgn/errors.hpp"

namespace pgn {

MinCexInstance build_min_instance(const Rational& alpha, const Rational& beta) {
  if (alpha <= 1 || beta <= alpha) {
    throw BadParametersError("parameters must satisfy 1 < alpha < beta; got " +
                             to_string(alpha) + ", " + to_string(beta));
  }
  const Rational a2 = alpha * alpha;
  const Rational b2 = beta * beta;

  const RationalVector A1 = make_vector({1, 1, 1, alpha});
  const RationalVector A2 = make_vector({1, 1, alpha, alpha});
  const RationalVector A3 = make_vector({1, 1, alpha, a2});
  const RationalVector B1 = make_vector({1, beta, beta, beta});
  const RationalVector B2 = make_vector({1, beta, b2, b2});
  const RationalVector B3 = make_vector({beta, beta, b2, b2});

  auto abscissa = [](const RationalVector& v) { return Rational(v.sum()); };
  PLPath r_base(4, {abscissa(A1), abscissa(A2), abscissa(A3),
                    Rational(alpha * abscissa(A1))},
                {A1, A2, A3, RationalVector(alpha * A1)});
  PLPath s_base(4, {abscissa(B1), abscissa(B2), abscissa(B3),
                    Rational(beta * abscissa(B1))},
                {B1, B2, B3, RationalVector(beta * B1)});
  SelfSimilarSystem r_system(std::move(r_base), alpha,
                             SystemClass::generalized());
  SelfSimilarSystem s_system(std::move(s_base), beta,
                             SystemClass::generalized());

  RationalMatrix rows(5, 4);
  rows.row(0) << -(alpha - 1) * beta, -(beta - alpha), Rational(0), beta - 1;
  rows.row(1) << (alpha - 1) * beta, -(alpha - 1) * beta, alpha * (beta - 1),
      -(beta - 1);
  rows.row(2) << alpha * beta * (alpha - 1), -alpha * (alpha - 1), beta - 1,
      -(beta - 1);
  rows.row(3) << Rational(0), Rational(0), Rational(1), Rational(-1);
  rows.row(4) << Rational(0), Rational(-1), Rational(0), Rational(1);
  LinearMap map(std::move(rows));

  std::vector<SimplexPoint> generators;
  generators.push_back(normalize(B1));
  generators.push_back(normalize(A1));
  generators.push_back(normalize(A2));
  generators.push_back(normalize(A3));
  generators.push_back(
      SimplexPoint(make_vector({0, 0, Rational(1, 2), Rational(1, 2)})));

  RationalVector target_values = RationalVector::Zero(5);
  target_values(3) = alpha * (1 - alpha) / abscissa(A3);

  return MinCexInstance{alpha,
                        beta,
                        std::move(r_system),
                        std::move(s_system),
                        std::move(map),
                        std::move(generators),
                        SpectrumPoint::exact(std::move(target_values))};
}

namespace {

std::string point_name(std::size_t index) {
  static const char* names[] = {"B1^", "A1^", "A2^", "A3^", "E3"};
  return names[index];
}

}  // namespace

CheckReport verify_halfspace_rep(const MinCexInstance& instance) {
  CheckReport report;
  const LinearMap& map = instance.map;
  const auto& generators = instance.hull_generators;

  bool nonnegative = true;
  std::string detail;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (Eigen::Index i = 0; i < 3; ++i) {
      const Rational value = map.component(i, generators[g].coordinates());
      if (value < 0) {
        nonnegative = false;
        detail += " T" + std::to_string(i + 1) + "(" + point_name(g) +
                  ")=" + to_string(value);
      }
    }
  }
  report.add("T1,T2,T3 nonnegative at the 5 generators", nonnegative, detail);

  // Facet patterns: each of T_1, T_2, T_3 vanishes on the stated generator
  // triple and is strictly positive at the other two generators.
  const std::array<std::array<std::size_t, 3>, 3> zero_sets = {{
      {0, 1, 2},  // T_1 on B1^, A1^, A2^
      {0, 1, 3},  // T_2 on B1^, A1^, A3^
      {0, 3, 4},  // T_3 on B1^, A3^, E3
  }};
  for (Eigen::Index i = 0; i < 3; ++i) {
    bool ok = true;
    std::string line_detail;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const Rational value = map.component(i, generators[g].coordinates());
      const auto& zeros = zero_sets[static_cast<std::size_t>(i)];
      const bool should_vanish =
          std::find(zeros.begin(), zeros.end(), g) != zeros.end();
      const bool vanishes = value == 0;
      if (vanishes != should_vanish) {
        ok = false;
        line_detail += " T" + std::to_string(i + 1) + "(" + point_name(g) +
                       ")=" + to_string(value);
      }
      if (!should_vanish && value <= 0) ok = false;
    }
    report.add("T" + std::to_string(i + 1) + " vanishing pattern", ok,
               line_detail);
  }

  bool t5_pattern = map.component(4, generators[0].coordinates()) == 0;
  for (std::size_t g = 1; g < generators.size(); ++g) {
    if (map.component(4, generators[g].coordinates()) <= 0) t5_pattern = false;
  }
  report.add("T5 vanishes only at B1^ among the generators", t5_pattern);

  // LP membership against the halfspace predicate on the simplex sample.
  std::size_t disagreements = 0;
  std::size_t inside = 0;
  const std::vector<SimplexPoint> sample = simplex_sample_grid(6);
  for (const SimplexPoint& p : sample) {
    const bool by_lp = hull_contains(generators, p);
    bool by_halfspaces = true;
    for (Eigen::Index i = 0; i < 3 && by_halfspaces; ++i) {
      by_halfspaces = map.component(i, p.coordinates()) >= 0;
    }
    if (by_lp != by_halfspaces) ++disagreements;
    if (by_lp) ++inside;
  }
  report.add("hull membership matches T1,T2,T3 >= 0 on the simplex sample",
             disagreements == 0,
             std::to_string(sample.size()) + " points, " +
                 std::to_string(inside) + " inside, " +
                 std::to_string(disagreements) + " disagreements");
  return report;
}

CheckReport verify_spectrum_values(const MinCexInstance& instance) {
  CheckReport report;
  const Rational alpha = instance.alpha;
  const Rational norm_a2 = 2 + 2 * alpha;           // |A_2|
  const Rational norm_a3 = 2 + alpha + alpha * alpha;  // |A_3|

  RationalVector expected_r = RationalVector::Zero(5);
  expected_r(3) = alpha * (1 - alpha) / norm_a3;
  expected_r(4) = (alpha - 1) / norm_a2;
  const SpectrumPoint mu_r = mu_exact(instance.map, instance.r_system);
  report.add("mu_T(R) = (0, 0, 0, alpha(1-alpha)/|A3|, (alpha-1)/|A2|)",
             mu_r.values() == expected_r, "got " + to_string(mu_r.values()));

  const SpectrumPoint mu_s = mu_exact(instance.map, instance.s_system);
  report.add("mu_T(S) = 0", mu_s.values() == RationalVector(RationalVector::Zero(5)),
             "got " + to_string(mu_s.values()));

  const SpectrumPoint minimum = coordinatewise_min(mu_r, mu_s);
  report.add("min(mu_T(R), mu_T(S)) equals the target",
             minimum.values() == instance.target.values(),
             "got " + to_string(minimum.values()) + ", target " +
                 to_string(instance.target.values()));
  return report;
}

CheckReport verify_kappa_form_bounds(const MinCexInstance& instance) {
  CheckReport report;
  const Rational alpha = instance.alpha;
  const Rational beta = instance.beta;
  const Rational a2 = alpha * alpha;

  const std::array<std::pair<const char*, RationalVector>, 5> points = {{
      {"B1", make_vector({1, beta, beta, beta})},
      {"A1", make_vector({1, 1, 1, alpha})},
      {"A2", make_vector({1, 1, alpha, alpha})},
      {"A3", make_vector({1, 1, alpha, a2})},
      {"E3", make_vector({0, 0, Rational(1, 2), Rational(1, 2)})},
  }};
  for (const auto& [name, x] : points) {
    const Rational f1 = beta * x(0) - x(1);
    const Rational f2 = x(3) - x(1);
    const Rational f3 = x(3) - x(2);
    const bool lower = f1 >= 0;
    // Cleared denominators: f1 <= ((beta-1)/(alpha-1)) f2 and
    // f3 <= ((alpha^2-alpha)/(beta-1)) f1.
    const bool upper = (alpha - 1) * f1 <= (beta - 1) * f2;
    const bool third = (beta - 1) * f3 <= (a2 - alpha) * f1;
    report.add(std::string("form bounds at ") + name,
               lower && upper && third,
               "f1=" + to_string(f1) + " f2=" + to_string(f2) +
                   " f3=" + to_string(f3));
  }
  return report;
}

std::array<Rational, 3> kappa_values(const PLPath& path, const Rational& beta,
                                     const Rational& q) {
  if (path.dimension() != 4) {
    throw DimensionMismatchError("kappa forms are defined for 4-systems");
  }
  if (q <= 0) {
    throw OutOfDomainError("kappa forms need q > 0");
  }
  const RationalVector v = path.eval(q);
  return {(beta * v(0) - v(1)) / q, (v(3) - v(1)) / q, (v(3) - v(2)) / q};
}

Rational clock_identity_residual(const PLPath& path, const Rational& beta,
                                 const Rational& q) {
  const auto kappa = kappa_values(path, beta, q);
  const RationalVector v = path.eval(q);
  return q - ((1 + 3 * beta) * v(0) +
              (2 * kappa[1] - kappa[2] - 3 * kappa[0]) * q);
}

namespace {

Rational kappa3_at(const RationalVector& value, const Rational& q) {
  return (value(3) - value(2)) / q;
}

// Exact supremum of kappa_3 over the sample abscissae (positive ones).
template <typename Eval>
Rational supremum_over(const std::vector<Rational>& samples, Eval&& eval) {
  bool first = true;
  Rational sup = 0;
  for (const Rational& q : samples) {
    if (q <= 0) continue;
    const Rational value = kappa3_at(eval(q), q);
    if (first || value > sup) {
      sup = value;
      first = false;
    }
  }
  if (first) {
    throw BadParametersError("window contains no positive abscissa");
  }
  return sup;
}

}  // namespace

std::vector<Rational> kappa3_window_suprema(
    const SelfSimilarSystem& system, const MinCexInstance& instance,
    std::span<const WindowInterval> windows) {
  if (system.dimension() != 4) {
    throw DimensionMismatchError("probe is defined for 4-systems");
  }
  if (!system.proper()) {
    throw PreconditionViolatedError("probe requires a proper system");
  }
  const std::vector<SimplexPoint> vertices = limit_set_vertices(system);
  const SimplexPoint b1_bar = instance.hull_generators.front();
  bool contains_b1 = false;
  for (const SimplexPoint& vertex : vertices) {
    if (!hull_contains(instance.hull_generators, vertex)) {
      throw PreconditionViolatedError(
          "limit-set vertex " + to_string(vertex.coordinates()) +
          " lies outside the polytope K");
    }
    if (vertex == b1_bar) contains_b1 = true;
  }
  if (!contains_b1) {
    throw PreconditionViolatedError(
        "limit set does not contain the normalized B_1");
  }
  std::vector<Rational> result;
  result.reserve(windows.size());
  for (const WindowInterval& window : windows) {
    const Rational lo = std::max(window.lo, system.base().domain_start());
    if (window.hi < lo) {
      throw BadParametersError("window lies outside the system domain");
    }
    std::vector<Rational> samples = system.division_numbers_in(lo, window.hi);
    samples.push_back(lo);
    samples.push_back(window.hi);
    result.push_back(
        supremum_over(samples, [&](const Rational& q) { return system.eval(q); }));
  }
  return result;
}

std::vector<Rational> kappa3_window_suprema(
    const PLPath& path, const MinCexInstance& instance,
    std::span<const WindowInterval> windows) {
  if (path.dimension() != 4) {
    throw DimensionMismatchError("probe is defined for 4-systems");
  }
  for (const WindowInterval& window : windows) {
    for (const Rational& q : path.abscissae()) {
      if (q < window.lo || q > window.hi || q <= 0) continue;
      const SimplexPoint direction = normalize(path.eval(q));
      if (!hull_contains(instance.hull_generators, direction)) {
        throw PreconditionViolatedError(
            "normalized division value at q=" + to_string(q) +
            " lies outside the polytope K");
      }
    }
  }
  std::vector<Rational> result;
  result.reserve(windows.size());
  for (const WindowInterval& window : windows) {
    const Rational lo = std::max(window.lo, path.domain_start());
    const Rational hi = std::min(window.hi, path.domain_end());
    if (hi < lo) {
      throw BadParametersError("window lies outside the path domain");
    }
    std::vector<Rational> samples;
    for (const Rational& q : path.abscissae()) {
      if (q > lo && q < hi) samples.push_back(q);
    }
    samples.push_back(lo);
    samples.push_back(hi);
    result.push_back(
        supremum_over(samples, [&](const Rational& q) { return path.eval(q); }));
  }
  return result;
}

std::vector<SimplexPoint> simplex_sample_grid(int max_coordinate) {
  if (max_coordinate < 1) {
    throw BadParametersError("sample grid needs max coordinate >= 1");
  }
  std::vector<SimplexPoint> sample;
  for (int a = 0; a <= max_coordinate; ++a) {
    for (int b = a; b <= max_coordinate; ++b) {
      for (int c = b; c <= max_coordinate; ++c) {
        for (int d = std::max(c, 1); d <= max_coordinate; ++d) {
          sample.push_back(normalize(make_vector(
              {Rational(a), Rational(b), Rational(c), Rational(d)})));
        }
      }
    }
  }
  return sample;
}

}  // namespace pgn
