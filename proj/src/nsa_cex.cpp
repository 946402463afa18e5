#include "pgn/nsa_cex.hpp"

#include <utility>

#include "pgn/errors.hpp"
#include "pgn/validate.hpp"

namespace pgn {

NsaInstance build_nsa_instance(int n, const Rational& alpha) {
  if (n < 4) {
    throw BadParametersError("family needs dimension n >= 4; got " +
                             std::to_string(n));
  }
  if (alpha <= 1) {
    throw BadParametersError("family needs alpha > 1; got " + to_string(alpha));
  }
  Rational beta = 0;
  for (int i = 0; i <= n - 2; ++i) beta += rational_pow(alpha, i);

  RationalMatrix rows = RationalMatrix::Zero(n + 1, n);
  rows(0, 0) = 1;
  for (int j = 2; j <= n - 1; ++j) {
    rows(j - 1, j - 1) = alpha;
    rows(j - 1, j) = -1;
  }
  rows(n - 1, n - 1) = 1;
  rows(n - 1, 1) = -rational_pow(alpha, static_cast<unsigned>(n - 3));
  rows(n, n - 1) = 1;
  rows(n, 0) = -rational_pow(alpha, static_cast<unsigned>(n - 2));
  return NsaInstance{n, alpha, std::move(beta), LinearMap(std::move(rows))};
}

SelfSimilarSystem build_ladder_system(const NsaInstance& instance, int m) {
  if (m < 1) {
    throw BadParametersError("ladder index m must be >= 1; got " +
                             std::to_string(m));
  }
  const int n = instance.n;
  const Rational& alpha = instance.alpha;

  std::vector<RationalVector> points;
  // Start: (1, 1, alpha, ..., alpha^(n-2)).
  RationalVector start(n);
  start(0) = 1;
  start(1) = 1;
  for (int i = 2; i < n; ++i) start(i) = rational_pow(alpha, i - 1);
  points.push_back(start);

  for (int l = 1; l <= m; ++l) {
    const Rational s = rational_pow(alpha, l);
    // Tie points: coordinates j and j+1 share s * alpha^(j-2).
    for (int j = 2; j <= n - 1; ++j) {
      RationalVector p(n);
      p(0) = 1;
      for (int i = 2; i <= j; ++i) p(i - 1) = s * rational_pow(alpha, i - 2);
      for (int i = j + 1; i <= n; ++i) p(i - 1) = s * rational_pow(alpha, i - 3);
      points.push_back(std::move(p));
    }
    // Backward-pass point: (1, alpha^l, alpha^(l+1), ..., alpha^(l+n-2)).
    RationalVector w(n);
    w(0) = 1;
    for (int i = 2; i <= n; ++i) w(i - 1) = s * rational_pow(alpha, i - 2);
    points.push_back(std::move(w));
  }
  points.push_back(RationalVector(rational_pow(alpha, m) * start));

  std::vector<Rational> abscissae;
  abscissae.reserve(points.size());
  for (const RationalVector& p : points) abscissae.push_back(p.sum());

  PLPath base(n, std::move(abscissae), std::move(points));
  return SelfSimilarSystem(std::move(base), rational_pow(alpha, m),
                           SystemClass::exact());
}

CheckReport verify_main_inequalities(const NsaInstance& instance,
                                     const SelfSimilarSystem& system) {
  if (system.dimension() != instance.n) {
    throw DimensionMismatchError("system dimension does not match family");
  }
  CheckReport report;
  for (Eigen::Index j = 1; j < instance.map.output_dimension(); ++j) {
    Rational minimum;
    Rational at;
    bool first = true;
    for (std::size_t i = 0; i < system.base().values().size(); ++i) {
      const Rational value =
          instance.map.component(j, system.base().values()[i]);
      if (first || value < minimum) {
        minimum = value;
        at = system.base().abscissae()[i];
        first = false;
      }
    }
    report.add("T" + std::to_string(j + 1) + " >= 0 along one period",
               minimum >= 0,
               "min " + to_string(minimum) + " at q=" + to_string(at));
  }
  return report;
}

std::vector<Rational> enumerate_isolated_values(const NsaInstance& instance,
                                                int m_max) {
  if (m_max < 1) {
    throw BadParametersError("m_max must be >= 1; got " + std::to_string(m_max));
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    const Rational value =
        1 / (1 + rational_pow(instance.alpha, static_cast<unsigned>(m)) *
                     instance.beta);
    const SelfSimilarSystem ladder = build_ladder_system(instance, m);
    const SpectrumPoint mu = mu_exact(instance.map, ladder);
    RationalVector expected = RationalVector::Zero(instance.n + 1);
    expected(0) = value;
    if (mu.values() != expected) {
      throw InvalidSystemError(
          "ladder m=" + std::to_string(m) + " attains " +
          to_string(mu.values()) + " instead of (" + to_string(value) +
          ", 0, ..., 0)");
    }
    values.push_back(value);
  }
  return values;
}

CheckReport check_isolation(std::span<const Rational> values) {
  CheckReport report;
  if (values.empty()) {
    report.add("value list nonempty", false);
    return report;
  }
  bool decreasing = true;
  Rational min_gap = 0;
  bool have_gap = false;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const Rational gap = values[i] - values[i + 1];
    if (gap <= 0) decreasing = false;
    if (!have_gap || gap < min_gap) {
      min_gap = gap;
      have_gap = true;
    }
  }
  report.add("consecutive gaps strictly positive", decreasing,
             have_gap ? "min gap " + to_string(min_gap) : "single value");
  report.add("distance to the limit 0 strictly positive",
             values.back() > 0, "last value " + to_string(values.back()));
  return report;
}

CheckReport verify_ladder_family(const NsaInstance& instance, int m_max) {
  CheckReport report;
  std::vector<Rational> values;
  for (int m = 1; m <= m_max; ++m) {
    const std::string tag = "m=" + std::to_string(m) + ": ";
    const SelfSimilarSystem ladder = build_ladder_system(instance, m);
    const ValidationReport exact = validate_exact_nsystem(ladder.base());
    report.add(tag + "exact n-system", exact.valid(), exact.summary());
    if (is_integer(instance.alpha)) {
      const ValidationReport rigid = validate_rigid(ladder.base(), Rational(1));
      report.add(tag + "rigid of mesh 1", rigid.valid(), rigid.summary());
    }
    report.merge(verify_main_inequalities(instance, ladder));

    const Rational expected_value =
        1 / (1 + rational_pow(instance.alpha, static_cast<unsigned>(m)) *
                     instance.beta);
    const SpectrumPoint mu = mu_exact(instance.map, ladder);
    RationalVector expected = RationalVector::Zero(instance.n + 1);
    expected(0) = expected_value;
    report.add(tag + "mu_T = (1/(1+alpha^m beta), 0, ..., 0)",
               mu.values() == expected,
               "got " + to_string(mu.values()) + ", expected first entry " +
                   to_string(expected_value));
    values.push_back(expected_value);
  }
  report.merge(check_isolation(values));
  return report;
}

}  // namespace pgn
