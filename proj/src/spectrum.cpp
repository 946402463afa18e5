#include "pgn/spectrum.hpp"

#include <utility>

#include "pgn/errors.hpp"
#include "pgn/hull.hpp"

namespace pgn {

SpectrumPoint::SpectrumPoint(RationalVector values, SpectrumMode mode,
                             std::optional<SpectrumWindow> window)
    : values_(std::move(values)), mode_(mode), window_(std::move(window)) {}

SpectrumPoint SpectrumPoint::exact(RationalVector values) {
  return SpectrumPoint(std::move(values), SpectrumMode::Exact, std::nullopt);
}

SpectrumPoint SpectrumPoint::estimate(RationalVector values,
                                      SpectrumWindow window) {
  return SpectrumPoint(std::move(values), SpectrumMode::Estimate,
                       std::move(window));
}

std::string SpectrumPoint::to_line() const {
  std::string line;
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (i > 0) line += ' ';
    line += to_string(values_(i));
  }
  return line;
}

SpectrumPoint mu_exact(const LinearMap& map, const SelfSimilarSystem& system) {
  if (map.input_dimension() != system.dimension()) {
    throw DimensionMismatchError("map and system dimensions differ");
  }
  const std::vector<SimplexPoint> vertices = limit_set_vertices(system);
  RationalVector minima(map.output_dimension());
  bool first = true;
  for (const SimplexPoint& vertex : vertices) {
    const RationalVector image = map.apply(vertex.coordinates());
    if (first) {
      minima = image;
      first = false;
    } else {
      for (Eigen::Index i = 0; i < minima.size(); ++i) {
        if (image(i) < minima(i)) minima(i) = image(i);
      }
    }
  }
  return SpectrumPoint::exact(std::move(minima));
}

SpectrumPoint mu_estimate(const LinearMap& map, const PLPath& path,
                          const Rational& tail_fraction) {
  if (map.input_dimension() != path.dimension()) {
    throw DimensionMismatchError("map and path dimensions differ");
  }
  if (tail_fraction <= 0 || tail_fraction >= 1) {
    throw EmptyWindowError("tail fraction must lie strictly between 0 and 1");
  }
  const Rational window_hi = path.domain_end();
  Rational window_lo = tail_fraction * window_hi;
  if (window_lo < path.domain_start()) window_lo = path.domain_start();
  if (window_lo <= 0) {
    throw EmptyWindowError("tail window must start at a positive abscissa");
  }

  std::vector<Rational> samples;
  samples.push_back(window_lo);
  for (const Rational& q : path.abscissae()) {
    if (q > window_lo && q < window_hi) samples.push_back(q);
  }
  samples.push_back(window_hi);

  RationalVector minima(map.output_dimension());
  bool first = true;
  for (const Rational& q : samples) {
    const RationalVector image = map.apply(path.eval(q)) / q;
    if (first) {
      minima = image;
      first = false;
    } else {
      for (Eigen::Index i = 0; i < minima.size(); ++i) {
        if (image(i) < minima(i)) minima(i) = image(i);
      }
    }
  }
  return SpectrumPoint::estimate(std::move(minima),
                                 SpectrumWindow{window_lo, window_hi});
}

SpectrumPoint coordinatewise_min(const SpectrumPoint& a,
                                 const SpectrumPoint& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatchError("spectrum points have different dimensions");
  }
  RationalVector values(a.dimension());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values(i) = a.values()(i) < b.values()(i) ? a.values()(i) : b.values()(i);
  }
  if (a.mode() == SpectrumMode::Exact && b.mode() == SpectrumMode::Exact) {
    return SpectrumPoint::exact(std::move(values));
  }
  if (a.window() && b.window() && *a.window() == *b.window()) {
    return SpectrumPoint::estimate(std::move(values), *a.window());
  }
  const auto& window = a.window() ? a.window() : b.window();
  if (window) {
    return SpectrumPoint::estimate(std::move(values), *window);
  }
  // Mixed exact/estimate with no window recorded: conservative estimate tag.
  return SpectrumPoint::estimate(std::move(values),
                                 SpectrumWindow{Rational(0), Rational(0)});
}

}  // namespace pgn
