#include "pgn/hull.hpp"

#include <utility>

#include "pgn/errors.hpp"
#include "pgn/simplex_lp.hpp"

namespace pgn {

SimplexPoint::SimplexPoint(RationalVector coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.size() < 2) {
    throw BadParametersError("simplex point needs dimension >= 2");
  }
  if (coordinates_(0) < 0) {
    throw NotSortedError("simplex point has a negative first coordinate");
  }
  for (Eigen::Index i = 0; i + 1 < coordinates_.size(); ++i) {
    if (coordinates_(i) > coordinates_(i + 1)) {
      throw NotSortedError("simplex point coordinates must ascend");
    }
  }
  if (coordinates_.sum() != 1) {
    throw BadParametersError("simplex point coordinates must sum to 1");
  }
}

SimplexPoint normalize(const RationalVector& x) {
  if (x.size() < 2) {
    throw BadParametersError("normalize needs dimension >= 2");
  }
  if (x(0) < 0) {
    throw NotSortedError("normalize input must be nonnegative ascending");
  }
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    if (x(i) > x(i + 1)) {
      throw NotSortedError("normalize input must be nonnegative ascending");
    }
  }
  const Rational total = x.sum();
  if (total == 0) throw ZeroSumError("normalize input sums to zero");
  return SimplexPoint(RationalVector(x / total));
}

std::vector<SimplexPoint> limit_set_vertices(const SelfSimilarSystem& system) {
  if (!system.proper()) {
    throw NotProperError("limit set requested for a non-proper system");
  }
  std::vector<SimplexPoint> vertices;
  for (const RationalVector& value : system.base().values()) {
    SimplexPoint candidate = normalize(value);
    bool seen = false;
    for (const SimplexPoint& v : vertices) {
      if (v == candidate) {
        seen = true;
        break;
      }
    }
    if (!seen) vertices.push_back(std::move(candidate));
  }
  return vertices;
}

namespace {

// Feasibility of x = sum lambda_i g_i with lambda >= 0, sum lambda = 1.
bool convex_combination_exists(std::span<const SimplexPoint> generators,
                               const RationalVector& x) {
  if (generators.empty()) return false;
  const Eigen::Index n = x.size();
  const Eigen::Index k = static_cast<Eigen::Index>(generators.size());
  RationalMatrix constraints = RationalMatrix::Zero(n + 1, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const RationalVector& g = generators[static_cast<std::size_t>(j)].coordinates();
    if (g.size() != n) {
      throw DimensionMismatchError("generator dimension mismatch");
    }
    constraints.col(j).head(n) = g;
    constraints(n, j) = 1;
  }
  RationalVector rhs(n + 1);
  rhs.head(n) = x;
  rhs(n) = 1;
  return lp_feasible(constraints, rhs);
}

}  // namespace

bool hull_contains(std::span<const SimplexPoint> generators,
                   const SimplexPoint& x) {
  if (generators.empty()) {
    throw BadParametersError("hull_contains needs at least one generator");
  }
  return convex_combination_exists(generators, x.coordinates());
}

std::vector<SimplexPoint> extreme_points(std::span<const SimplexPoint> points) {
  if (points.empty()) {
    throw BadParametersError("extreme_points needs a nonempty list");
  }
  std::vector<SimplexPoint> unique;
  for (const SimplexPoint& p : points) {
    bool seen = false;
    for (const SimplexPoint& u : unique) {
      if (u == p) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(p);
  }
  std::vector<SimplexPoint> result;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<SimplexPoint> others;
    others.reserve(unique.size() - 1);
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j != i) others.push_back(unique[j]);
    }
    if (!convex_combination_exists(others, unique[i].coordinates())) {
      result.push_back(unique[i]);
    }
  }
  return result;
}

}  // namespace pgn
