#ifndef PGN_HULL_HPP
#define PGN_HULL_HPP

#include <span>
#include <vector>

#include "pgn/rational.hpp"
#include "pgn/self_similar.hpp"

namespace pgn {

/// A point of the ordered simplex: 0 <= x_1 <= ... <= x_n, sum x_i = 1.
class SimplexPoint {
 public:
  explicit SimplexPoint(RationalVector coordinates);

  const RationalVector& coordinates() const { return coordinates_; }
  Eigen::Index dimension() const { return coordinates_.size(); }

  friend bool operator==(const SimplexPoint& a, const SimplexPoint& b) {
    return a.coordinates_ == b.coordinates_;
  }

 private:
  RationalVector coordinates_;
};

/// x / sum(x) for a nonnegative ascending vector with positive sum.
/// Throws ZeroSumError / NotSortedError.
SimplexPoint normalize(const RationalVector& x);

/// Normalized values of a proper self-similar system at the division numbers
/// of one period, deduplicated in order of first appearance.  The limit set
/// of q^{-1} P(q) is the closed polygonal curve through these points, so its
/// convex hull is exactly the hull of this list.  Throws NotProperError.
std::vector<SimplexPoint> limit_set_vertices(const SelfSimilarSystem& system);

/// Exact convex-combination membership, decided by rational LP feasibility.
bool hull_contains(std::span<const SimplexPoint> generators,
                   const SimplexPoint& x);

/// The points not expressible as convex combinations of the others, in input
/// order.  Exact duplicates are collapsed to their first occurrence before
/// the test so that the output always generates the input's hull.
std::vector<SimplexPoint> extreme_points(std::span<const SimplexPoint> points);

}  // namespace pgn

#endif  // PGN_HULL_HPP
