#ifndef PGN_PL_PATH_HPP
#define PGN_PL_PATH_HPP

#include <vector>

#include "pgn/rational.hpp"

namespace pgn {

/// Contiguous range of coordinate indices moving together on a segment.
struct CoordinateBlock {
  Eigen::Index low = 0;
  Eigen::Index high = 0;

  Eigen::Index size() const { return high - low + 1; }
  friend bool operator==(const CoordinateBlock&, const CoordinateBlock&) = default;
};

/// A continuous piecewise-linear map [q_0, q_N] -> Q^n given by breakpoints.
///
/// Construction canonicalizes: interior breakpoints whose left and right
/// slope vectors coincide are removed, so every stored interior breakpoint
/// is a genuine slope change.  Abscissae must be strictly increasing and
/// every value vector must have the declared dimension (n >= 2, N >= 1).
class PLPath {
 public:
  PLPath(Eigen::Index dimension, std::vector<Rational> abscissae,
         std::vector<RationalVector> values);

  Eigen::Index dimension() const { return dimension_; }
  Eigen::Index segment_count() const {
    return static_cast<Eigen::Index>(abscissae_.size()) - 1;
  }
  const std::vector<Rational>& abscissae() const { return abscissae_; }
  const std::vector<RationalVector>& values() const { return values_; }
  const Rational& domain_start() const { return abscissae_.front(); }
  const Rational& domain_end() const { return abscissae_.back(); }

  bool contains(const Rational& q) const {
    return domain_start() <= q && q <= domain_end();
  }

  /// Affine interpolation; bit-exact at breakpoints.  Throws OutOfDomainError.
  RationalVector eval(const Rational& q) const;

  /// Index of the segment [q_i, q_{i+1}] containing q (ties resolve left,
  /// i.e. a breakpoint belongs to the segment ending there, except q_0).
  Eigen::Index segment_index(const Rational& q) const;

  /// Component-wise slope vector of segment i.
  const RationalVector& segment_slope(Eigen::Index segment) const;

  /// The range of coordinates with nonzero slope on segment i.
  CoordinateBlock moving_block(Eigen::Index segment) const;

  /// The path q -> factor * eval(q / factor), i.e. both axes scaled.
  PLPath scaled(const Rational& factor) const;

  friend bool operator==(const PLPath& a, const PLPath& b) {
    return a.dimension_ == b.dimension_ && a.abscissae_ == b.abscissae_ &&
           a.values_ == b.values_;
  }

 private:
  Eigen::Index dimension_;
  std::vector<Rational> abscissae_;
  std::vector<RationalVector> values_;
  std::vector<RationalVector> slopes_;  // one per segment
};

}  // namespace pgn

#endif  // PGN_PL_PATH_HPP
