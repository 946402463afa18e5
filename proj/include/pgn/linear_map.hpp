#ifndef PGN_LINEAR_MAP_HPP
#define PGN_LINEAR_MAP_HPP

#include "pgn/rational.hpp"

namespace pgn {

/// A linear map Q^n -> Q^m stored as its m x n coefficient matrix.
/// Every row must be nonzero.
class LinearMap {
 public:
  explicit LinearMap(RationalMatrix rows);

  Eigen::Index output_dimension() const { return rows_.rows(); }
  Eigen::Index input_dimension() const { return rows_.cols(); }
  const RationalMatrix& rows() const { return rows_; }

  /// rows * x; throws DimensionMismatchError.
  RationalVector apply(const RationalVector& x) const;

  /// Single component T_i(x), 0-based row index.
  Rational component(Eigen::Index row, const RationalVector& x) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_;
  }

 private:
  RationalMatrix rows_;
};

}  // namespace pgn

#endif  // PGN_LINEAR_MAP_HPP
