#include "pgn/linear_map.hpp"

#include <utility>

#include "pgn/errors.hpp"

namespace pgn {

LinearMap::LinearMap(RationalMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() < 1 || rows_.cols() < 1) {
    throw BadParametersError("linear map needs at least one row and column");
  }
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    bool all_zero = true;
    for (Eigen::Index j = 0; j < rows_.cols() && all_zero; ++j) {
      all_zero = rows_(i, j) == 0;
    }
    if (all_zero) {
      throw BadParametersError("linear map row " + std::to_string(i + 1) +
                               " is zero");
    }
  }
}

RationalVector LinearMap::apply(const RationalVector& x) const {
  if (x.size() != input_dimension()) {
    throw DimensionMismatchError(
        "map expects dimension " + std::to_string(input_dimension()) +
        ", got " + std::to_string(x.size()));
  }
  return rows_ * x;
}

Rational LinearMap::component(Eigen::Index row, const RationalVector& x) const {
  if (x.size() != input_dimension()) {
    throw DimensionMismatchError(
        "map expects dimension " + std::to_string(input_dimension()) +
        ", got " + std::to_string(x.size()));
  }
  return rows_.row(row).dot(x);
}

}  // namespace pgn
