#include "pgn/pl_path.hpp"

#include <algorithm>
#include <utility>

#include "pgn/errors.hpp"

namespace pgn {

PLPath::PLPath(Eigen::Index dimension, std::vector<Rational> abscissae,
               std::vector<RationalVector> values)
    : dimension_(dimension),
      abscissae_(std::move(abscissae)),
      values_(std::move(values)) {
  if (dimension_ < 2) {
    throw BadParametersError("path dimension must be at least 2");
  }
  if (abscissae_.size() < 2) {
    throw BadParametersError("path needs at least two breakpoints");
  }
  if (values_.size() != abscissae_.size()) {
    throw BadParametersError("breakpoint abscissae and values differ in count");
  }
  for (std::size_t i = 0; i < abscissae_.size(); ++i) {
    if (values_[i].size() != dimension_) {
      throw DimensionMismatchError("breakpoint value at " +
                                   to_string(abscissae_[i]) +
                                   " has wrong dimension");
    }
    if (i > 0 && abscissae_[i] <= abscissae_[i - 1]) {
      throw BadParametersError("breakpoint abscissae must strictly increase");
    }
  }

  // Drop interior breakpoints that do not change the slope vector.
  std::vector<Rational> qs;
  std::vector<RationalVector> vs;
  qs.push_back(abscissae_.front());
  vs.push_back(values_.front());
  auto slope_of = [&](std::size_t i) {
    return RationalVector((values_[i + 1] - values_[i]) /
                          (abscissae_[i + 1] - abscissae_[i]));
  };
  RationalVector previous = slope_of(0);
  for (std::size_t i = 1; i + 1 < abscissae_.size(); ++i) {
    RationalVector next = slope_of(i);
    if (next != previous) {
      qs.push_back(abscissae_[i]);
      vs.push_back(values_[i]);
      slopes_.push_back(previous);
      previous = std::move(next);
    }
  }
  qs.push_back(abscissae_.back());
  vs.push_back(values_.back());
  slopes_.push_back(previous);
  abscissae_ = std::move(qs);
  values_ = std::move(vs);
}

Eigen::Index PLPath::segment_index(const Rational& q) const {
  if (!contains(q)) {
    throw OutOfDomainError("abscissa " + to_string(q) + " outside [" +
                           to_string(domain_start()) + ", " +
                           to_string(domain_end()) + "]");
  }
  auto it = std::lower_bound(abscissae_.begin(), abscissae_.end(), q);
  Eigen::Index i = static_cast<Eigen::Index>(it - abscissae_.begin());
  if (i > 0) --i;  // breakpoint q_i belongs to segment i-1 (except q_0)
  return std::min<Eigen::Index>(i, segment_count() - 1);
}

RationalVector PLPath::eval(const Rational& q) const {
  const Eigen::Index s = segment_index(q);
  const std::size_t i = static_cast<std::size_t>(s);
  if (q == abscissae_[i]) return values_[i];
  if (q == abscissae_[i + 1]) return values_[i + 1];
  return values_[i] + (q - abscissae_[i]) * slopes_[i];
}

const RationalVector& PLPath::segment_slope(Eigen::Index segment) const {
  return slopes_.at(static_cast<std::size_t>(segment));
}

CoordinateBlock PLPath::moving_block(Eigen::Index segment) const {
  const RationalVector& slope = segment_slope(segment);
  Eigen::Index low = -1;
  Eigen::Index high = -1;
  for (Eigen::Index j = 0; j < slope.size(); ++j) {
    if (slope(j) != 0) {
      if (low < 0) low = j;
      high = j;
    }
  }
  if (low < 0) {
    // Cannot happen on canonical paths with strictly increasing clocks when
    // the sum axiom holds; guard for hand-built inputs.
    return CoordinateBlock{0, dimension_ - 1};
  }
  return CoordinateBlock{low, high};
}

PLPath PLPath::scaled(const Rational& factor) const {
  if (factor <= 0) {
    throw BadParametersError("scaling factor must be positive");
  }
  std::vector<Rational> qs;
  std::vector<RationalVector> vs;
  qs.reserve(abscissae_.size());
  vs.reserve(values_.size());
  for (std::size_t i = 0; i < abscissae_.size(); ++i) {
    qs.push_back(abscissae_[i] * factor);
    vs.push_back(values_[i] * factor);
  }
  return PLPath(dimension_, std::move(qs), std::move(vs));
}

}  // namespace pgn
