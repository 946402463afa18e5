#ifndef PGN_SPECTRUM_HPP
#define PGN_SPECTRUM_HPP

#include <optional>
#include <string>

#include "pgn/linear_map.hpp"
#include "pgn/pl_path.hpp"
#include "pgn/self_similar.hpp"

namespace pgn {

enum class SpectrumMode { Exact, Estimate };

struct SpectrumWindow {
  Rational lo;
  Rational hi;

  friend bool operator==(const SpectrumWindow&, const SpectrumWindow&) = default;
};

/// A point of R^m: the coordinate-wise infimum of q^{-1} T(P(q)).
///
/// Exact points arise only from self-similar systems, where one period of
/// the normalized trajectory attains the infimum.  Estimate points come from
/// finite windows and are upper bounds for the tail infimum over that window.
class SpectrumPoint {
 public:
  static SpectrumPoint exact(RationalVector values);
  static SpectrumPoint estimate(RationalVector values, SpectrumWindow window);

  const RationalVector& values() const { return values_; }
  Eigen::Index dimension() const { return values_.size(); }
  SpectrumMode mode() const { return mode_; }
  const std::optional<SpectrumWindow>& window() const { return window_; }

  std::string to_line() const;  // canonical space-separated encoding

  friend bool operator==(const SpectrumPoint& a, const SpectrumPoint& b) {
    return a.mode_ == b.mode_ && a.values_ == b.values_ &&
           a.window_ == b.window_;
  }

 private:
  SpectrumPoint(RationalVector values, SpectrumMode mode,
                std::optional<SpectrumWindow> window);

  RationalVector values_;
  SpectrumMode mode_;
  std::optional<SpectrumWindow> window_;
};

/// Per output coordinate, the exact minimum of T_i over the limit-set
/// vertices of a proper self-similar system.  Each T_i is linear and the
/// limit set is the closed polygonal curve through those vertices, so the
/// minimum over the curve is attained there.
SpectrumPoint mu_exact(const LinearMap& map, const SelfSimilarSystem& system);

/// Finite-horizon surrogate: the exact minimum of q^{-1} T_i(P(q)) over the
/// tail window [max(q_0, tail_fraction * Q), Q] of the path's domain,
/// evaluated at the division numbers inside the window plus both window
/// endpoints (q^{-1} T_i(P(q)) is monotone between division numbers).
/// Requires 0 < tail_fraction < 1; throws EmptyWindowError.
SpectrumPoint mu_estimate(const LinearMap& map, const PLPath& path,
                          const Rational& tail_fraction);

/// Per-coordinate minimum; exact iff both operands are exact.
SpectrumPoint coordinatewise_min(const SpectrumPoint& a,
                                 const SpectrumPoint& b);

}  // namespace pgn

#endif  // PGN_SPECTRUM_HPP
