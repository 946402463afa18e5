#ifndef PGN_TESTS_HELPERS_HPP
#define PGN_TESTS_HELPERS_HPP

#include <vector>

#include "pgn/linear_map.hpp"
#include "pgn/pl_path.hpp"
#include "pgn/rational.hpp"

namespace pgn::testing {

inline Rational rq(const char* text) { return parse_rational(text); }

// Hand-built fixtures, frozen from the construction data rather than taken
// from the library builders, so builder bugs cannot hide validator bugs.

/// One period of R: division points (1,1,1,a), (1,1,a,a), (1,1,a,a^2),
/// (a,a,a,a^2) at their coordinate sums; R_1 = R_2 move together.
inline PLPath r_base_path(const Rational& a) {
  std::vector<RationalVector> points{
      make_vector({1, 1, 1, a}),
      make_vector({1, 1, a, a}),
      make_vector({1, 1, a, a * a}),
      make_vector({a, a, a, a * a}),
  };
  std::vector<Rational> qs;
  for (const auto& p : points) qs.push_back(p.sum());
  return PLPath(4, qs, points);
}

/// One period of S: division points (1,b,b,b), (1,b,b^2,b^2),
/// (b,b,b^2,b^2), (b,b^2,b^2,b^2); S_3 = S_4 move together.
inline PLPath s_base_path(const Rational& b) {
  std::vector<RationalVector> points{
      make_vector({1, b, b, b}),
      make_vector({1, b, b * b, b * b}),
      make_vector({b, b, b * b, b * b}),
      make_vector({b, b * b, b * b, b * b}),
  };
  std::vector<Rational> qs;
  for (const auto& p : points) qs.push_back(p.sum());
  return PLPath(4, qs, points);
}

/// The first ladder period for n=4, alpha=2 (m=1), frozen explicitly.
inline PLPath ladder_m1_path() {
  std::vector<Rational> qs{8, 9, 11, 15, 16};
  std::vector<RationalVector> points{
      make_vector({1, 1, 2, 4}), make_vector({1, 2, 2, 4}),
      make_vector({1, 2, 4, 4}), make_vector({1, 2, 4, 8}),
      make_vector({2, 2, 4, 8}),
  };
  return PLPath(4, qs, points);
}

/// The m=2 ladder period for n=4, alpha=2, frozen explicitly.
inline PLPath ladder_m2_path() {
  std::vector<Rational> qs{8, 9, 11, 15, 17, 21, 29, 32};
  std::vector<RationalVector> points{
      make_vector({1, 1, 2, 4}),   make_vector({1, 2, 2, 4}),
      make_vector({1, 2, 4, 4}),   make_vector({1, 2, 4, 8}),
      make_vector({1, 4, 4, 8}),   make_vector({1, 4, 8, 8}),
      make_vector({1, 4, 8, 16}),  make_vector({4, 4, 8, 16}),
  };
  return PLPath(4, qs, points);
}

/// Independent oracle for the spectrum functional of a finitely extended
/// path: the per-coordinate minimum of q^{-1} T(P(q)) over the division
/// numbers AND all segment midpoints of the path.  Avoids limit_set_vertices
/// and normalization entirely.
inline RationalVector brute_force_mu(const LinearMap& map, const PLPath& path) {
  std::vector<Rational> samples = path.abscissae();
  for (std::size_t i = 0; i + 1 < path.abscissae().size(); ++i) {
    samples.push_back((path.abscissae()[i] + path.abscissae()[i + 1]) / 2);
  }
  RationalVector minima(map.output_dimension());
  bool first = true;
  for (const Rational& q : samples) {
    if (q <= 0) continue;
    RationalVector image = map.apply(path.eval(q)) / q;
    if (first) {
      minima = image;
      first = false;
    } else {
      for (Eigen::Index i = 0; i < minima.size(); ++i) {
        if (image(i) < minima(i)) minima(i) = image(i);
      }
    }
  }
  return minima;
}

}  // namespace pgn::testing

#endif  // PGN_TESTS_HELPERS_HPP
