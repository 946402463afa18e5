#include "pgn/simplex_lp.hpp"

#include <vector>

#include "pgn/errors.hpp"

namespace pgn {

bool lp_feasible(const RationalMatrix& constraints, const RationalVector& rhs) {
  const Eigen::Index m = constraints.rows();
  const Eigen::Index n = constraints.cols();
  if (rhs.size() != m) {
    throw DimensionMismatchError("rhs length does not match constraint rows");
  }
  if (n == 0) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (rhs(i) != 0) return false;
    }
    return true;
  }

  // Tableau [A | I | b] with artificial basis, rows flipped so b >= 0.
  const Eigen::Index cols = n + m + 1;
  RationalMatrix tableau = RationalMatrix::Zero(m, cols);
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = rhs(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      tableau(i, j) = flip ? Rational(-constraints(i, j)) : constraints(i, j);
    }
    tableau(i, n + i) = 1;
    tableau(i, cols - 1) = flip ? Rational(-rhs(i)) : rhs(i);
  }
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs for minimizing the artificial sum: d_j = c_j - sum_i a_ij.
  RationalVector reduced = RationalVector::Zero(cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    Rational column_sum = 0;
    for (Eigen::Index i = 0; i < m; ++i) column_sum += tableau(i, j);
    const Rational cost = (j >= n && j < n + m) ? 1 : 0;
    reduced(j) = cost - column_sum;
  }

  while (true) {
    // Bland: entering variable is the smallest index with negative cost.
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (reduced(j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    // Ratio test; ties broken by the smallest basis variable (Bland).
    Eigen::Index leaving = -1;
    Rational best_ratio = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tableau(i, entering) <= 0) continue;
      const Rational ratio = tableau(i, cols - 1) / tableau(i, entering);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      // Unbounded below cannot happen for the artificial objective.
      throw Error("phase-one simplex reported an unbounded objective");
    }

    const Rational pivot = tableau(leaving, entering);
    tableau.row(leaving) /= pivot;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leaving || tableau(i, entering) == 0) continue;
      tableau.row(i) -= tableau(i, entering) * tableau.row(leaving);
    }
    reduced -= reduced(entering) * tableau.row(leaving).transpose();
    basis[leaving] = entering;
  }

  // Feasible iff no artificial value remains positive.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] >= n && tableau(i, cols - 1) != 0) return false;
  }
  return true;
}

}  // namespace pgn
