#ifndef PGN_SIMPLEX_LP_HPP
#define PGN_SIMPLEX_LP_HPP

#include "pgn/rational.hpp"

namespace pgn {

/// Exact feasibility test for { x >= 0 : constraints * x = rhs }.
///
/// Phase-one primal simplex over the rationals with Bland's anti-cycling
/// rule: minimize the sum of artificial variables and report whether the
/// optimum is zero.  Every pivot is exact, so the answer is exact.
bool lp_feasible(const RationalMatrix& constraints, const RationalVector& rhs);

}  // namespace pgn

#endif  // PGN_SIMPLEX_LP_HPP
