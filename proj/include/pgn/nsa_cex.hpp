#ifndef PGN_NSA_CEX_HPP
#define PGN_NSA_CEX_HPP

#include <span>
#include <vector>

#include "pgn/linear_map.hpp"
#include "pgn/report.hpp"
#include "pgn/self_similar.hpp"
#include "pgn/spectrum.hpp"

namespace pgn {

/// The dimension-n family (n >= 4) whose spectrum slice
/// { theta : mu_T(P) = (theta, 0, ..., 0) } equals
/// {0} U { 1/(1 + alpha^m beta) : m >= 1 } with beta = 1 + alpha + ... +
/// alpha^(n-2) -- an infinite discrete set, so the spectrum is not
/// semi-algebraic.  The (n+1)-component map is
///   T_1 = x_1,
///   T_j = alpha x_j - x_{j+1}          (2 <= j <= n-1),
///   T_n = x_n - alpha^(n-3) x_2,
///   T_{n+1} = x_n - alpha^(n-2) x_1.
struct NsaInstance {
  int n;
  Rational alpha;
  Rational beta;
  LinearMap map;  // (n+1) x n
};

/// Requires n >= 4 and alpha > 1; throws BadParametersError.
NsaInstance build_nsa_instance(int n, const Rational& alpha);

/// The exact n-system attaining 1/(1 + alpha^m beta): a self-similar ladder
/// of ratio alpha^m on [a, alpha^m a], a = 1 + beta.  Its division points
/// climb one power of alpha at a time, interleaved with the backward-pass
/// points (1, alpha^l, alpha^(l+1), ..., alpha^(l+n-2)) for l = 1..m;
/// breakpoint abscissae are the coordinate sums.  Requires m >= 1.
SelfSimilarSystem build_ladder_system(const NsaInstance& instance, int m);

/// T_j(P(q)) >= 0 for j = 2..n+1 at every division point of one period.
/// Each constraint is linear and the path is affine between division points,
/// so nonnegativity there is sufficient for the whole path.
CheckReport verify_main_inequalities(const NsaInstance& instance,
                                     const SelfSimilarSystem& system);

/// [1/(1 + alpha^m beta) for m = 1..m_max], strictly decreasing toward the
/// limit 0 (reported separately, never as a list element).  Verifies that
/// mu_exact of the m-th ladder system equals (value_m, 0, ..., 0) exactly
/// and throws InvalidSystemError on mismatch.  Requires m_max >= 1.
std::vector<Rational> enumerate_isolated_values(const NsaInstance& instance,
                                                int m_max);

/// Consecutive gaps strictly positive and the final distance to 0 positive.
CheckReport check_isolation(std::span<const Rational> values);

/// Every per-m check in one report: the ladder passes the exact-system
/// validator (and the mesh-1 validator when alpha is an integer), the main
/// inequalities hold, mu_exact matches the closed form, and the value list
/// is isolated.
CheckReport verify_ladder_family(const NsaInstance& instance, int m_max);

}  // namespace pgn

#endif  // PGN_NSA_CEX_HPP
