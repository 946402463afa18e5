#ifndef PGN_MIN_CEX_HPP
#define PGN_MIN_CEX_HPP

#include <array>
#include <span>
#include <vector>

#include "pgn/hull.hpp"
#include "pgn/linear_map.hpp"
#include "pgn/report.hpp"
#include "pgn/self_similar.hpp"
#include "pgn/spectrum.hpp"

namespace pgn {

/// The dimension-4 construction showing that a spectrum need not be closed
/// under coordinate-wise minimum.
///
/// Two self-similar generalized 4-systems: R with R_1 = R_2, division points
/// A_1 = (1,1,1,a), A_2 = (1,1,a,a), A_3 = (1,1,a,a^2), a*A_1 and ratio
/// a = alpha; and S with S_3 = S_4, division points B_1 = (1,b,b,b),
/// B_2 = (1,b,b^2,b^2), B_3 = (b,b,b^2,b^2), b*B_1 and ratio b = beta.
/// Their limit hulls sit inside the polytope K spanned by
/// {B_1^, A_1^, A_2^, A_3^, E_3} (bars denote normalization), which a
/// 5-component linear map carves out of the ordered simplex by
/// T_1, T_2, T_3 >= 0.  The target min(mu_T(R), mu_T(S)) = (0,0,0,c,0) with
/// c < 0 is the point no single proper 4-system can attain.
struct MinCexInstance {
  Rational alpha;
  Rational beta;
  SelfSimilarSystem r_system;  // ratio alpha
  SelfSimilarSystem s_system;  // ratio beta
  LinearMap map;               // 5 x 4
  std::vector<SimplexPoint> hull_generators;  // {B1^, A1^, A2^, A3^, E_3}
  SpectrumPoint target;        // (0, 0, 0, alpha(1-alpha)/|A_3|, 0)
};

/// Requires 1 < alpha < beta; throws BadParametersError.
MinCexInstance build_min_instance(const Rational& alpha, const Rational& beta);

/// Checks that T_1, T_2, T_3 >= 0 cut out exactly the hull of the five
/// generators: nonnegativity and the stated vanishing patterns at the
/// generators, and agreement between LP hull membership and the halfspace
/// predicate on a deterministic sample of the ordered simplex.
CheckReport verify_halfspace_rep(const MinCexInstance& instance);

/// Checks the closed forms mu_T(R) = (0,0,0, alpha(1-alpha)/|A_3|,
/// (alpha-1)/|A_2|), mu_T(S) = 0, and that their coordinate-wise minimum
/// equals the instance target, all exactly.
CheckReport verify_spectrum_values(const MinCexInstance& instance);

/// At each unnormalized generator x in {B_1, A_1, A_2, A_3, E_3}, checks
/// 0 <= f_1(x) and (alpha-1) f_1(x) <= (beta-1) f_2(x) and
/// (beta-1) f_3(x) <= (alpha^2-alpha) f_1(x), where f_1 = beta x_1 - x_2,
/// f_2 = x_4 - x_2, f_3 = x_4 - x_3.  Linearity extends these bounds to the
/// whole polytope K.
CheckReport verify_kappa_form_bounds(const MinCexInstance& instance);

/// (kappa_1, kappa_2, kappa_3)(q) = ((beta P_1 - P_2)/q, (P_4 - P_2)/q,
/// (P_4 - P_3)/q).  Requires a 4-dimensional path and q > 0 in its domain.
std::array<Rational, 3> kappa_values(const PLPath& path, const Rational& beta,
                                     const Rational& q);

/// q - [(1+3 beta) P_1(q) + (2 kappa_2 - kappa_3 - 3 kappa_1)(q) * q];
/// identically zero for any path with component sum q.
Rational clock_identity_residual(const PLPath& path, const Rational& beta,
                                 const Rational& q);

struct WindowInterval {
  Rational lo;
  Rational hi;
};

/// Supremum of kappa_3 over each window (division numbers in the window plus
/// the window endpoints; kappa_3 is monotone between division numbers, so
/// this is the exact supremum over the window).
///
/// Precondition: the system's limit-set vertices lie in the hull of the
/// instance generators and include the normalized B_1 exactly; throws
/// PreconditionViolatedError otherwise.
std::vector<Rational> kappa3_window_suprema(
    const SelfSimilarSystem& system, const MinCexInstance& instance,
    std::span<const WindowInterval> windows);

/// Same probe for a finite path: the normalized division values inside each
/// window must lie in the hull of the instance generators.
std::vector<Rational> kappa3_window_suprema(
    const PLPath& path, const MinCexInstance& instance,
    std::span<const WindowInterval> windows);

/// Deterministic sample of the ordered simplex: normalized integer vectors
/// (a,b,c,d) with 0 <= a <= b <= c <= d <= max_coordinate and d >= 1.
std::vector<SimplexPoint> simplex_sample_grid(int max_coordinate);

}  // namespace pgn

#endif  // PGN_MIN_CEX_HPP
