#ifndef PGN_BALLGAME_HPP
#define PGN_BALLGAME_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "pgn/linear_map.hpp"
#include "pgn/pl_path.hpp"
#include "pgn/spectrum.hpp"

namespace pgn {

/// One instant of the game: player positions (ascending), the block of
/// players carrying the ball, and the clock (always the position sum).
struct GameState {
  RationalVector positions;
  CoordinateBlock holder;
  Rational clock;
};

enum class PassPolicy {
  UniformAdmissible,  // uniform over every admissible next block
  WholeCluster,       // always the full cluster containing the old holder
};

/// Parameters of the random generators.  Generation is a pure function of
/// the policy: identical policies (seed included) produce identical paths.
struct GenerationPolicy {
  Eigen::Index dimension = 4;  // n >= 2
  Rational mesh = 1;           // delta > 0; move quantum
  int steps = 200;             // >= 1 game moves
  std::uint64_t seed = 1;
  int mean_move_units = 3;     // geometric mean of move lengths, in mesh units
  PassPolicy pass_policy = PassPolicy::UniformAdmissible;
  /// Optional rejection predicate on normalized states q^{-1} P(q); a move is
  /// retried when the predicate rejects the state it would create.
  std::function<bool(const RationalVector&)> state_constraint;
  int max_retries = 64;

  void validate() const;  // throws BadParametersError
};

/// A random exact n-system that is rigid of the policy mesh.  Starts at
/// positions delta*(1, 2, ..., n); moves are mesh multiples; the ball passes
/// forward only when the mover reaches the next player and strictly backward
/// only from states with n distinct grid positions.  Throws
/// InfeasibleStepError when the constraint hook rejects every retry.
PLPath random_rigid_system(const GenerationPolicy& policy);

/// A random generalized n-system: blocks of tied players move together at
/// speed 1/(block size).  Starts with all players at 0.
PLPath random_generalized_system(const GenerationPolicy& policy);

/// `count` independent systems (seed stream derived from policy.seed and the
/// sample index) mapped through mu_estimate, sorted canonically.  Rigid
/// generation by default.  `threads` > 1 splits the sample indices; results
/// do not depend on the thread count.
std::vector<SpectrumPoint> sample_spectrum(const LinearMap& map,
                                           const GenerationPolicy& policy,
                                           int count,
                                           const Rational& tail_fraction,
                                           bool generalized = false,
                                           int threads = 1);

}  // namespace pgn

#endif  // PGN_BALLGAME_HPP
