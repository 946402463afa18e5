#ifndef PGN_SELF_SIMILAR_HPP
#define PGN_SELF_SIMILAR_HPP

#include "pgn/pl_path.hpp"
#include "pgn/validate.hpp"

namespace pgn {

/// A system on [q_0, infinity) satisfying P(ratio * q) = ratio * P(q),
/// stored as one period [q_0, ratio * q_0] with q_0 > 0 and ratio > 1.
///
/// Construction checks that the base spans exactly one period, that the
/// period endpoints match under scaling, that the base passes the validator
/// of its declared class, and that the junction between consecutive periods
/// is admissible (by validating a two-period extension).
class SelfSimilarSystem {
 public:
  SelfSimilarSystem(PLPath base, Rational ratio, SystemClass system_class);

  const PLPath& base() const { return base_; }
  const Rational& ratio() const { return ratio_; }
  const SystemClass& system_class() const { return class_; }
  Eigen::Index dimension() const { return base_.dimension(); }

  /// Proper means P_1 is unbounded, equivalently P_1(ratio * q_0) > 0.
  bool proper() const;

  /// Evaluation anywhere in [q_0, infinity) by rescaling into the base
  /// period.  Throws OutOfDomainError below q_0.
  RationalVector eval(const Rational& q) const;

  /// The concatenation of `periods` scaled copies, over [q_0, ratio^k q_0].
  PLPath extended(unsigned periods) const;

  /// Division numbers of the extension restricted to [lo, hi].
  std::vector<Rational> division_numbers_in(const Rational& lo,
                                            const Rational& hi) const;

 private:
  PLPath base_;
  Rational ratio_;
  SystemClass class_;
};

}  // namespace pgn

#endif  // PGN_SELF_SIMILAR_HPP
