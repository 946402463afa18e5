#include "pgn/self_similar.hpp"

#include <utility>

#include "pgn/errors.hpp"

namespace pgn {

SelfSimilarSystem::SelfSimilarSystem(PLPath base, Rational ratio,
                                     SystemClass system_class)
    : base_(std::move(base)), ratio_(std::move(ratio)), class_(system_class) {
  if (ratio_ <= 1) {
    throw BadParametersError("self-similar ratio must exceed 1");
  }
  if (base_.domain_start() <= 0) {
    throw BadParametersError("self-similar base must start at q_0 > 0");
  }
  if (base_.domain_end() != ratio_ * base_.domain_start()) {
    throw InvalidSystemError("base must span exactly [q_0, ratio*q_0]; got [" +
                             to_string(base_.domain_start()) + ", " +
                             to_string(base_.domain_end()) + "] with ratio " +
                             to_string(ratio_));
  }
  if (base_.values().back() != RationalVector(ratio_ * base_.values().front())) {
    throw InvalidSystemError(
        "period endpoints do not match: P(ratio*q_0) != ratio*P(q_0)");
  }
  ValidationReport base_report = validate_class(base_, class_);
  if (!base_report.valid()) {
    throw InvalidSystemError("base fails its class validator: " +
                             base_report.summary());
  }
  // The junction between consecutive periods must itself be admissible.
  const PLPath two_periods = extended(2);
  ValidationReport junction = class_.kind == SystemClass::GeneralizedNSystem
                                  ? validate_generalized(two_periods)
                                  : validate_exact_nsystem(two_periods);
  if (!junction.valid()) {
    throw InvalidSystemError("period junction fails the validator: " +
                             junction.summary());
  }
}

bool SelfSimilarSystem::proper() const {
  return base_.values().back()(0) > 0;
}

RationalVector SelfSimilarSystem::eval(const Rational& q) const {
  if (q < base_.domain_start()) {
    throw OutOfDomainError("abscissa " + to_string(q) +
                           " precedes the domain start " +
                           to_string(base_.domain_start()));
  }
  Rational scale = 1;
  Rational reduced = q;
  while (reduced >= base_.domain_end()) {
    reduced /= ratio_;
    scale *= ratio_;
  }
  return RationalVector(scale * base_.eval(reduced));
}

PLPath SelfSimilarSystem::extended(unsigned periods) const {
  if (periods == 0) throw BadParametersError("need at least one period");
  std::vector<Rational> qs = base_.abscissae();
  std::vector<RationalVector> vs = base_.values();
  Rational scale = ratio_;
  for (unsigned p = 1; p < periods; ++p) {
    for (std::size_t i = 1; i < base_.abscissae().size(); ++i) {
      qs.push_back(base_.abscissae()[i] * scale);
      vs.push_back(base_.values()[i] * scale);
    }
    scale *= ratio_;
  }
  return PLPath(base_.dimension(), std::move(qs), std::move(vs));
}

std::vector<Rational> SelfSimilarSystem::division_numbers_in(
    const Rational& lo, const Rational& hi) const {
  if (lo < base_.domain_start()) {
    throw OutOfDomainError("window starts before the domain");
  }
  std::vector<Rational> result;
  if (hi < lo) return result;
  // Division numbers of the extension are ratio^k * (base division numbers).
  Rational scale = 1;
  while (base_.domain_end() * scale < lo) scale *= ratio_;
  while (base_.domain_start() * scale <= hi) {
    for (std::size_t i = 0; i < base_.abscissae().size(); ++i) {
      if (i + 1 == base_.abscissae().size() && scale * ratio_ * base_.domain_start() <= hi) {
        continue;  // period end coincides with the next period start
      }
      const Rational q = base_.abscissae()[i] * scale;
      if (lo <= q && q <= hi) result.push_back(q);
    }
    scale *= ratio_;
  }
  return result;
}

}  // namespace pgn
