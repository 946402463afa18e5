#include "pgn/validate.hpp"

#include <optional>
#include <sstream>

#include "pgn/errors.hpp"

namespace pgn {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::S1: return "S1";
    case Axiom::S2: return "S2";
    case Axiom::S3: return "S3";
    case Axiom::G1: return "G1";
    case Axiom::G2: return "G2";
    case Axiom::G3: return "G3";
    case Axiom::Rigid: return "RIGID";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (const Violation& v : violations) {
    out << "\n  [" << to_string(v.axiom) << "] q=" << to_string(v.abscissa)
        << ": " << v.detail;
  }
  return out.str();
}

SystemClass SystemClass::rigid(Rational mesh) {
  if (mesh <= 0) throw BadParametersError("rigid mesh must be positive");
  return {RigidNSystem, std::move(mesh)};
}

namespace {

void check_order_and_sum(const PLPath& path, Axiom label,
                         std::vector<Violation>& out) {
  const auto& qs = path.abscissae();
  const auto& vs = path.values();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const RationalVector& v = vs[i];
    if (v(0) < 0) {
      out.push_back({label, qs[i], "first component " + to_string(v(0)) +
                                       " is negative"});
    }
    for (Eigen::Index j = 0; j + 1 < v.size(); ++j) {
      if (v(j) > v(j + 1)) {
        out.push_back({label, qs[i],
                       "components out of order: P" + std::to_string(j + 1) +
                           "=" + to_string(v(j)) + " > P" +
                           std::to_string(j + 2) + "=" + to_string(v(j + 1))});
      }
    }
    if (v.sum() != qs[i]) {
      out.push_back({label, qs[i],
                     "component sum " + to_string(Rational(v.sum())) +
                         " differs from abscissa"});
    }
  }
}

// One maximal interval on which P_j < P_{j+1} holds pointwise, described by
// the partial-sum slopes of the (sub)segments it crosses, in order.
struct StrictRun {
  std::vector<std::pair<Rational, Rational>> piece_slopes;  // (start q, slope)
};

// Decomposes {q : P_j(q) < P_{j+1}(q)} into maximal runs.  The difference is
// affine per segment, so each segment contributes either nothing, its whole
// open interval, or the part on one side of a zero crossing.  Runs glue
// across a breakpoint exactly when the difference is positive there.
std::vector<StrictRun> strict_runs(const PLPath& path, Eigen::Index j) {
  const auto& qs = path.abscissae();
  const auto& vs = path.values();
  std::vector<StrictRun> runs;
  bool open = false;
  auto partial_sum_slope = [&](Eigen::Index segment) {
    const RationalVector& s = path.segment_slope(segment);
    Rational total = 0;
    for (Eigen::Index t = 0; t <= j; ++t) total += s(t);
    return total;
  };
  for (Eigen::Index i = 0; i < path.segment_count(); ++i) {
    const Rational da = vs[i](j + 1) - vs[i](j);
    const Rational db = vs[i + 1](j + 1) - vs[i + 1](j);
    if (da <= 0 && db <= 0) {
      open = false;
      continue;
    }
    Rational start = qs[i];
    if (da <= 0) {
      // strict on (x, q_{i+1}] with x the zero of the affine difference
      start = qs[i] + (qs[i + 1] - qs[i]) * (-da) / (db - da);
      open = false;
    }
    if (!open) runs.emplace_back();
    runs.back().piece_slopes.emplace_back(start, partial_sum_slope(i));
    // strict stops before q_{i+1} when the difference vanishes there
    open = db > 0;
  }
  return runs;
}

void check_partial_sum_convexity(const PLPath& path,
                                 std::vector<Violation>& out) {
  for (Eigen::Index j = 0; j + 1 < path.dimension(); ++j) {
    for (const StrictRun& run : strict_runs(path, j)) {
      const auto& pieces = run.piece_slopes;
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        const auto& [start, slope] = pieces[p];
        if (slope != 0 && slope != 1) {
          out.push_back({Axiom::G3, start,
                         "partial sum P1+...+P" + std::to_string(j + 1) +
                             " has slope " + to_string(slope) +
                             " while P" + std::to_string(j + 1) + " < P" +
                             std::to_string(j + 2)});
        }
        if (p > 0 && pieces[p - 1].second > slope) {
          out.push_back({Axiom::G3, start,
                         "partial sum P1+...+P" + std::to_string(j + 1) +
                             " slope drops from " +
                             to_string(pieces[p - 1].second) + " to " +
                             to_string(slope) + " (not convex)"});
        }
      }
    }
  }
}

std::optional<Eigen::Index> single_unit_mover(const PLPath& path,
                                              Eigen::Index segment) {
  const RationalVector& slope = path.segment_slope(segment);
  Eigen::Index mover = -1;
  for (Eigen::Index t = 0; t < slope.size(); ++t) {
    if (slope(t) == 0) continue;
    if (mover >= 0 || slope(t) != 1) return std::nullopt;
    mover = t;
  }
  if (mover < 0) return std::nullopt;
  return mover;
}

// A point of the open interval (lo, hi) that is not a multiple of mesh.
Rational off_grid_witness(const Rational& lo, const Rational& hi,
                          const Rational& mesh) {
  Rational grid = Rational(ceil_multiple(lo, mesh)) * mesh;
  if (grid <= lo) grid += mesh;
  if (grid < hi) return (lo + grid) / 2;
  return (lo + hi) / 2;
}

}  // namespace

ValidationReport validate_generalized(const PLPath& path) {
  ValidationReport report;
  check_order_and_sum(path, Axiom::G1, report.violations);
  for (Eigen::Index i = 0; i < path.segment_count(); ++i) {
    const RationalVector& slope = path.segment_slope(i);
    for (Eigen::Index t = 0; t < slope.size(); ++t) {
      if (slope(t) < 0 || slope(t) > 1) {
        report.violations.push_back(
            {Axiom::G2, path.abscissae()[static_cast<std::size_t>(i)],
             "component P" + std::to_string(t + 1) + " has slope " +
                 to_string(slope(t)) + " outside [0, 1]"});
      }
    }
  }
  check_partial_sum_convexity(path, report.violations);
  return report;
}

ValidationReport validate_exact_nsystem(const PLPath& path) {
  ValidationReport report;
  check_order_and_sum(path, Axiom::S1, report.violations);
  const auto& qs = path.abscissae();
  const auto& vs = path.values();
  for (Eigen::Index i = 0; i < path.segment_count(); ++i) {
    if (!single_unit_mover(path, i)) {
      const RationalVector& slope = path.segment_slope(i);
      std::string moving;
      for (Eigen::Index t = 0; t < slope.size(); ++t) {
        if (slope(t) != 0) {
          if (!moving.empty()) moving += ", ";
          moving += "P" + std::to_string(t + 1) + " slope " + to_string(slope(t));
        }
      }
      report.violations.push_back(
          {Axiom::S2, qs[static_cast<std::size_t>(i)],
           "segment must move exactly one component with slope 1 (got " +
               (moving.empty() ? std::string("none") : moving) + ")"});
    }
  }
  for (Eigen::Index i = 1; i < path.segment_count(); ++i) {
    auto left = single_unit_mover(path, i - 1);
    auto right = single_unit_mover(path, i);
    if (!left || !right) continue;  // already reported under S2
    if (*right > *left) {
      const RationalVector& v = vs[static_cast<std::size_t>(i)];
      for (Eigen::Index t = *left; t < *right; ++t) {
        if (v(t) != v(t + 1)) {
          report.violations.push_back(
              {Axiom::S3, qs[static_cast<std::size_t>(i)],
               "forward pass from P" + std::to_string(*left + 1) + " to P" +
                   std::to_string(*right + 1) + " requires equal components, " +
                   "but P" + std::to_string(t + 1) + "=" + to_string(v(t)) +
                   " != P" + std::to_string(t + 2) + "=" + to_string(v(t + 1))});
          break;
        }
      }
    }
  }
  return report;
}

ValidationReport validate_rigid(const PLPath& path, const Rational& mesh) {
  if (mesh <= 0) throw BadParametersError("rigid mesh must be positive");
  ValidationReport pre = validate_exact_nsystem(path);
  if (!pre.valid()) {
    throw NotAnNSystemError("rigid validation requires an exact n-system: " +
                            pre.summary());
  }
  ValidationReport report;
  const auto& qs = path.abscissae();
  const auto& vs = path.values();

  if (!is_multiple_of(qs.front(), mesh)) {
    report.violations.push_back({Axiom::Rigid, qs.front(),
                                 "left endpoint is not a multiple of the mesh"});
  }

  // Values at every grid point of the domain must lie on the mesh grid.
  for (Integer k = ceil_multiple(qs.front(), mesh);
       Rational(k) * mesh <= qs.back(); ++k) {
    const Rational q = Rational(k) * mesh;
    const RationalVector v = path.eval(q);
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (!is_multiple_of(v(j), mesh)) {
        report.violations.push_back(
            {Axiom::Rigid, q,
             "P" + std::to_string(j + 1) + "=" + to_string(v(j)) +
                 " off the mesh grid at a grid abscissa"});
        break;
      }
    }
  }

  auto report_tie = [&](const Rational& q, Eigen::Index a, Eigen::Index b) {
    report.violations.push_back(
        {Axiom::Rigid, q,
         "coordinates P" + std::to_string(a + 1) + " and P" +
             std::to_string(b + 1) + " coincide off the mesh grid"});
  };

  // Distinctness at off-grid breakpoints.  The left endpoint is exempt: a
  // finite window may start anywhere along the underlying system, including
  // at a forward pass.
  for (std::size_t i = 1; i < qs.size(); ++i) {
    if (is_multiple_of(qs[i], mesh)) continue;
    for (Eigen::Index a = 0; a + 1 < path.dimension(); ++a) {
      if (vs[i](a) == vs[i](a + 1)) {
        report_tie(qs[i], a, a + 1);
        break;
      }
    }
  }

  // Distinctness inside segments.  The mover rises away from everything
  // below and, by the ordering axiom, cannot cross the constant above it, so
  // the only interior coincidences are constant pairs that share a value.
  for (Eigen::Index i = 0; i < path.segment_count(); ++i) {
    const std::size_t s = static_cast<std::size_t>(i);
    const Eigen::Index mover = *single_unit_mover(path, i);
    bool constant_tie = false;
    for (Eigen::Index a = 0; a < path.dimension() && !constant_tie; ++a) {
      for (Eigen::Index b = a + 1; b < path.dimension(); ++b) {
        if (a == mover || b == mover) continue;
        if (vs[s](a) == vs[s](b)) {
          report_tie(off_grid_witness(qs[s], qs[s + 1], mesh), a, b);
          constant_tie = true;
          break;
        }
      }
    }
  }
  return report;
}

ValidationReport validate_class(const PLPath& path, const SystemClass& cls) {
  switch (cls.kind) {
    case SystemClass::GeneralizedNSystem: return validate_generalized(path);
    case SystemClass::ExactNSystem: return validate_exact_nsystem(path);
    case SystemClass::RigidNSystem: return validate_rigid(path, cls.mesh);
  }
  throw BadParametersError("unknown system class");
}

namespace {

void require_generalized(const PLPath& path, const char* op) {
  ValidationReport report = validate_generalized(path);
  if (!report.valid()) {
    throw InvalidSystemError(std::string(op) +
                             " requires a generalized n-system: " +
                             report.summary());
  }
}

}  // namespace

std::vector<Rational> division_numbers(const PLPath& path) {
  require_generalized(path, "division_numbers");
  // Canonical paths keep interior breakpoints only at slope changes.
  return path.abscissae();
}

std::vector<Rational> switch_numbers(const PLPath& path) {
  require_generalized(path, "switch_numbers");
  std::vector<Rational> result;
  result.push_back(path.domain_start());
  for (Eigen::Index i = 1; i < path.segment_count(); ++i) {
    const CoordinateBlock left = path.moving_block(i - 1);
    const CoordinateBlock right = path.moving_block(i);
    if (right.high < left.low) {
      result.push_back(path.abscissae()[static_cast<std::size_t>(i)]);
    }
  }
  result.push_back(path.domain_end());
  return result;
}

}  // namespace pgn
