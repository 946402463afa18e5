#ifndef PGN_VALIDATE_HPP
#define PGN_VALIDATE_HPP

#include <string>
#include <vector>

#include "pgn/pl_path.hpp"
#include "pgn/rational.hpp"

namespace pgn {

enum class Axiom { S1, S2, S3, G1, G2, G3, Rigid };

std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  Rational abscissa;
  std::string detail;
};

/// Validators collect every violation they find, not just the first.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

struct SystemClass {
  enum Kind { ExactNSystem, GeneralizedNSystem, RigidNSystem };

  static SystemClass exact() { return {ExactNSystem, Rational(0)}; }
  static SystemClass generalized() { return {GeneralizedNSystem, Rational(0)}; }
  static SystemClass rigid(Rational mesh);

  Kind kind;
  Rational mesh;  // positive iff kind == RigidNSystem
};

/// Relaxed block-move axioms: ordering and sum (G1), monotone 1-Lipschitz
/// components (G2), and convexity with slopes {0,1} of each partial sum
/// P_1+...+P_j on every maximal interval where P_j < P_{j+1} (G3).
ValidationReport validate_generalized(const PLPath& path);

/// Strict axioms: ordering and sum (S1), exactly one unit-slope component per
/// segment (S2), and the forward-pass equality condition (S3).
ValidationReport validate_exact_nsystem(const PLPath& path);

/// Mesh conditions on an exact n-system: the left endpoint and every value at
/// a mesh multiple lie on the mesh grid, and off-grid points have n distinct
/// coordinates.  Throws NotAnNSystemError when the path is not an exact
/// n-system, BadParametersError when mesh <= 0.
ValidationReport validate_rigid(const PLPath& path, const Rational& mesh);

ValidationReport validate_class(const PLPath& path, const SystemClass& cls);

/// Both boundary abscissae plus every interior breakpoint where the slope
/// vector changes.  Requires validate_generalized; throws InvalidSystemError.
std::vector<Rational> division_numbers(const PLPath& path);

/// Boundary abscissae plus interior breakpoints where the moving block jumps
/// strictly backward (entire right block below the entire left block).
/// Requires validate_generalized; throws InvalidSystemError.
std::vector<Rational> switch_numbers(const PLPath& path);

}  // namespace pgn

#endif  // PGN_VALIDATE_HPP
