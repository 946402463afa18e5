#ifndef PGN_RENDER_HPP
#define PGN_RENDER_HPP

#include <string>

#include "pgn/pl_path.hpp"
#include "pgn/self_similar.hpp"

namespace pgn {

/// Styling for a combined graph (all components of a system over one
/// q-range).  Output is byte-deterministic for fixed input: coordinates are
/// rounded to hundredths with exact integer arithmetic, never floats.
struct RenderSpec {
  int width = 900;
  int height = 540;
  Rational q_min;  // both zero means "full domain" (one period if self-similar)
  Rational q_max;
  bool show_division_rules = true;
  bool show_labels = false;
};

/// One polyline per component (coincident components stay visible through
/// distinct dash patterns), dashed vertical rules at division numbers.
/// Throws OutOfDomainError when the range is empty or escapes the domain.
std::string render_combined_graph(const PLPath& path, const RenderSpec& spec);

/// Renders the self-similar extension over the requested range.
std::string render_combined_graph(const SelfSimilarSystem& system,
                                  const RenderSpec& spec);

}  // namespace pgn

#endif  // PGN_RENDER_HPP
