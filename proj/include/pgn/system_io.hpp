#ifndef PGN_SYSTEM_IO_HPP
#define PGN_SYSTEM_IO_HPP

#include <optional>
#include <string>

#include "pgn/linear_map.hpp"
#include "pgn/pl_path.hpp"
#include "pgn/self_similar.hpp"

namespace pgn {

/// A parsed system document: the breakpoint path plus, when present, the
/// self-similar ratio.  Class membership is decided by the validators at the
/// point of use, not stored in the document.
struct ParsedSystem {
  PLPath path;
  std::optional<Rational> self_similar_ratio;
};

/// Document schema: {"n": int, "breakpoints": [{"q": "p/q", "value":
/// ["p/q", ...]}, ...], "self_similar_ratio": "p/q" (optional)}.
/// Rationals are strings in lowest terms; the canonical encoding fixes the
/// key order and indentation, so emit is byte-deterministic and
/// parse(emit(x)) == x bit-exactly.  Throws ParseError with field context.
ParsedSystem parse_system(const std::string& text);

std::string emit_system(const PLPath& path);
std::string emit_system(const SelfSimilarSystem& system);

/// Document schema: {"m": int, "n": int, "rows": [["p/q", ...], ...]}.
LinearMap parse_linear_map(const std::string& text);
std::string emit_linear_map(const LinearMap& map);

}  // namespace pgn

#endif  // PGN_SYSTEM_IO_HPP
