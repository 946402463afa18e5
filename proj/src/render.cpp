#include "pgn/render.hpp"

#include <sstream>
#include <vector>

#include "pgn/errors.hpp"
#include "pgn/validate.hpp"

namespace pgn {

namespace {

constexpr int kMarginLeft = 56;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 20;
constexpr int kMarginBottom = 42;

const char* kStrokeColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                               "#9467bd", "#ff7f0e", "#8c564b"};
const char* kDashPatterns[] = {"", "7 3", "2 2", "9 3 2 3", "5 2 1 2", "12 3"};

// Exact decimal with two places: round(value * 100) rendered as d+.dd.
std::string fixed2(const Rational& value) {
  const Rational scaled = value * 100;
  Integer rounded;
  // round half up
  const Rational shifted = scaled + Rational(1, 2);
  mpz_fdiv_q(rounded.backend().data(), numerator_of(shifted).backend().data(),
             denominator_of(shifted).backend().data());
  const bool negative = rounded < 0;
  Integer magnitude = negative ? Integer(-rounded) : rounded;
  const Integer whole = magnitude / 100;
  const Integer cents = magnitude % 100;
  std::string fraction = cents.str();
  if (fraction.size() < 2) fraction.insert(0, 2 - fraction.size(), '0');
  return (negative ? "-" : "") + whole.str() + "." + fraction;
}

struct Frame {
  Rational q_lo, q_hi, v_lo, v_hi;
  int width, height;

  std::string x(const Rational& q) const {
    const Rational inner = width - kMarginLeft - kMarginRight;
    return fixed2(kMarginLeft + (q - q_lo) * inner / (q_hi - q_lo));
  }
  std::string y(const Rational& v) const {
    const Rational inner = height - kMarginTop - kMarginBottom;
    return fixed2(kMarginTop + (v_hi - v) * inner / (v_hi - v_lo));
  }
};

std::string render_path(const PLPath& path, const RenderSpec& spec,
                        const Rational& q_lo, const Rational& q_hi) {
  if (q_lo >= q_hi) {
    throw OutOfDomainError("render range [" + to_string(q_lo) + ", " +
                           to_string(q_hi) + "] is empty");
  }
  if (q_lo < path.domain_start() || q_hi > path.domain_end()) {
    throw OutOfDomainError("render range escapes the system domain");
  }

  std::vector<Rational> samples{q_lo};
  for (const Rational& q : path.abscissae()) {
    if (q > q_lo && q < q_hi) samples.push_back(q);
  }
  samples.push_back(q_hi);

  Rational v_lo = 0;
  Rational v_hi = 1;
  bool first = true;
  for (const Rational& q : samples) {
    const RationalVector v = path.eval(q);
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (first || v(j) > v_hi) v_hi = v(j);
      if (first || v(j) < v_lo) v_lo = v(j);
      first = false;
    }
  }
  if (v_lo > 0) v_lo = 0;
  if (v_hi <= v_lo) v_hi = v_lo + 1;

  const Frame frame{q_lo, q_hi, v_lo, v_hi, spec.width, spec.height};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << " " << spec.height << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" fill=\"#ffffff\"/>\n";

  // Axes.
  const std::string x0 = frame.x(q_lo);
  const std::string x1 = frame.x(q_hi);
  const std::string y0 = frame.y(v_lo);
  const std::string y1 = frame.y(v_hi);
  svg << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1
      << "\" y2=\"" << y0 << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0
      << "\" y2=\"" << y1 << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  if (spec.show_division_rules) {
    for (const Rational& q : samples) {
      const std::string x = frame.x(q);
      svg << "  <line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x
          << "\" y2=\"" << y1
          << "\" stroke=\"#999999\" stroke-width=\"0.5\""
          << " stroke-dasharray=\"4 4\"/>\n";
    }
  }

  for (Eigen::Index j = 0; j < path.dimension(); ++j) {
    const std::size_t style = static_cast<std::size_t>(j) % 6;
    svg << "  <polyline fill=\"none\" stroke=\"" << kStrokeColors[style]
        << "\" stroke-width=\"1.8\"";
    if (kDashPatterns[style][0] != '\0') {
      svg << " stroke-dasharray=\"" << kDashPatterns[style] << "\"";
    }
    svg << " points=\"";
    bool first_point = true;
    for (const Rational& q : samples) {
      const RationalVector v = path.eval(q);
      if (!first_point) svg << " ";
      svg << frame.x(q) << "," << frame.y(v(j));
      first_point = false;
    }
    svg << "\"/>\n";
  }

  if (spec.show_labels) {
    for (const Rational& q : samples) {
      svg << "  <text x=\"" << frame.x(q) << "\" y=\"" << spec.height - 14
          << "\" font-family=\"monospace\" font-size=\"11\""
          << " text-anchor=\"middle\" fill=\"#333333\">" << to_string(q)
          << "</text>\n";
    }
    const RationalVector last = path.eval(q_hi);
    for (Eigen::Index j = 0; j < path.dimension(); ++j) {
      const std::size_t style = static_cast<std::size_t>(j) % 6;
      svg << "  <text x=\"" << spec.width - kMarginRight + 4 << "\" y=\""
          << frame.y(last(j)) << "\" font-family=\"monospace\""
          << " font-size=\"11\" fill=\"" << kStrokeColors[style] << "\">P"
          << (j + 1) << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_combined_graph(const PLPath& path, const RenderSpec& spec) {
  const bool full = spec.q_min == 0 && spec.q_max == 0;
  const Rational lo = full ? path.domain_start() : spec.q_min;
  const Rational hi = full ? path.domain_end() : spec.q_max;
  return render_path(path, spec, lo, hi);
}

std::string render_combined_graph(const SelfSimilarSystem& system,
                                  const RenderSpec& spec) {
  const bool full = spec.q_min == 0 && spec.q_max == 0;
  const Rational lo = full ? system.base().domain_start() : spec.q_min;
  const Rational hi = full ? system.base().domain_end() : spec.q_max;
  if (lo >= hi) {
    throw OutOfDomainError("render range is empty");
  }
  unsigned periods = 1;
  PLPath extension = system.base();
  while (extension.domain_end() < hi) {
    ++periods;
    extension = system.extended(periods);
  }
  return render_path(extension, spec, lo, hi);
}

}  // namespace pgn
