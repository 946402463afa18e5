#ifndef PGN_REPORT_HPP
#define PGN_REPORT_HPP

#include <string>
#include <vector>

namespace pgn {

struct CheckLine {
  std::string name;
  bool passed;
  std::string detail;
};

/// A list of named pass/fail checks; passed() iff every line passed.
struct CheckReport {
  std::vector<CheckLine> lines;

  bool passed() const {
    for (const CheckLine& line : lines) {
      if (!line.passed) return false;
    }
    return true;
  }

  void add(std::string name, bool ok, std::string detail = "") {
    lines.push_back({std::move(name), ok, std::move(detail)});
  }

  void merge(const CheckReport& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }
};

}  // namespace pgn

#endif  // PGN_REPORT_HPP
