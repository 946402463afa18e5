#include "pgn/rational.hpp"

#include <cctype>
#include <sstream>

#include "pgn/errors.hpp"

namespace pgn {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("invalid rational literal '" + std::string(text) +
                     "' (expected p or p/q with decimal digits)");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw ParseError("invalid rational literal '" + std::string(text) +
                     "' (zero denominator)");
  }
  Rational value{n, d};  // canonicalizes
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const RationalVector& values) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << values(i).str();
  }
  out << ')';
  return out.str();
}

Integer numerator_of(const Rational& value) {
  return Integer(boost::multiprecision::numerator(value));
}

Integer denominator_of(const Rational& value) {
  return Integer(boost::multiprecision::denominator(value));
}

bool is_integer(const Rational& value) { return denominator_of(value) == 1; }

bool is_multiple_of(const Rational& value, const Rational& mesh) {
  return is_integer(value / mesh);
}

Integer floor_multiple(const Rational& value, const Rational& mesh) {
  Rational q = value / mesh;
  Integer result;
  mpz_fdiv_q(result.backend().data(), numerator_of(q).backend().data(),
             denominator_of(q).backend().data());
  return result;
}

Integer ceil_multiple(const Rational& value, const Rational& mesh) {
  Rational q = value / mesh;
  Integer result;
  mpz_cdiv_q(result.backend().data(), numerator_of(q).backend().data(),
             denominator_of(q).backend().data());
  return result;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational factor = base;
  for (unsigned e = exponent; e != 0; e >>= 1) {
    if (e & 1u) result *= factor;
    if (e > 1) factor *= factor;
  }
  return result;
}

RationalVector make_vector(std::initializer_list<Rational> entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rational& r : entries) v(i++) = r;
  return v;
}

bool lexicographic_less(const RationalVector& a, const RationalVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

}  // namespace pgn
