#ifndef PGN_RATIONAL_HPP
#define PGN_RATIONAL_HPP

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <initializer_list>
#include <string>
#include <string_view>

namespace pgn {

// Exact arbitrary-precision scalar types.  Every quantity in the library is
// one of these; no floating point enters any computation.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p" or "p/q" (optional leading sign, q > 0 after canonicalization).
/// The result is always in lowest terms with a positive denominator.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// "(a, b, c)" rendering for reports and error messages.
std::string to_string(const RationalVector& values);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

bool is_integer(const Rational& value);

/// True when value is an integer multiple of mesh (mesh > 0).
bool is_multiple_of(const Rational& value, const Rational& mesh);

/// Largest integer k with k*mesh <= value (mesh > 0).
Integer floor_multiple(const Rational& value, const Rational& mesh);

/// Smallest integer k with k*mesh >= value (mesh > 0).
Integer ceil_multiple(const Rational& value, const Rational& mesh);

/// base^exponent for exponent >= 0.
Rational rational_pow(const Rational& base, unsigned exponent);

/// Convenience constructor for fixed-size test data and builders.
RationalVector make_vector(std::initializer_list<Rational> entries);

/// Lexicographic order on coordinate vectors of equal length.
bool lexicographic_less(const RationalVector& a, const RationalVector& b);

}  // namespace pgn

#endif  // PGN_RATIONAL_HPP
