#ifndef IVORDER_RATIONAL_HPP
#define IVORDER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ivorder {

/// Exact rational number. Every value table in the library uses this type;
/// there is no floating point anywhere on a decision path.
using Rational = boost::multiprecision::cpp_rational;

/// A value table indexed by element position.
using ValueTable = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Same, but always with an explicit denominator ("1/1", "0/1").
std::string to_fraction_string(const Rational& value);

/// True iff the reduced denominator is a power of two.
bool is_dyadic(const Rational& value);

} // namespace ivorder

#endif
