#include "ivorder/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ivorder {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("invalid rational '" + std::string(whole) + "'");
    cpp_int value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("invalid rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? cpp_int(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const cpp_int num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
    const cpp_int den = parse_integer(den_text, text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value)
{
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

std::string to_fraction_string(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

bool is_dyadic(const Rational& value)
{
    const cpp_int den = boost::multiprecision::denominator(value);
    return (den & (den - 1)) == 0;
}

} // namespace ivorder
