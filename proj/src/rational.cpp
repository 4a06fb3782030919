#include "evid/rational.hpp"

#include "evid/errors.hpp"

#include <cctype>

namespace evid {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty())
        throw ParseError("invalid rational: '" + std::string(whole) + "'");
    Integer value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid rational: '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_fraction_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rational& r, unsigned digits) {
    Integer num = numerator(r);
    Integer den = denominator(r);
    bool negative = num < 0;
    if (negative)
        num = -num;

    Integer scale = 1;
    for (unsigned i = 0; i < digits; ++i)
        scale *= 10;

    Integer scaled = num * scale;
    Integer quot = scaled / den;
    Integer rem = scaled % den;
    // round half to even
    Integer twice = rem * 2;
    if (twice > den || (twice == den && quot % 2 != 0))
        ++quot;

    std::string body;
    if (digits == 0) {
        body = quot.str();
    } else {
        Integer whole = quot / scale;
        Integer frac = quot % scale;
        std::string frac_str = frac.str();
        frac_str.insert(0, digits - frac_str.size(), '0');
        body = whole.str() + "." + frac_str;
    }
    if (negative && quot != 0)
        body.insert(0, 1, '-');
    return body;
}

} // namespace evid
