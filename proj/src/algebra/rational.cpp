#include "dcore/algebra/rational.hpp"

#include "dcore/errors.hpp"

#include <cstdio>

namespace dcore {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0)
        throw DomainError("not a rational: '" + std::string(text) + "'");
    if (r.get_den() == 0)
        throw DomainError("zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::string decimal_preview(double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

} // namespace dcore
