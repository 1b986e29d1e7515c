#include "dcore/algebra/linear.hpp"

namespace dcore {

// Newton divided differences, then expansion into the monomial basis.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points)
{
    const std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateNode("duplicate interpolation node " + to_string(points[i].first));
    if (m == 0)
        return {};

    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    // Horner on the Newton form.
    Polynomial result = Polynomial::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        result *= Polynomial(std::vector<Rational>{-points[i].first, 1});
        result += Polynomial::constant(dd[i]);
    }
    return result;
}

std::string Limit::to_string() const
{
    switch (kind) {
    case Kind::positive_infinity:
        return "+infinity";
    case Kind::negative_infinity:
        return "-infinity";
    default:
        return value.to_string();
    }
}

Limit leading_term_limit(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero())
        throw DomainError("limit of a function with zero denominator");
    Limit out;
    if (num.is_zero() || num.degree() < den.degree())
        return out;
    const Rational ratio = num.leading() / den.leading();
    if (num.degree() == den.degree()) {
        out.value = Radical(ratio);
        return out;
    }
    out.kind = ratio > 0 ? Limit::Kind::positive_infinity : Limit::Kind::negative_infinity;
    return out;
}

Limit limit_at_infinity(const RationalFunction& f)
{
    return leading_term_limit(f.numerator(), f.denominator());
}

Radical radical_from_square(const Rational& value, int sign)
{
    if (value < 0)
        throw DomainError("square root of negative value " + to_string(value));
    return Radical(sign < 0 ? Rational(-1) : Rational(1), value);
}

} // namespace dcore
