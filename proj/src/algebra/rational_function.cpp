#include "dcore/algebra/rational_function.hpp"

#include "dcore/errors.hpp"

namespace dcore {

namespace {

Polynomial exact_div(const Polynomial& a, const Polynomial& b)
{
    if (b.degree() == 0)
        return a * (1 / b.leading());
    return divmod(a, b).first;
}

} // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
{
    if (den.is_zero())
        throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    const Rational inv = 1 / den.leading();
    num_ = std::move(num) * inv;
    den_ = std::move(den) * inv;
}

Rational RationalFunction::operator()(const Rational& x) const
{
    Rational d = den_(x);
    if (d == 0)
        throw SingularEvaluation("pole at " + dcore::to_string(x));
    return num_(x) / d;
}

RationalFunction RationalFunction::operator-() const { return {Reduced{}, -num_, den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.is_polynomial())
            return {RationalFunction::Reduced{}, a.num_ + b.num_, a.den_};
        return {a.num_ + b.num_, a.den_};
    }
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

// Cross-cancel before multiplying so the gcds stay on the smaller factors.
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial n1 = exact_div(a.num_, g1), d2 = exact_div(b.den_, g1);
    Polynomial n2 = exact_div(b.num_, g2), d1 = exact_div(a.den_, g2);
    Polynomial num = n1 * n2;
    Polynomial den = d1 * d2;
    const Rational inv = 1 / den.leading();
    return {RationalFunction::Reduced{}, num * inv, den * inv};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero())
        throw DomainError("division by the zero rational function");
    // The reciprocal's denominator is not monic yet; operator* rescales it.
    return a * RationalFunction(RationalFunction::Reduced{}, b.den_, b.num_);
}

std::string RationalFunction::to_string(std::string_view var) const
{
    if (is_polynomial())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace dcore
