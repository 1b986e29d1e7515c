#pragma once

#include "dcore/algebra/polynomial.hpp"

#include <string>
#include <string_view>

namespace dcore {

/// Element of Q(x), kept reduced: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(const Rational& c) : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}
    /// Reduces; throws DomainError for a zero denominator.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    /// Throws SingularEvaluation at a pole.
    Rational operator()(const Rational& x) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws DomainError when b is zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& other) const = default;

    std::string to_string(std::string_view var = "x") const;

private:
    struct Reduced {};
    RationalFunction(Reduced, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

} // namespace dcore
