#pragma once

#include "dcore/algebra/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcore {

/// Dense univariate polynomial over the rationals.
///
/// coefficients()[i] is the coefficient of x^i. The zero polynomial has no
/// coefficients; every other value has a nonzero leading coefficient. Which
/// indeterminate x stands for (n or d) is up to the caller.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// The indeterminate itself.
    static Polynomial variable();

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    /// Zero past the degree.
    const Rational& coeff(std::size_t i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    Polynomial monic() const;
    /// Integer-coefficient multiple with content 1 and positive leading term.
    Polynomial primitive() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    bool operator==(const Polynomial& other) const = default;

    Polynomial pow(unsigned e) const;

    /// Human-readable form, highest degree first: "2/3*d^3 + 1/2*d^2 - 1/6*d".
    std::string to_string(std::string_view var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DomainError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace dcore
