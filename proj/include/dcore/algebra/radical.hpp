#pragma once

#include "dcore/algebra/rational.hpp"

#include <string>

namespace dcore {

/// coefficient * sqrt(radicand).
///
/// Square factors found by trial division are moved into the coefficient and
/// a radicand that is a perfect square collapses to 1, so radicand() == 1
/// exactly when the value is rational. Zero is stored as 0 * sqrt(1).
class Radical {
public:
    Radical() : coeff_(0), radicand_(1) {}
    Radical(const Rational& value) : coeff_(value), radicand_(1) {}
    /// Throws DomainError for a negative radicand.
    Radical(const Rational& coefficient, const Rational& radicand);

    const Rational& coefficient() const noexcept { return coeff_; }
    const Rational& radicand() const noexcept { return radicand_; }
    bool is_rational() const noexcept { return radicand_ == 1; }
    bool is_zero() const noexcept { return coeff_ == 0; }

    /// coefficient^2 * radicand, with the sign of the coefficient dropped.
    Rational square() const { return coeff_ * coeff_ * radicand_; }
    double to_double() const;

    bool operator==(const Radical& other) const = default;

    /// "15/7", "2/7*sqrt(5)", "-sqrt(3)".
    std::string to_string() const;

private:
    Rational coeff_;
    Rational radicand_;
};

} // namespace dcore
