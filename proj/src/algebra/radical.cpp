#include "dcore/algebra/radical.hpp"

#include "dcore/errors.hpp"

#include <cmath>

namespace dcore {

namespace {

// Trial division bound for square-factor extraction.
constexpr unsigned long kTrialBound = 100000;

} // namespace

Radical::Radical(const Rational& coefficient, const Rational& radicand)
{
    if (radicand < 0)
        throw DomainError("negative radicand " + dcore::to_string(radicand));
    if (coefficient == 0 || radicand == 0) {
        coeff_ = 0;
        radicand_ = 1;
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q
    BigInt n = radicand.get_num() * radicand.get_den();
    Rational c = coefficient / Rational(radicand.get_den());
    // Strip every prime below the bound completely: squares go to the
    // coefficient, a leftover single factor to `kept`. The cofactor then has
    // only large prime factors and is a square or (below bound^3) square-free.
    BigInt pulled = 1, kept = 1;
    for (unsigned long f = 2; f <= kTrialBound; f += (f == 2 ? 1 : 2)) {
        if (BigInt(f) * f > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), f * f)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f * f);
            pulled *= f;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
            kept *= f;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        pulled *= root;
        n = 1;
    }
    n *= kept;
    coeff_ = c * Rational(pulled);
    coeff_.canonicalize();
    radicand_ = Rational(n);
}

double Radical::to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

std::string Radical::to_string() const
{
    if (is_rational())
        return dcore::to_string(coeff_);
    std::string out;
    if (coeff_ == -1)
        out = "-";
    else if (coeff_ != 1)
        out = dcore::to_string(coeff_) + "*";
    return out + "sqrt(" + dcore::to_string(radicand_) + ")";
}

} // namespace dcore
