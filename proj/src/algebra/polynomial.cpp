#include "dcore/algebra/polynomial.hpp"

#include "dcore/errors.hpp"

#include <algorithm>

namespace dcore {

namespace {

const Rational& zero_rational()
{
    static const Rational z(0);
    return z;
}

using IntPoly = std::vector<BigInt>;

void trim_int(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void make_primitive(IntPoly& p)
{
    trim_int(p);
    if (p.empty())
        return;
    BigInt g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    if (p.back() < 0)
        g = -g;
    if (g != 1)
        for (auto& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_int_poly(const Polynomial& p)
{
    BigInt l = 1;
    for (const auto& c : p.coefficients())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        BigInt v = l / c.get_den();
        out.push_back(v * c.get_num());
    }
    make_primitive(out);
    return out;
}

// Pseudo-remainder of a by b over Z.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b)
{
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        BigInt la = a.back();
        for (auto& c : a)
            c *= lb;
        for (std::size_t i = 0; i <= db; ++i)
            a[i + shift] -= la * b[i];
        trim_int(a);
    }
    return a;
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& Polynomial::leading() const
{
    return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    Polynomial out = *this;
    const Rational inv = 1 / leading();
    out *= inv;
    return out;
}

Polynomial Polynomial::primitive() const
{
    IntPoly ip = to_int_poly(*this);
    std::vector<Rational> v(ip.begin(), ip.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (i == 0) {
            out += dcore::to_string(mag);
            continue;
        }
        if (mag != 1)
            out += dcore::to_string(mag) + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial{}, a};
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Rational> quot(a.coefficients().size() - b.coefficients().size() + 1);
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Rational inv_lead = 1 / b.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational f = rem[i + db] * inv_lead;
        quot[i] = f;
        if (f == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i + j] -= f * b.coeff(j);
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

// Primitive polynomial remainder sequence over Z keeps coefficient growth in
// check; the result is rescaled to monic at the end.
Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return Polynomial::constant(1);
    IntPoly x = to_int_poly(a);
    IntPoly y = to_int_poly(b);
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1)
            return Polynomial::constant(1);
        IntPoly r = pseudo_rem(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> v(x.begin(), x.end());
    return Polynomial(std::move(v)).monic();
}

} // namespace dcore
