#pragma once

#include "dcore/algebra/polynomial.hpp"
#include "dcore/algebra/rational.hpp"

#include <cstdint>
#include <vector>

namespace dcore {

/// N_d(n): N_d(1) = 1, N_d(2) = d, N_d(n) = N_d(n-1) + d N_d(n-2).
BigInt count(int d, int n);

/// N_d(n) as a polynomial in d.
Polynomial count_poly(int n);

/// Memoized N_d(1), N_d(2), ... for one d.
class CountSequence {
public:
    explicit CountSequence(int d);
    int d() const noexcept { return d_; }
    /// n >= 1
    BigInt operator[](int n);

private:
    int d_;
    std::vector<BigInt> values_; // values_[i] = N_d(i + 1)
};

/// Sum of c * q^w * t^r, stored as one dense run of q-exponents per power of t.
class BivariatePolynomial {
public:
    struct Term {
        std::uint64_t q;
        std::uint64_t t;
        BigInt coeff;
    };

    BivariatePolynomial() = default;
    static BivariatePolynomial one();

    void add_term(std::uint64_t q, std::uint64_t t, const BigInt& c);
    BigInt coefficient(std::uint64_t q, std::uint64_t t) const;

    /// Nonzero terms ordered by (t, q).
    std::vector<Term> terms() const;
    std::size_t term_count() const;
    bool is_zero() const { return term_count() == 0; }

    /// Value at q = t = 1.
    BigInt total() const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

    bool operator==(const BivariatePolynomial& other) const;

private:
    struct Run {
        std::uint64_t offset = 0;
        std::vector<BigInt> coeffs;
    };
    // Adds c * (q^shift_q t^shift_t) * other into *this.
    void add_shifted(const BivariatePolynomial& other, std::uint64_t shift_q, std::uint64_t shift_t, const BigInt& c);
    Run& run_for(std::uint64_t t, std::uint64_t lo, std::uint64_t hi);

    std::vector<Run> runs_; // runs_[r] holds the t^r part
};

/// G_{d,n}(q) as (size, count) pairs, ascending size, counts positive.
class SizePolynomial {
public:
    struct Term {
        std::uint64_t size;
        BigInt count;
        bool operator==(const Term&) const = default;
    };

    SizePolynomial() = default;
    /// Terms may arrive in any order; equal sizes are merged and zeros dropped.
    explicit SizePolynomial(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    BigInt coefficient(std::uint64_t size) const;
    /// G(1)
    BigInt total() const;
    std::uint64_t max_size() const noexcept { return terms_.empty() ? 0 : terms_.back().size; }

    /// Multiplies by q^c.
    SizePolynomial shifted(std::uint64_t c) const;

    bool operator==(const SizePolynomial&) const = default;

    /// "1 + q + q^2 + q^4"
    std::string to_string(std::string_view var = "q") const;

private:
    std::vector<Term> terms_;
};

/// Sum of the labels k, k+n, ..., k+i*n, i.e. (i+1)(i*n/2 + k) without halves.
std::uint64_t bead_string_weight(int n, int k, int i);

/// F_{d,n}(q,t) = sum over consecutive-free ideals I of q^{w(I)} t^{|I|},
/// by the recursion over the pillar index k (n >= 2, d >= 1).
BivariatePolynomial compute_F(int n, int d);

/// t^r -> q^{-r(r-1)/2}; throws InternalInvariantViolation on a negative exponent.
SizePolynomial substitute_t(const BivariatePolynomial& f);

/// G_{d,n}(q) = substitute_t(compute_F(n, d)).
SizePolynomial compute_G(int n, int d);

} // namespace dcore
