#pragma once

#include "dcore/algebra/linear.hpp"
#include "dcore/algebra/polynomial.hpp"
#include "dcore/algebra/radical.hpp"
#include "dcore/algebra/rational_function.hpp"
#include "dcore/genfunc.hpp"

#include <span>
#include <vector>

namespace dcore {

constexpr int kDefaultMomentCount = 8;

/// Exact moments of the size of a uniform random partition for fixed (n, d).
struct MomentReport {
    int n = 0;
    int d = 0;
    std::vector<BigInt> premoments;   // m_0..m_K
    std::vector<Rational> straight;   // M_k = m_k / N
    std::vector<Rational> central;    // E[(X - mu)^k]
    Rational mean;
    Rational variance;
    /// M_k^c / sigma^k for k = 0..K; empty when the variance is zero.
    std::vector<Radical> standardized;
};

/// m_k = [(q d/dq)^k G]_{q=1} = sum_s c_s s^k, k = 0..K.
std::vector<BigInt> premoments(const SizePolynomial& g, int K);

/// Throws DomainError for N <= 0 and DegenerateDistribution when the variance
/// is zero and a standardized moment of order >= 3 is requested.
MomentReport to_moments(std::span<const BigInt> premoments, const BigInt& N);

/// to_moments(premoments(compute_G(n, d), K), N_d(n)) with n, d filled in.
MomentReport moment_report(int n, int d, int K = kDefaultMomentCount);

/// Highest degree allowed for m_k(d, n) as a polynomial in d: 2k + floor(n/2).
int premoment_degree_bound(int n, int k);

/// m_k(d, n) as a polynomial in d, interpolated on d = 1..bound+2 and checked
/// on the next three d. Throws AnsatzRejected if the check fails or the degree
/// exceeds the bound.
Polynomial premoment_poly(int n, int k);

/// premoment_poly(n, k) for every k = 0..K from one shared grid of d values.
std::vector<Polynomial> premoment_polys(int n, int K);

/// Moments as functions of d for a fixed n.
struct SymbolicMomentReport {
    int n = 0;
    int K = 0;
    std::vector<Polynomial> premoments;         // m_k(d)
    std::vector<RationalFunction> straight;     // M_k(d)
    std::vector<RationalFunction> central;      // M_k^c(d)
    RationalFunction mean;
    RationalFunction variance;
    /// lim_{d -> inf} M_k^s for k = 0..K.
    std::vector<Limit> standardized_limits;
};

SymbolicMomentReport symbolic_moments(int n, int K);

/// N^k * M_k^c as a polynomial, from pre-moment polynomials m_0..m_k.
Polynomial scaled_central_moment(std::span<const Polynomial> m, int k);

/// lim_{d -> inf} M_k^s(d, n), for n >= 2 and k >= 2.
Limit standardized_limit(int n, int k);

/// Same, from already computed pre-moment polynomials m_0..m_k (k >= 2).
Limit standardized_limit(std::span<const Polynomial> m, int k);

} // namespace dcore
