#include "dcore/moments.hpp"

#include "dcore/errors.hpp"
#include "dcore/kernels.hpp"

#include <algorithm>

namespace dcore {

namespace {

// Held-out d values checked after interpolation.
constexpr int kHeldOut = 3;

BigInt binomial(unsigned n, unsigned k)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational rational_pow(const Rational& x, unsigned e)
{
    Rational out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= x;
    return out;
}

} // namespace

std::vector<BigInt> premoments(const SizePolynomial& g, int K) { return kernels::power_sums_parallel(g, K); }

MomentReport to_moments(std::span<const BigInt> pre, const BigInt& N)
{
    if (N <= 0)
        throw DomainError("moments need a positive partition count");
    if (pre.empty())
        throw DomainError("moments need at least m_0");
    const std::size_t K = pre.size() - 1;

    MomentReport r;
    r.premoments.assign(pre.begin(), pre.end());
    for (const auto& m : pre)
        r.straight.push_back(make_rational(m, N));
    r.mean = K >= 1 ? r.straight[1] : Rational(0);

    const Rational neg_mean = -r.mean;
    for (std::size_t k = 0; k <= K; ++k) {
        Rational c = 0;
        for (std::size_t j = 0; j <= k; ++j)
            c += Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
                 rational_pow(neg_mean, static_cast<unsigned>(k - j)) * r.straight[j];
        r.central.push_back(c);
    }
    if (K < 2)
        return r;
    r.variance = r.central[2];

    if (r.variance == 0) {
        if (K >= 3)
            throw DegenerateDistribution("zero variance: standardized moments of order >= 3 are undefined");
        return r;
    }
    for (std::size_t k = 0; k <= K; ++k) {
        const unsigned half = static_cast<unsigned>(k / 2);
        if (k % 2 == 0)
            r.standardized.emplace_back(r.central[k] / rational_pow(r.variance, half));
        else // M_k^c / sigma^k = [M_k^c / (sigma^2)^{(k+1)/2}] * sqrt(sigma^2)
            r.standardized.emplace_back(r.central[k] / rational_pow(r.variance, half + 1), r.variance);
    }
    return r;
}

MomentReport moment_report(int n, int d, int K)
{
    const SizePolynomial g = compute_G(n, d);
    MomentReport r = to_moments(premoments(g, K), count(d, n));
    r.n = n;
    r.d = d;
    return r;
}

int premoment_degree_bound(int n, int k) { return 2 * k + n / 2; }

std::vector<Polynomial> premoment_polys(int n, int K)
{
    if (n < 2 || K < 0)
        throw DomainError("premoment_polys needs n >= 2 and K >= 0");
    const int nodes = premoment_degree_bound(n, K) + 2;
    std::vector<kernels::GridPoint> grid;
    for (int d = 1; d <= nodes + kHeldOut; ++d)
        grid.push_back({n, d});
    const auto table = kernels::premoment_grid_parallel(grid, K);

    std::vector<Polynomial> out;
    for (int k = 0; k <= K; ++k) {
        const int bound = premoment_degree_bound(n, k);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int i = 0; i < bound + 2; ++i)
            pts.emplace_back(Rational(grid[i].d), Rational(table[i][k]));
        Polynomial p = interpolate(pts);
        if (p.degree() > bound)
            throw AnsatzRejected("m_" + std::to_string(k) + "(d, " + std::to_string(n) + ") has degree " +
                                 std::to_string(p.degree()) + " > " + std::to_string(bound));
        for (std::size_t i = static_cast<std::size_t>(bound) + 2; i < grid.size(); ++i)
            if (p(Rational(grid[i].d)) != Rational(table[i][k]))
                throw AnsatzRejected("m_" + std::to_string(k) + "(d, " + std::to_string(n) +
                                     ") fails held-out check at d = " + std::to_string(grid[i].d));
        out.push_back(std::move(p));
    }
    return out;
}

Polynomial premoment_poly(int n, int k)
{
    if (k < 0)
        throw DomainError("premoment_poly needs k >= 0");
    return premoment_polys(n, k).back();
}

Polynomial scaled_central_moment(std::span<const Polynomial> m, int k)
{
    if (k < 0 || m.size() <= static_cast<std::size_t>(k) || m.size() < 2)
        throw DomainError("scaled_central_moment needs m_0..m_k");
    const Polynomial neg_m1 = -m[1];
    Polynomial out = neg_m1.pow(static_cast<unsigned>(k));
    Polynomial m0_pow = Polynomial::constant(1); // m_0^{j-1}
    for (int j = 1; j <= k; ++j) {
        out += Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
               (neg_m1.pow(static_cast<unsigned>(k - j)) * m[j] * m0_pow);
        m0_pow *= m[0];
    }
    return out;
}

Limit standardized_limit(std::span<const Polynomial> m, int k)
{
    if (k < 2)
        throw DomainError("standardized_limit needs k >= 2");
    const Polynomial pk = scaled_central_moment(m, k);
    const Polynomial p2 = scaled_central_moment(m, 2);
    if (k % 2 == 0)
        return leading_term_limit(pk, p2.pow(static_cast<unsigned>(k / 2)));
    // Odd order: take the limit of the square, then restore the sign of M_k^c.
    const int sign = pk.leading() < 0 ? -1 : 1;
    Limit sq = leading_term_limit(pk * pk, p2.pow(static_cast<unsigned>(k)));
    if (!sq.is_finite()) {
        sq.kind = sign < 0 ? Limit::Kind::negative_infinity : Limit::Kind::positive_infinity;
        return sq;
    }
    sq.value = radical_from_square(sq.value.coefficient(), sign);
    return sq;
}

Limit standardized_limit(int n, int k)
{
    if (n < 2)
        throw DomainError("standardized_limit needs n >= 2");
    const auto m = premoment_polys(n, k);
    return standardized_limit(m, k);
}

SymbolicMomentReport symbolic_moments(int n, int K)
{
    SymbolicMomentReport r;
    r.n = n;
    r.K = K;
    r.premoments = premoment_polys(n, std::max(K, 2));
    const Polynomial& m0 = r.premoments[0];
    for (int k = 0; k <= K; ++k) {
        r.straight.emplace_back(r.premoments[k], m0);
        r.central.emplace_back(scaled_central_moment(r.premoments, k), m0.pow(static_cast<unsigned>(k)));
    }
    r.mean = RationalFunction(r.premoments[1], m0);
    r.variance = RationalFunction(scaled_central_moment(r.premoments, 2), m0.pow(2));
    for (int k = 0; k <= K; ++k) {
        if (k == 0)
            r.standardized_limits.push_back(Limit{Limit::Kind::finite, Radical(1)});
        else if (k == 1)
            r.standardized_limits.push_back(Limit{});
        else
            r.standardized_limits.push_back(standardized_limit(r.premoments, k));
    }
    r.premoments.resize(static_cast<std::size_t>(K) + 1);
    return r;
}

} // namespace dcore
