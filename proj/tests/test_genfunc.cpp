#include "dcore/errors.hpp"
#include "dcore/genfunc.hpp"
#include "dcore/poset.hpp"

#include <doctest.h>

#include <map>

using namespace dcore;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

BivariatePolynomial bivariate(std::initializer_list<std::tuple<std::uint64_t, std::uint64_t, long>> terms)
{
    BivariatePolynomial f;
    for (auto [w, r, c] : terms)
        f.add_term(w, r, c);
    return f;
}

SizePolynomial size_poly(std::initializer_list<std::pair<std::uint64_t, long>> terms)
{
    std::vector<SizePolynomial::Term> v;
    for (auto [s, c] : terms)
        v.push_back({s, c});
    return SizePolynomial(v);
}

} // namespace

TEST_CASE("count: recurrence values")
{
    const std::vector<long> fib = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (int n = 1; n <= 10; ++n)
        CHECK(count(1, n) == fib[n - 1]);
    CHECK(count(5, 4) == 35);
    CHECK(count(7, 2) == 7);
    CHECK(count(7, 3) == 14);
    for (int n = 1; n <= 20; ++n)
        CHECK(count(2, n) == BigInt(1) << (n - 1));
    CHECK_THROWS_AS(count(0, 3), DomainError);
    CHECK_THROWS_AS(count(3, 0), DomainError);

    CountSequence seq(3);
    CHECK(seq[30] == count(3, 30));
    CHECK(seq[5] == count(3, 5));
}

TEST_CASE("count_poly")
{
    CHECK(count_poly(1) == Polynomial::constant(q(1)));
    CHECK(count_poly(2) == Polynomial::variable());
    CHECK(count_poly(3) == Polynomial::variable() * Polynomial::constant(q(2)));
    CHECK(count_poly(3)(q(2)) == q(4));
    for (int n = 1; n <= 12; ++n)
        for (int d = 1; d <= 6; ++d)
            CHECK(count_poly(n)(q(d)) == Rational(count(d, n)));
}

TEST_CASE("bivariate polynomial arithmetic")
{
    const auto a = bivariate({{0, 0, 1}, {1, 1, 2}});
    const auto b = bivariate({{3, 1, 1}, {0, 2, -1}});
    CHECK((a + b).coefficient(3, 1) == 1);
    CHECK((a + b).coefficient(1, 1) == 2);
    const auto p = a * b;
    CHECK(p.coefficient(3, 1) == 1);
    CHECK(p.coefficient(4, 2) == 2);
    CHECK(p.coefficient(0, 2) == -1);
    CHECK(p.coefficient(1, 3) == -2);
    CHECK(p.total() == a.total() * b.total());
    CHECK(a * BivariatePolynomial::one() == a);
    auto z = a;
    z += bivariate({{1, 1, -2}, {0, 0, -1}});
    CHECK(z.is_zero());
}

TEST_CASE("compute_F: examples")
{
    CHECK(compute_F(3, 2) == bivariate({{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {5, 2, 1}}));
    CHECK(compute_F(2, 1) == BivariatePolynomial::one());
    CHECK(compute_F(4, 5).total() == 35);
    CHECK_THROWS_AS(compute_F(1, 3), DomainError);
}

TEST_CASE("compute_F matches the ideal enumerator")
{
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= 3; ++d) {
            std::map<std::pair<std::uint64_t, std::uint64_t>, long> hist;
            for (const auto& i : enumerate_ideals_no_consecutive(build_poset(n, static_cast<Label>(d) * n - 1)))
                ++hist[{static_cast<std::uint64_t>(i.weight()), i.cardinality()}];
            BivariatePolynomial expected;
            for (auto [key, c] : hist)
                expected.add_term(key.first, key.second, c);
            CHECK(compute_F(n, d) == expected);
        }
}

TEST_CASE("substitute_t")
{
    CHECK(substitute_t(bivariate({{0, 0, 1}, {1, 1, 1}, {2, 1, 1}, {5, 2, 1}})) == size_poly({{0, 1}, {1, 1}, {2, 1}, {4, 1}}));
    CHECK(substitute_t(bivariate({{0, 0, 1}, {4, 1, 3}})) == size_poly({{0, 1}, {4, 3}}));
    CHECK(substitute_t(bivariate({{3, 3, 1}})) == size_poly({{0, 1}}));
    CHECK_THROWS_AS(substitute_t(bivariate({{2, 3, 1}})), InternalInvariantViolation);
}

TEST_CASE("compute_G: examples")
{
    CHECK(compute_G(3, 1) == size_poly({{0, 1}, {1, 1}}));
    CHECK(compute_G(3, 2) == size_poly({{0, 1}, {1, 1}, {2, 1}, {4, 1}}));
    CHECK(compute_G(3, 2).to_string() == "1 + q + q^2 + q^4");
    CHECK(compute_G(3, 7).total() == 14);
    CHECK(compute_G(3, 1).to_string() == "1 + q");
    for (int d = 1; d <= 10; ++d) {
        const auto g = compute_G(3, d);
        Rational sum = 0;
        for (const auto& t : g.terms())
            sum += Rational(t.count) * static_cast<long>(t.size);
        CHECK(sum / Rational(g.total()) == q(d * d, 3) + q(d, 4) - q(1, 12));
    }
}

TEST_CASE("G(1) equals the count and the constant term is 1")
{
    for (int n = 2; n <= 12; ++n)
        for (int d = 1; d <= 6; ++d) {
            const auto g = compute_G(n, d);
            CHECK(g.total() == count(d, n));
            CHECK(g.coefficient(0) == 1);
            for (const auto& t : g.terms())
                CHECK(t.count > 0);
        }
}

TEST_CASE("size polynomial helpers")
{
    const auto g = size_poly({{4, 1}, {0, 1}, {2, 0}, {4, 2}});
    CHECK(g == size_poly({{0, 1}, {4, 3}}));
    CHECK(g.coefficient(2) == 0);
    CHECK(g.max_size() == 4);
    CHECK(g.shifted(3) == size_poly({{3, 1}, {7, 3}}));
    CHECK(g.to_string() == "1 + 3*q^4");
    CHECK(SizePolynomial().to_string() == "0");
}

TEST_CASE("bead string weights are integral")
{
    for (int n = 2; n <= 15; ++n)
        for (int k = 1; k < n; ++k)
            for (int i = 0; i < 12; ++i) {
                std::uint64_t sum = 0;
                for (int j = 0; j <= i; ++j)
                    sum += static_cast<std::uint64_t>(k + j * n);
                CHECK(bead_string_weight(n, k, i) == sum);
            }
}
