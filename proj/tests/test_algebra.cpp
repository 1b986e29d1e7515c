#include "dcore/algebra/linear.hpp"

#include <doctest.h>

#include <random>

using namespace dcore;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

const Polynomial d_var = Polynomial::variable();

RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return make_rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = random_rational(rng);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("rationals are canonical and print as p/q")
{
    CHECK(to_string(q(6, -4)) == "-3/2");
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(parse_rational("-10/4") == q(-5, 2));
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("polynomial basics")
{
    const Polynomial p = poly({q(1), q(0), q(3)}); // 3x^2 + 1
    CHECK(p.degree() == 2);
    CHECK(p(q(2)) == q(13));
    CHECK(Polynomial(std::vector<Rational>{q(0), q(0)}).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(p.to_string("d") == "3*d^2 + 1");
    CHECK(poly({q(-1, 12), q(1, 4), q(1, 3)}).to_string("d") == "1/3*d^2 + 1/4*d - 1/12");

    auto [quot, rem] = divmod(poly({q(-1), q(0), q(1)}), poly({q(-1), q(1)}));
    CHECK(quot == poly({q(1), q(1)}));
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(divmod(p, Polynomial()), DomainError);
}

TEST_CASE("polynomial gcd is monic and divides both")
{
    const Polynomial a = poly({q(-2), q(1)}) * poly({q(1), q(4)}).pow(2); // (d-2)(4d+1)^2
    const Polynomial b = poly({q(-2), q(1)}) * poly({q(3), q(0), q(1)});
    CHECK(gcd(a, b) == poly({q(-2), q(1)}));
    CHECK(gcd(a, Polynomial()) == a.monic());
    CHECK(gcd(poly({q(3)}), a) == poly({q(1)}));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Polynomial g = random_poly(rng, 3), x = random_poly(rng, 4), y = random_poly(rng, 4);
        if (g.is_zero() || x.is_zero() || y.is_zero())
            continue;
        const Polynomial h = gcd(g * x, g * y);
        CHECK(divmod(g * x, h).second.is_zero());
        CHECK(divmod(g * y, h).second.is_zero());
        if (g.degree() > 0)
            CHECK(divmod(h, g.monic()).second.is_zero());
    }
}

TEST_CASE("interpolate: examples")
{
    using Pts = std::vector<std::pair<Rational, Rational>>;
    CHECK(interpolate(Pts{{q(0), q(1)}, {q(1), q(1)}, {q(2), q(1)}}) == poly({q(1)}));
    // the three means of n = 3 at d = 1, 2, 3
    CHECK(interpolate(Pts{{q(1), q(1, 2)}, {q(2), q(7, 4)}, {q(3), q(11, 3)}}) == poly({q(-1, 12), q(1, 4), q(1, 3)}));
    CHECK(interpolate(Pts{{q(0), q(0)}, {q(1), q(1)}, {q(2), q(4)}, {q(3), q(9)}}) == poly({q(0), q(0), q(1)}));
    CHECK_THROWS_AS(interpolate(Pts{{q(1), q(1)}, {q(1), q(2)}}), DuplicateNode);
}

TEST_CASE("interpolate recovers any polynomial from deg+1 distinct nodes")
{
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const Polynomial p = random_poly(rng, 6);
        const int m = std::max(p.degree(), 0) + 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<Rational, Rational>> pts;
        for (int j = 0; j < m; ++j) {
            const Rational x = q(3 * j - 5, 1 + j % 4);
            pts.emplace_back(x, p(x));
        }
        CHECK(interpolate(pts) == p);
    }
}

TEST_CASE("solve_linear over Q: examples and errors")
{
    Matrix<Rational> id = {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
    auto sol = solve_linear(id, {q(4), q(-1, 2), q(7)});
    CHECK(sol.x == std::vector<Rational>{q(4), q(-1, 2), q(7)});
    CHECK(sol.rank == 3);

    sol = solve_linear(Matrix<Rational>{{q(1), q(1)}, {q(1), q(2)}}, {q(3), q(5)});
    CHECK(sol.x == std::vector<Rational>{q(1), q(2)});

    // overdetermined, consistent and inconsistent tails
    sol = solve_linear(Matrix<Rational>{{q(1), q(1)}, {q(1), q(2)}, {q(2), q(3)}}, {q(3), q(5), q(8)});
    CHECK(sol.consistent);
    sol = solve_linear(Matrix<Rational>{{q(1), q(1)}, {q(1), q(2)}, {q(2), q(3)}}, {q(3), q(5), q(9)});
    CHECK_FALSE(sol.consistent);

    CHECK_THROWS_AS(solve_linear(Matrix<Rational>{{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(3)}), NoSolution);
    try {
        solve_linear(Matrix<Rational>{{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(2)});
        FAIL("expected Underdetermined");
    } catch (const Underdetermined& e) {
        CHECK(e.rank() == 1);
    }
    CHECK_THROWS_AS(solve_linear(Matrix<Rational>{{q(1), q(2)}}, {q(1)}), DomainError);
}

TEST_CASE("solve_linear over Q(d)")
{
    // [[1, d], [d, 1]] x = [1 + d^2, 2d]  ->  x = [1, d]
    const RationalFunction one(q(1)), d(d_var);
    Matrix<RationalFunction> a = {{one, d}, {d, one}};
    const std::vector<RationalFunction> rhs = {rf(poly({q(1), q(0), q(1)})), rf(poly({q(0), q(2)}))};
    const auto sol = solve_linear(a, rhs);
    REQUIRE(sol.x.size() == 2);
    CHECK(sol.x[0] == one);
    CHECK(sol.x[1] == d);
}

TEST_CASE("solve_linear solutions satisfy the system exactly")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 2 + trial % 4;
        Matrix<Rational> a(m, std::vector<Rational>(m));
        std::vector<Rational> rhs(m);
        for (auto& row : a)
            for (auto& x : row)
                x = random_rational(rng);
        for (auto& x : rhs)
            x = random_rational(rng);
        try {
            const auto sol = solve_linear(a, rhs);
            for (std::size_t i = 0; i < m; ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < m; ++j)
                    s += a[i][j] * sol.x[j];
                CHECK(s == rhs[i]);
            }
        } catch (const Error&) {
            // singular draws are fine
        }
    }
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t m = 2 + trial % 2;
        Matrix<RationalFunction> a(m, std::vector<RationalFunction>(m));
        std::vector<RationalFunction> rhs(m);
        for (auto& row : a)
            for (auto& x : row)
                x = RationalFunction(random_poly(rng, 2), random_poly(rng, 1) + poly({q(50)}));
        for (auto& x : rhs)
            x = rf(random_poly(rng, 3));
        try {
            const auto sol = solve_linear(a, rhs);
            for (std::size_t i = 0; i < m; ++i) {
                RationalFunction s;
                for (std::size_t j = 0; j < m; ++j)
                    s += a[i][j] * sol.x[j];
                CHECK(s == rhs[i]);
            }
        } catch (const Error&) {
        }
    }
}

TEST_CASE("rational function arithmetic is exact and reduced")
{
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const RationalFunction a(random_poly(rng, 3), random_poly(rng, 2) + poly({q(0), q(0), q(0), q(1)}));
        const RationalFunction b(random_poly(rng, 3), random_poly(rng, 2) + poly({q(0), q(0), q(1)}));
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a * b) / b == a);
        CHECK(a.denominator().leading() == 1);
        CHECK(gcd(a.numerator(), a.denominator()).degree() <= 0);
    }
    const RationalFunction r(poly({q(-4), q(0), q(1)}), poly({q(-2), q(1)}) * poly({q(3)}));
    CHECK(r.is_polynomial());
    CHECK(r == rf(poly({q(2, 3), q(1, 3)})));
    CHECK_THROWS_AS(RationalFunction(poly({q(1)}), Polynomial()), DomainError);
    CHECK_THROWS_AS(RationalFunction(poly({q(1)}), poly({q(-2), q(1)}))(q(2)), SingularEvaluation);

    std::mt19937 rng2(9);
    for (int i = 0; i < 50; ++i) {
        const Rational a = random_rational(rng2), b = random_rational(rng2);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("limit_at_infinity")
{
    // (d^2 + 1) / (3 d^2)
    auto l = limit_at_infinity(RationalFunction(poly({q(1), q(0), q(1)}), poly({q(0), q(0), q(3)})));
    CHECK(l.is_finite());
    CHECK(l.value == Radical(q(1, 3)));
    l = limit_at_infinity(RationalFunction(d_var, poly({q(1), q(0), q(1)})));
    CHECK(l.value.is_zero());
    l = limit_at_infinity(RationalFunction(poly({q(1), q(0), q(-2)}), poly({q(1), q(1)})));
    CHECK(l.kind == Limit::Kind::negative_infinity);
    // 15 d^4 + ... over 7 d^4 + ...
    l = limit_at_infinity(RationalFunction(poly({q(3), q(1), q(0), q(2), q(15)}), poly({q(1), q(0), q(5), q(0), q(7)})));
    CHECK(l.value == Radical(q(15, 7)));
}

TEST_CASE("radicals")
{
    const Radical r = radical_from_square(q(20, 49), +1);
    CHECK(r.coefficient() == q(2, 7));
    CHECK(r.radicand() == q(5));
    CHECK(r.to_string() == "2/7*sqrt(5)");
    CHECK(radical_from_square(q(0), +1).is_zero());
    const Radical p = radical_from_square(q(9, 4), -1);
    CHECK(p.coefficient() == q(-3, 2));
    CHECK(p.is_rational());
    CHECK_THROWS_AS(radical_from_square(q(-1), 1), DomainError);
    CHECK(Radical(q(1), q(1, 2)) == Radical(q(1, 2), q(2)));

    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        Rational c = random_rational(rng);
        Rational v = abs(random_rational(rng));
        const Radical x(c, v);
        CHECK(x.square() == c * c * v);
        CHECK(Radical(x.coefficient(), x.radicand()) == x);
        // rational iff the radicand is 1
        const Radical y(c, v * v);
        CHECK(y.is_rational());
    }
}
