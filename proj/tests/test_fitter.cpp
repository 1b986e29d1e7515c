#include "dcore/errors.hpp"
#include "dcore/fitter.hpp"
#include "dcore/moments.hpp"

#include <doctest.h>

using namespace dcore;

namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

// Integer polynomial in d, constant term first.
Polynomial ipoly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.push_back(q(x));
    return Polynomial(std::move(v));
}

Rational direct_moment(int n, int d, int k) { return moment_report(n, d, k).straight[k]; }

} // namespace

TEST_CASE("fit_fixed_d: mean at d = 3")
{
    const auto fit = fit_fixed_d(3, 1);
    CHECK(fit.kind == FitKind::fixed_d);
    CHECK(fit.degree == 2);
    CHECK(fit.a_polynomial() == poly({q(406, 507), q(-479, 507), q(25, 39)}));
    CHECK(fit.b_polynomial() == poly({q(-158, 507), q(29, 169), q(-1, 39)}));
    CHECK(fit.verified_on == std::vector<int>{8, 9, 10});
}

TEST_CASE("fit_fixed_d: k = 0 is the count itself")
{
    for (int d : {1, 3, 4}) {
        const auto fit = fit_fixed_d(d, 0);
        CHECK(fit.degree == 0);
        CHECK(fit.a_polynomial() == poly({q(1)}));
        CHECK(fit.b_polynomial().is_zero());
    }
}

TEST_CASE("fixed-d fits extrapolate beyond their window")
{
    for (int d : {3, 4, 5})
        for (int k : {1, 2}) {
            const auto fit = fit_fixed_d(d, k);
            CHECK(fit.degree <= 2 * k);
            for (int n : {15, 20})
                CHECK(evaluate_fit(fit, n, d) == direct_moment(n, d, k));
        }
}

TEST_CASE("fit_fixed_d: degeneracy at d = 2 and errors")
{
    for (int k : {0, 1, 2})
        CHECK_THROWS_AS(fit_fixed_d(2, k), DegenerateAnsatz);
    CHECK_THROWS_AS(fit_fixed_d(3, 2, 0), AnsatzRejected);
    CHECK_THROWS_AS(fit_fixed_d(0, 1), DomainError);
    CHECK_THROWS_AS(evaluate_fit(fit_fixed_d(3, 1), 5, 4), DomainError);
}

TEST_CASE("fit_fixed_n: mean and variance at n = 3")
{
    const auto m1 = fit_fixed_n(3, 1);
    CHECK(m1.a_polynomial() == poly({q(0), q(-1, 6), q(1, 2), q(2, 3)}));
    const auto r = symbolic_moments(3, 2);
    CHECK(r.mean == RationalFunction(poly({q(-1, 12), q(1, 4), q(1, 3)})));
    CHECK(r.variance == RationalFunction(poly({q(31, 720), q(1, 24), q(-1, 144), q(1, 12), q(4, 45)})));
    for (int d = 1; d <= 6; ++d)
        CHECK(evaluate_fit(m1, 3, d) == direct_moment(3, d, 1));
}

TEST_CASE("fit_bivariate: k = 0")
{
    const auto fit = fit_bivariate(0);
    REQUIRE(fit.a.size() == 1);
    CHECK(fit.a[0] == RationalFunction(q(1)));
    CHECK(fit.b[0].is_zero());
}

TEST_CASE("fit_bivariate: mean")
{
    const auto fit = fit_bivariate(1);
    CHECK(fit.field == CoeffField::rational_functions);
    REQUIRE(fit.a.size() == 3);
    REQUIRE(fit.b.size() == 3);

    const Polynomial four_d_plus_1 = ipoly({1, 4});
    const Polynomial cubic = ipoly({-2, -15, -24, 16}); // (d - 2)(4d + 1)^2
    CHECK(cubic == ipoly({-2, 1}) * four_d_plus_1 * four_d_plus_1);

    CHECK(fit.a[2] == RationalFunction(ipoly({-1, 1, 7, 5}), ipoly({24}) * four_d_plus_1));
    CHECK(fit.a[1] == RationalFunction(ipoly({2, -3, 1, -7, -21, -8}), ipoly({24}) * cubic));
    CHECK(fit.a[0] == RationalFunction(ipoly({-2, -7, -9, 13, 17}), ipoly({12}) * cubic));
    CHECK(fit.b[2] == RationalFunction(ipoly({1, 0, -1}), ipoly({24}) * four_d_plus_1));
    CHECK(fit.b[1] == RationalFunction(ipoly({-2, 3, 16, 9, -2}), ipoly({8}) * cubic));
    CHECK(fit.b[0] == RationalFunction(ipoly({10, 20, -9, -20, -1}), ipoly({12}) * cubic));

    for (int n = 2; n <= 8; ++n) {
        for (int d : {1, 3, 4, 5})
            CHECK(evaluate_fit(fit, n, d) == direct_moment(n, d, 1));
        // removable singularity at d = 2
        CHECK(evaluate_fit(fit, n, 2) == direct_moment(n, 2, 1));
    }
    CHECK(evaluate_fit(fit, 12, 7) == direct_moment(12, 7, 1));
}
