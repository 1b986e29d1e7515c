#include "dcore/fitter.hpp"

#include "dcore/algebra/linear.hpp"
#include "dcore/errors.hpp"
#include "dcore/genfunc.hpp"
#include "dcore/kernels.hpp"
#include "dcore/moments.hpp"

namespace dcore {

namespace {

constexpr int kHeldOut = 3;

Rational npow(int n, int j)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return Rational(out);
}

Polynomial constant_poly(const std::vector<RationalFunction>& coeffs)
{
    std::vector<Rational> v;
    for (const auto& c : coeffs) {
        if (!c.is_polynomial() || c.numerator().degree() > 0)
            throw DomainError("fit coefficients are not rational numbers");
        v.push_back(c.numerator().coeff(0));
    }
    return Polynomial(std::move(v));
}

// True when N_d(n+1)/N_d(n) is the same for every n in [1, last].
bool basis_collinear(int d, int last)
{
    CountSequence N(d);
    for (int n = 2; n <= last; ++n)
        if (N[n + 1] * N[n - 1] != N[n] * N[n])
            return false;
    return true;
}

} // namespace

std::string to_string(FitKind kind)
{
    switch (kind) {
    case FitKind::fixed_d:
        return "fixed_d";
    case FitKind::fixed_n:
        return "fixed_n";
    default:
        return "bivariate";
    }
}

Polynomial AnsatzFit::a_polynomial() const { return constant_poly(a); }
Polynomial AnsatzFit::b_polynomial() const { return constant_poly(b); }

AnsatzFit fit_fixed_d(int d, int k, std::optional<int> max_deg)
{
    if (d < 1 || k < 0)
        throw DomainError("fit_fixed_d needs d >= 1 and k >= 0");
    const int top = max_deg.value_or(2 * k);
    if (top < 0)
        throw DomainError("max_deg must be >= 0");
    const int last_n = 2 * top + 3 + kHeldOut;
    if (basis_collinear(d, last_n + 1))
        throw DegenerateAnsatz("N_" + std::to_string(d) + "(n+1) is a constant multiple of N_" +
                               std::to_string(d) + "(n); the two-term ansatz is not identifiable");

    std::vector<kernels::GridPoint> grid;
    for (int n = 2; n <= last_n; ++n)
        grid.push_back({n, d});
    const auto table = kernels::premoment_grid_parallel(grid, k);
    auto data = [&](int n) { return Rational(table[static_cast<std::size_t>(n - 2)][k]); };
    CountSequence N(d);

    for (int deg = 0; deg <= top; ++deg) {
        const int unknowns = 2 * (deg + 1);
        const int hi = 2 * deg + 3;
        Matrix<Rational> a;
        std::vector<Rational> rhs;
        for (int n = 2; n <= hi; ++n) {
            std::vector<Rational> row(static_cast<std::size_t>(unknowns));
            for (int j = 0; j <= deg; ++j) {
                row[j] = npow(n, j) * Rational(N[n]);
                row[deg + 1 + j] = npow(n, j) * Rational(N[n + 1]);
            }
            a.push_back(std::move(row));
            rhs.push_back(data(n));
        }
        LinearSolution<Rational> sol;
        try {
            sol = solve_linear(std::move(a), std::move(rhs));
        } catch (const Underdetermined&) {
            continue;
        } catch (const NoSolution&) {
            continue;
        }

        AnsatzFit fit;
        fit.kind = FitKind::fixed_d;
        fit.field = CoeffField::rationals;
        fit.k = k;
        fit.d = d;
        fit.degree = deg;
        for (int j = 0; j <= deg; ++j) {
            fit.a.emplace_back(sol.x[j]);
            fit.b.emplace_back(sol.x[deg + 1 + j]);
        }
        fit.window_lo = 2;
        fit.window_hi = hi;
        bool ok = true;
        for (int n = hi + 1; n <= hi + kHeldOut && ok; ++n) {
            ok = evaluate_premoment(fit, n, d) == data(n);
            fit.verified_on.push_back(n);
        }
        if (ok)
            return fit;
    }
    throw AnsatzRejected("no fit of degree <= " + std::to_string(top) + " for m_" + std::to_string(k) +
                         " at d = " + std::to_string(d));
}

AnsatzFit fit_fixed_n(int n, int k)
{
    const Polynomial p = premoment_poly(n, k);
    AnsatzFit fit;
    fit.kind = FitKind::fixed_n;
    fit.field = CoeffField::rationals;
    fit.k = k;
    fit.n = n;
    fit.degree = p.degree();
    for (const auto& c : p.coefficients())
        fit.a.emplace_back(c);
    const int bound = premoment_degree_bound(n, k);
    fit.window_lo = 1;
    fit.window_hi = bound + 2;
    for (int d = bound + 3; d <= bound + 2 + kHeldOut; ++d)
        fit.verified_on.push_back(d);
    return fit;
}

AnsatzFit fit_bivariate(int k)
{
    if (k < 0)
        throw DomainError("fit_bivariate needs k >= 0");
    const int deg = 2 * k;
    const int unknowns = 2 * (deg + 1);
    const int hi = 2 + unknowns; // one row beyond square, checked by the solver
    const int last_n = hi + kHeldOut;

    std::vector<Polynomial> counts(static_cast<std::size_t>(last_n) + 2);
    for (int n = 1; n <= last_n + 1; ++n)
        counts[n] = count_poly(n);
    std::vector<Polynomial> data(static_cast<std::size_t>(last_n) + 1);
    for (int n = 2; n <= last_n; ++n)
        data[n] = premoment_poly(n, k);

    Matrix<RationalFunction> a;
    std::vector<RationalFunction> rhs;
    for (int n = 2; n <= hi; ++n) {
        std::vector<RationalFunction> row(static_cast<std::size_t>(unknowns));
        for (int j = 0; j <= deg; ++j) {
            row[j] = RationalFunction(counts[n] * npow(n, j));
            row[deg + 1 + j] = RationalFunction(counts[n + 1] * npow(n, j));
        }
        a.push_back(std::move(row));
        rhs.emplace_back(data[n]);
    }

    LinearSolution<RationalFunction> sol;
    try {
        sol = solve_linear(std::move(a), std::move(rhs));
    } catch (const Underdetermined& e) {
        throw AnsatzRejected(std::string("bivariate system: ") + e.what());
    } catch (const NoSolution& e) {
        throw AnsatzRejected(std::string("bivariate system: ") + e.what());
    }
    if (!sol.consistent)
        throw AnsatzRejected("bivariate fit for m_" + std::to_string(k) + " does not reproduce n = " +
                             std::to_string(hi));

    AnsatzFit fit;
    fit.kind = FitKind::bivariate;
    fit.field = CoeffField::rational_functions;
    fit.k = k;
    fit.degree = deg;
    for (int j = 0; j <= deg; ++j) {
        fit.a.push_back(sol.x[j]);
        fit.b.push_back(sol.x[deg + 1 + j]);
    }
    fit.window_lo = 2;
    fit.window_hi = hi;
    for (int n = hi + 1; n <= last_n; ++n) {
        if (premoment_in_d(fit, n) != RationalFunction(data[n]))
            throw AnsatzRejected("bivariate fit for m_" + std::to_string(k) + " fails at n = " + std::to_string(n));
        fit.verified_on.push_back(n);
    }
    return fit;
}

RationalFunction premoment_in_d(const AnsatzFit& fit, int n)
{
    if (fit.kind == FitKind::fixed_n) {
        if (n != fit.n)
            throw DomainError("fixed_n fit was made for n = " + std::to_string(fit.n));
        return RationalFunction(fit.a_polynomial());
    }
    if (fit.kind != FitKind::bivariate)
        throw DomainError("premoment_in_d needs a bivariate or fixed_n fit");
    RationalFunction ca, cb;
    for (std::size_t j = 0; j < fit.a.size(); ++j)
        ca += fit.a[j] * RationalFunction(npow(n, static_cast<int>(j)));
    for (std::size_t j = 0; j < fit.b.size(); ++j)
        cb += fit.b[j] * RationalFunction(npow(n, static_cast<int>(j)));
    return ca * RationalFunction(count_poly(n)) + cb * RationalFunction(count_poly(n + 1));
}

Rational evaluate_premoment(const AnsatzFit& fit, int n, int d)
{
    if (n < 2 || d < 1)
        throw DomainError("fits are defined for n >= 2 and d >= 1");
    switch (fit.kind) {
    case FitKind::fixed_d: {
        if (d != fit.d)
            throw DomainError("fixed_d fit was made for d = " + std::to_string(fit.d));
        CountSequence N(d);
        const Polynomial a = fit.a_polynomial(), b = fit.b_polynomial();
        return a(Rational(n)) * Rational(N[n]) + b(Rational(n)) * Rational(N[n + 1]);
    }
    default:
        return premoment_in_d(fit, n)(Rational(d));
    }
}

Rational evaluate_fit(const AnsatzFit& fit, int n, int d) { return evaluate_premoment(fit, n, d) / Rational(count(d, n)); }

} // namespace dcore
