#include "dcore/verify.hpp"

#include "dcore/errors.hpp"
#include "dcore/genfunc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dcore {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "PASS";
    case CheckStatus::fail:
        return "FAIL";
    default:
        return "SKIPPED";
    }
}

bool GridVerification::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

CheckResult check(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

} // namespace

GridVerification verify_point(int n, int d, std::uint64_t budget)
{
    GridVerification out{n, d, {}};
    const Label s = n, t = static_cast<Label>(d) * n - 1;
    const SemigroupPoset poset(s, t);
    const auto ideals = enumerate_ideals_no_consecutive(poset);
    const BivariatePolynomial f = compute_F(n, d);
    const SizePolynomial g = substitute_t(f);
    const BigInt expected = count(d, n);

    out.checks.push_back(check("counts", BigInt(ideals.size()) == expected && g.total() == expected,
                               "N=" + expected.get_str() + " ideals=" + std::to_string(ideals.size()) +
                                   " G(1)=" + g.total().get_str()));

    BivariatePolynomial from_ideals;
    for (const auto& ideal : ideals)
        from_ideals.add_term(static_cast<std::uint64_t>(ideal.weight()), ideal.cardinality(), 1);
    out.checks.push_back(check("F", from_ideals == f));

    std::vector<Partition> cores;
    try {
        cores = enumerate_core_distinct(s, t, budget);
    } catch (const BudgetExceeded& e) {
        out.checks.push_back({"histogram", CheckStatus::skipped, e.what()});
        out.checks.push_back({"bijection", CheckStatus::skipped, e.what()});
        return out;
    }

    std::map<std::uint64_t, BigInt> hist;
    for (const auto& p : cores)
        hist[static_cast<std::uint64_t>(p.size())] += 1;
    std::vector<SizePolynomial::Term> hist_terms;
    for (auto& [size, c] : hist)
        hist_terms.push_back({size, c});
    out.checks.push_back(check("histogram", SizePolynomial(std::move(hist_terms)) == g,
                               std::to_string(cores.size()) + " oracle partitions"));

    std::set<Partition> image;
    bool laws = true;
    for (const auto& ideal : ideals) {
        Partition p = ideal_to_partition(poset, ideal);
        const Label r = static_cast<Label>(ideal.cardinality());
        laws = laws && p.has_distinct_parts() && p.size() == ideal.weight() - r * (r - 1) / 2;
        image.insert(std::move(p));
    }
    const std::set<Partition> oracle_set(cores.begin(), cores.end());
    out.checks.push_back(check("bijection", laws && image.size() == ideals.size() && image == oracle_set));
    return out;
}

std::vector<GridVerification> verify_grid(int nmax, int dmax, std::uint64_t budget)
{
    std::vector<std::pair<int, int>> points;
    for (int n = 2; n <= nmax; ++n)
        for (int d = 1; d <= dmax; ++d)
            points.emplace_back(n, d);
    std::vector<GridVerification> out(points.size());
    const long count = static_cast<long>(points.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = verify_point(points[i].first, points[i].second, budget);
        } catch (...) {
#pragma omp critical(dcore_verify_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace dcore
