#include "dcore/kernels.hpp"

#include "dcore/errors.hpp"

#include <omp.h>

namespace dcore::kernels {

namespace {

void accumulate_powers(const SizePolynomial::Term& term, std::vector<BigInt>& acc)
{
    BigInt p = term.count;
    acc[0] += p;
    for (std::size_t k = 1; k < acc.size(); ++k) {
        p *= term.size;
        acc[k] += p;
    }
}

void check_order(int K)
{
    if (K < 0)
        throw DomainError("moment order must be >= 0");
}

} // namespace

std::vector<BigInt> power_sums_serial(const SizePolynomial& g, int K)
{
    check_order(K);
    std::vector<BigInt> acc(static_cast<std::size_t>(K) + 1, BigInt(0));
    for (const auto& term : g.terms())
        accumulate_powers(term, acc);
    return acc;
}

std::vector<BigInt> power_sums_parallel(const SizePolynomial& g, int K)
{
    check_order(K);
    const auto& terms = g.terms();
    const long count = static_cast<long>(terms.size());
    std::vector<BigInt> total(static_cast<std::size_t>(K) + 1, BigInt(0));
#pragma omp parallel
    {
        std::vector<BigInt> local(static_cast<std::size_t>(K) + 1, BigInt(0));
#pragma omp for schedule(static) nowait
        for (long i = 0; i < count; ++i)
            accumulate_powers(terms[static_cast<std::size_t>(i)], local);
#pragma omp critical(dcore_power_sums)
        for (std::size_t k = 0; k < total.size(); ++k)
            total[k] += local[k];
    }
    return total;
}

PremomentTable premoment_grid_serial(std::span<const GridPoint> points, int K)
{
    PremomentTable out;
    out.reserve(points.size());
    for (const auto& pt : points)
        out.push_back(power_sums_serial(compute_G(pt.n, pt.d), K));
    return out;
}

PremomentTable premoment_grid_parallel(std::span<const GridPoint> points, int K)
{
    check_order(K);
    PremomentTable out(points.size());
    const long count = static_cast<long>(points.size());
    // Exceptions must not cross the parallel region.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            const auto& pt = points[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = power_sums_serial(compute_G(pt.n, pt.d), K);
        } catch (...) {
#pragma omp critical(dcore_grid_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace dcore::kernels
