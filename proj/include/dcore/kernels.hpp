#pragma once

#include "dcore/genfunc.hpp"

#include <span>
#include <vector>

// Data-parallel hot loops. Each kernel has an OpenMP version used by the
// library and a serial reference kept for testing and benchmarking; both
// return identical results since all arithmetic is exact.
namespace dcore::kernels {

/// sum_s c_s * s^k for k = 0..K
std::vector<BigInt> power_sums_serial(const SizePolynomial& g, int K);
std::vector<BigInt> power_sums_parallel(const SizePolynomial& g, int K);

struct GridPoint {
    int n;
    int d;
};

/// Row i holds the pre-moments m_0..m_K of G_{d,n} at points[i].
using PremomentTable = std::vector<std::vector<BigInt>>;

PremomentTable premoment_grid_serial(std::span<const GridPoint> points, int K);
PremomentTable premoment_grid_parallel(std::span<const GridPoint> points, int K);

} // namespace dcore::kernels
