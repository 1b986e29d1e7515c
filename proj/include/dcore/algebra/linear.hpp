#pragma once

#include "dcore/algebra/polynomial.hpp"
#include "dcore/algebra/radical.hpp"
#include "dcore/algebra/rational_function.hpp"
#include "dcore/errors.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dcore {

/// Unique polynomial of degree < points.size() through all points.
/// Throws DuplicateNode when two x-values coincide.
Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct LinearSolution {
    std::vector<F> x;
    std::size_t rank = 0;
    /// False when the system is overdetermined and some row beyond the
    /// pivot rows is not satisfied by x.
    bool consistent = true;
};

namespace detail {

inline bool is_zero(const Rational& v) { return v == 0; }
inline bool is_zero(const RationalFunction& v) { return v.is_zero(); }

} // namespace detail

/// Exact Gauss-Jordan elimination over Q or Q(d).
///
/// The matrix must have at least as many rows as columns. With full column
/// rank the solution of the pivot rows is returned and `consistent` records
/// whether the remaining rows agree. A rank-deficient system throws
/// NoSolution (inconsistent) or Underdetermined (consistent).
template <class F>
LinearSolution<F> solve_linear(Matrix<F> a, std::vector<F> rhs)
{
    const std::size_t rows = a.size();
    if (rows == 0 || rhs.size() != rows)
        throw DomainError("solve_linear: shape mismatch");
    const std::size_t cols = a.front().size();
    for (const auto& row : a)
        if (row.size() != cols)
            throw DomainError("solve_linear: ragged matrix");
    if (rows < cols)
        throw DomainError("solve_linear: fewer equations than unknowns");

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && detail::is_zero(a[p][c]))
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        const F inv = F(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::is_zero(a[i][c]))
                continue;
            const F f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!detail::is_zero(a[r][j]))
                    a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    bool consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (!detail::is_zero(rhs[i]))
            consistent = false;

    if (r < cols) {
        if (!consistent)
            throw NoSolution("inconsistent rank-deficient system (rank " + std::to_string(r) + ")");
        throw Underdetermined(r, cols);
    }

    LinearSolution<F> out;
    out.x.assign(cols, F(0));
    for (std::size_t i = 0; i < r; ++i)
        out.x[pivot_col[i]] = rhs[i];
    out.rank = r;
    out.consistent = consistent;
    return out;
}

/// Value of a limit that may diverge.
struct Limit {
    enum class Kind { finite, positive_infinity, negative_infinity };
    Kind kind = Kind::finite;
    Radical value;

    bool is_finite() const noexcept { return kind == Kind::finite; }
    std::string to_string() const;
};

/// Limit of num/den as the indeterminate goes to +infinity, read off the
/// leading terms. num and den need not be coprime.
Limit leading_term_limit(const Polynomial& num, const Polynomial& den);

Limit limit_at_infinity(const RationalFunction& f);

/// sign * sqrt(value); throws DomainError for value < 0.
Radical radical_from_square(const Rational& value, int sign);

} // namespace dcore
