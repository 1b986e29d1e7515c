#pragma once

#include "dcore/algebra/polynomial.hpp"
#include "dcore/algebra/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcore {

enum class FitKind { fixed_d, fixed_n, bivariate };
enum class CoeffField { rationals, rational_functions };

std::string to_string(FitKind kind);

/// A closed form for the pre-moment m_k found by exact fitting.
///
/// fixed_d and bivariate: m_k(d, n) = A(n) N_d(n) + B(n) N_d(n+1), with
/// a[j], b[j] the coefficients of n^j (constants for fixed_d, functions of d
/// for bivariate). fixed_n: m_k(d, n) = a(d), and b is empty.
struct AnsatzFit {
    FitKind kind = FitKind::fixed_d;
    CoeffField field = CoeffField::rationals;
    int k = 0;
    int n = 0; // fixed_n only
    int d = 0; // fixed_d only
    int degree = 0;
    std::vector<RationalFunction> a;
    std::vector<RationalFunction> b;
    /// Training range of the varying index (n, or d for fixed_n).
    int window_lo = 0;
    int window_hi = 0;
    std::vector<int> verified_on;

    /// a as a polynomial in n (or d for fixed_n); only for rational coefficients.
    Polynomial a_polynomial() const;
    Polynomial b_polynomial() const;
};

/// Fits m_k(d, n), n = 2, 3, ..., for one d by trying degrees 0..max_deg
/// (default 2k) of A and B in turn; each degree D is solved on n = 2..2D+3 and
/// checked on the next three n. Throws DegenerateAnsatz when N_d(n) and
/// N_d(n+1) are proportional (d = 2) and AnsatzRejected when no degree fits.
AnsatzFit fit_fixed_d(int d, int k, std::optional<int> max_deg = std::nullopt);

/// m_k(d, n) as a polynomial in d; wraps premoment_poly.
AnsatzFit fit_fixed_n(int n, int k);

/// Solves for A, B of degree 2k in n over Q(d) from m_k(d, n), n = 2..4k+4,
/// then checks n = 4k+5..4k+7 as identities in d.
AnsatzFit fit_bivariate(int k);

/// The fitted pre-moment m_k at (n, d). Bivariate fits substitute n first and
/// reduce, so removable singularities in d (d = 2) evaluate to their limit;
/// a genuine pole throws SingularEvaluation.
Rational evaluate_premoment(const AnsatzFit& fit, int n, int d);

/// The straight moment M_k = m_k / N_d(n) predicted by the fit.
Rational evaluate_fit(const AnsatzFit& fit, int n, int d);

/// Bivariate or fixed_n fit at a fixed n, as a function of d.
RationalFunction premoment_in_d(const AnsatzFit& fit, int n);

} // namespace dcore
