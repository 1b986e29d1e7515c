#pragma once

#include "dcore/algebra/linear.hpp"
#include "dcore/fitter.hpp"
#include "dcore/genfunc.hpp"
#include "dcore/moments.hpp"

#include <json.hpp>

// JSON forms of the pipeline's outputs. Rationals are "p/q" strings (just "p"
// for integers) and big integers are decimal strings, so nothing passes
// through floating point.
namespace dcore::json_io {

using json = nlohmann::json;

/// {"n":..., "d":..., "coeffs": [[size, "count"], ...]} sorted by size.
json size_polynomial(int n, int d, const SizePolynomial& g);
SizePolynomial parse_size_polynomial(const json& j);

/// {"n", "d", "mean", "variance", "standardized": [{"k", "coeff", "radicand"}, ...]}
/// plus "count" and "premoments". Standardized entries start at k = 3.
json moment_report(const MomentReport& r);
MomentReport parse_moment_report(const json& j);

json polynomial(const Polynomial& p);
Polynomial parse_polynomial(const json& j);

/// {"num": [...], "den": [...]}
json rational_function(const RationalFunction& f);
RationalFunction parse_rational_function(const json& j);

json radical(const Radical& r);

/// {"kind", "k", "a", "b", "coeff_field": "Q"|"Q(d)", "window", "verified"}
/// with "d" or "n" for the fixed index and "degree".
json fit(const AnsatzFit& f);
AnsatzFit parse_fit(const json& j);

json limit(int k, const Limit& l);

} // namespace dcore::json_io
