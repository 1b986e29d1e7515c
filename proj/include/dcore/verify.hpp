#pragma once

#include "dcore/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dcore {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

/// Cross-checks for one (n, d): the recurrence, the ideal enumerator, F, G and
/// the brute-force oracle against each other.
struct GridVerification {
    int n = 0;
    int d = 0;
    std::vector<CheckResult> checks;

    bool passed() const; // no failures; skips allowed
};

/// Checks run:
///   counts     N_d(n) == #ideals == G(1)
///   F          (w(I), |I|) histogram of the ideals == terms of compute_F
///   histogram  oracle size histogram == coefficients of compute_G
///   bijection  ideal_to_partition is injective onto the oracle's set, keeps
///              parts distinct, and |p| = w(I) - |I|(|I|-1)/2
/// Oracle-based checks are SKIPPED when the budget runs out.
GridVerification verify_point(int n, int d, std::uint64_t budget = kDefaultOracleBudget);

/// verify_point over 2..nmax x 1..dmax, in parallel, results in grid order.
std::vector<GridVerification> verify_grid(int nmax, int dmax, std::uint64_t budget = kDefaultOracleBudget);

} // namespace dcore
