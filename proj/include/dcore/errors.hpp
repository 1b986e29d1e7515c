#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcore {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DCORE_DEFINE_ERROR(Name)                  \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

DCORE_DEFINE_ERROR(DomainError);
DCORE_DEFINE_ERROR(DuplicateNode);
DCORE_DEFINE_ERROR(NoSolution);
DCORE_DEFINE_ERROR(NotCoprime);
DCORE_DEFINE_ERROR(UnknownLabel);
DCORE_DEFINE_ERROR(BudgetExceeded);
DCORE_DEFINE_ERROR(InternalInvariantViolation);
DCORE_DEFINE_ERROR(DegenerateDistribution);
DCORE_DEFINE_ERROR(AnsatzRejected);
DCORE_DEFINE_ERROR(DegenerateAnsatz);
DCORE_DEFINE_ERROR(SingularEvaluation);

#undef DCORE_DEFINE_ERROR

// Rank-deficient system whose right-hand side is consistent.
class Underdetermined : public Error {
public:
    Underdetermined(std::size_t rank, std::size_t unknowns)
        : Error("underdetermined system: rank " + std::to_string(rank) + " < " +
                std::to_string(unknowns) + " unknowns"),
          rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

} // namespace dcore
