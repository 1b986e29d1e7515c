#pragma once

#include "dcore/poset.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace dcore {

/// Integer partition, parts weakly decreasing.
struct Partition {
    std::vector<std::int64_t> parts;

    std::int64_t size() const noexcept;
    bool has_distinct_parts() const noexcept;

    auto operator<=>(const Partition&) const = default;
};

/// hooks[i][j] is arm + leg + 1 for the box in row i, column j.
using HookGrid = std::vector<std::vector<std::int64_t>>;

HookGrid hook_lengths(const Partition& p);

bool is_st_core(const Partition& p, std::int64_t s, std::int64_t t);

constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// All (s,t)-cores with distinct parts, by direct hook-length search.
///
/// Rows are added bottom-up with strictly increasing lengths; adding a row on
/// top never changes the hooks of the rows below, so a row that produces hook
/// s or t kills the whole branch. The first-column hook of the top row is
/// kept <= st - s - t. Output is sorted by size, then lexicographically.
/// Throws NotCoprime, or BudgetExceeded after `budget` candidate rows.
std::vector<Partition> enumerate_core_distinct(std::int64_t s, std::int64_t t,
                                               std::uint64_t budget = kDefaultOracleBudget);

/// Anderson's map: the labels, read downward, are the first-column hooks.
Partition ideal_to_partition(const SemigroupPoset& p, const OrderIdeal& ideal);

} // namespace dcore
