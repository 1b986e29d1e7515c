#include "dcore/oracle.hpp"

#include "dcore/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dcore {

std::int64_t Partition::size() const noexcept
{
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

bool Partition::has_distinct_parts() const noexcept
{
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

HookGrid hook_lengths(const Partition& p)
{
    HookGrid grid;
    const std::size_t rows = p.parts.size();
    grid.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(p.parts[i]));
        for (std::int64_t j = 0; j < p.parts[i]; ++j) {
            std::int64_t leg = 0;
            for (std::size_t k = i + 1; k < rows && p.parts[k] > j; ++k)
                ++leg;
            row[j] = (p.parts[i] - j - 1) + leg + 1;
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

bool is_st_core(const Partition& p, std::int64_t s, std::int64_t t)
{
    for (const auto& row : hook_lengths(p))
        for (auto h : row)
            if (h == s || h == t)
                return false;
    return true;
}

namespace {

struct Search {
    std::int64_t s, t, bound;
    std::uint64_t budget;
    std::uint64_t spent = 0;
    std::vector<std::int64_t> rows; // bottom row first
    std::vector<Partition> found;

    bool row_ok(std::int64_t len) const
    {
        for (std::int64_t j = 0; j < len; ++j) {
            std::int64_t leg = 0;
            for (auto r : rows)
                if (r > j)
                    ++leg;
            const std::int64_t h = (len - j - 1) + leg + 1;
            if (h == s || h == t)
                return false;
        }
        return true;
    }

    void record()
    {
        Partition p;
        p.parts.assign(rows.rbegin(), rows.rend());
        found.push_back(std::move(p));
    }

    void grow()
    {
        record();
        const std::int64_t height = static_cast<std::int64_t>(rows.size()) + 1;
        for (std::int64_t len = rows.empty() ? 1 : rows.back() + 1; len + height - 1 <= bound; ++len) {
            if (++spent > budget)
                throw BudgetExceeded("oracle search exceeded " + std::to_string(budget) + " candidates");
            if (!row_ok(len))
                continue;
            rows.push_back(len);
            grow();
            rows.pop_back();
        }
    }
};

} // namespace

std::vector<Partition> enumerate_core_distinct(std::int64_t s, std::int64_t t, std::uint64_t budget)
{
    if (s < 1 || t < 1)
        throw DomainError("core parameters must be positive");
    if (std::gcd(s, t) != 1)
        throw NotCoprime("(s,t)-cores are infinite unless gcd(s,t) = 1");
    Search search{s, t, s * t - s - t, budget, 0, {}, {}};
    search.grow();

    std::vector<Partition> out;
    for (auto& p : search.found)
        if (is_st_core(p, s, t))
            out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        const auto sa = a.size(), sb = b.size();
        return sa != sb ? sa < sb : a.parts < b.parts;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition ideal_to_partition(const SemigroupPoset& poset, const OrderIdeal& ideal)
{
    const auto& labels = ideal.labels(); // ascending
    for (auto x : labels)
        if (!poset.contains(x))
            throw UnknownLabel(std::to_string(x) + " is not a label of the poset");
    const std::int64_t r = static_cast<std::int64_t>(labels.size());
    Partition p;
    p.parts.reserve(labels.size());
    for (std::int64_t i = 0; i < r; ++i) {
        // i-th largest label h has r-1-i rows below it.
        const std::int64_t h = labels[r - 1 - i];
        p.parts.push_back(h - (r - 1 - i));
    }
    return p;
}

} // namespace dcore
