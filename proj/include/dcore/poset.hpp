#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dcore {

using Label = std::int64_t;

/// One column of the colonnade P_{n,dn-1}: labels top, top+n, ... (height of them).
struct Pillar {
    Label top;
    Label height;
    bool operator==(const Pillar&) const = default;
};

/// Gap poset of the numerical semigroup generated by coprime s and t.
///
/// The elements are the naturals not of the form as+bt (a, b >= 0); c <= e
/// holds when e - c is of that form. Representability is tabulated once up to
/// s*t so comparisons are table lookups.
class SemigroupPoset {
public:
    /// Throws DomainError for s or t < 1 and NotCoprime when gcd(s,t) != 1.
    SemigroupPoset(Label s, Label t);

    Label s() const noexcept { return s_; }
    Label t() const noexcept { return t_; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }

    bool contains(Label x) const noexcept;
    /// m in sN + tN.
    bool representable(Label m) const noexcept;
    /// Throws UnknownLabel when either argument is not a gap.
    bool leq(Label c, Label e) const;

    /// d when t = d*s - 1 with s >= 2, i.e. the poset is the colonnade P_{s,ds-1}.
    std::optional<int> colonnade_d() const noexcept;
    /// Pillars left to right; empty unless colonnade_d() is set.
    std::vector<Pillar> pillars() const;

private:
    Label s_;
    Label t_;
    std::vector<bool> representable_; // indices 0 .. s*t
    std::vector<Label> labels_;
};

SemigroupPoset build_poset(Label s, Label t);

bool leq(const SemigroupPoset& p, Label c, Label e);

/// Downward-closed subset of a SemigroupPoset, labels ascending.
class OrderIdeal {
public:
    OrderIdeal() = default;
    explicit OrderIdeal(std::vector<Label> labels);

    const std::vector<Label>& labels() const noexcept { return labels_; }
    std::size_t cardinality() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    /// Sum of the labels.
    Label weight() const noexcept;
    bool contains(Label x) const noexcept;

    auto operator<=>(const OrderIdeal&) const = default;

private:
    std::vector<Label> labels_;
};

using IdealVisitor = std::function<void(const OrderIdeal&)>;

/// Streams every order ideal with no two consecutive labels exactly once.
///
/// Colonnade posets are walked pillar by pillar: each pillar gets a string of
/// beads hanging from its top (at most d beads, and at most d-1 on the last
/// pillar), and neighbouring pillars are never both used. Ideals arrive in
/// lexicographic order of the bead counts. Other posets fall back to
/// for_each_ideal_generic.
void for_each_ideal_no_consecutive(const SemigroupPoset& p, const IdealVisitor& visit);

/// Same ideals by label-by-label backtracking, valid for any P_{s,t};
/// exclusion is tried before inclusion at each label.
void for_each_ideal_generic(const SemigroupPoset& p, const IdealVisitor& visit);

std::vector<OrderIdeal> enumerate_ideals_no_consecutive(const SemigroupPoset& p);

/// (top, height) = (k, d(n-k)-1) for k = 1..n-1. Requires n >= 2, d >= 1.
std::vector<Pillar> pillar_decomposition(int n, int d);

/// ASCII drawing: adding s moves one row down, adding t one column left, so
/// the largest label sits bottom-left. Cells are right-aligned to the widest
/// label and separated by one space; trailing blanks are trimmed.
std::string render_poset(const SemigroupPoset& p);

} // namespace dcore
