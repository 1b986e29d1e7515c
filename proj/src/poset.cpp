#include "dcore/poset.hpp"

#include "dcore/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dcore {

SemigroupPoset::SemigroupPoset(Label s, Label t) : s_(s), t_(t)
{
    if (s < 1 || t < 1)
        throw DomainError("semigroup generators must be positive");
    if (std::gcd(s, t) != 1)
        throw NotCoprime("gcd(" + std::to_string(s) + ", " + std::to_string(t) + ") != 1");
    const Label limit = s * t;
    representable_.assign(static_cast<std::size_t>(limit) + 1, false);
    representable_[0] = true;
    for (Label m = 1; m <= limit; ++m)
        representable_[m] = (m >= s && representable_[m - s]) || (m >= t && representable_[m - t]);
    for (Label m = 1; m <= limit; ++m)
        if (!representable_[m])
            labels_.push_back(m);
}

bool SemigroupPoset::contains(Label x) const noexcept
{
    return std::binary_search(labels_.begin(), labels_.end(), x);
}

bool SemigroupPoset::representable(Label m) const noexcept
{
    if (m < 0)
        return false;
    // Everything from (s-1)(t-1) on is representable.
    if (m >= static_cast<Label>(representable_.size()))
        return true;
    return representable_[m];
}

bool SemigroupPoset::leq(Label c, Label e) const
{
    if (!contains(c))
        throw UnknownLabel(std::to_string(c) + " is not in P_{" + std::to_string(s_) + "," + std::to_string(t_) + "}");
    if (!contains(e))
        throw UnknownLabel(std::to_string(e) + " is not in P_{" + std::to_string(s_) + "," + std::to_string(t_) + "}");
    return e >= c && representable(e - c);
}

std::optional<int> SemigroupPoset::colonnade_d() const noexcept
{
    if (s_ < 2 || (t_ + 1) % s_ != 0)
        return std::nullopt;
    return static_cast<int>((t_ + 1) / s_);
}

std::vector<Pillar> SemigroupPoset::pillars() const
{
    auto d = colonnade_d();
    if (!d)
        return {};
    return pillar_decomposition(static_cast<int>(s_), *d);
}

SemigroupPoset build_poset(Label s, Label t) { return SemigroupPoset(s, t); }

bool leq(const SemigroupPoset& p, Label c, Label e) { return p.leq(c, e); }

OrderIdeal::OrderIdeal(std::vector<Label> labels) : labels_(std::move(labels))
{
    std::sort(labels_.begin(), labels_.end());
}

Label OrderIdeal::weight() const noexcept { return std::accumulate(labels_.begin(), labels_.end(), Label{0}); }

bool OrderIdeal::contains(Label x) const noexcept
{
    return std::binary_search(labels_.begin(), labels_.end(), x);
}

std::vector<Pillar> pillar_decomposition(int n, int d)
{
    if (n < 2 || d < 1)
        throw DomainError("pillar_decomposition needs n >= 2 and d >= 1");
    std::vector<Pillar> out;
    for (int k = 1; k <= n - 1; ++k)
        out.push_back({k, static_cast<Label>(d) * (n - k) - 1});
    return out;
}

namespace {

void walk_pillars(const std::vector<Pillar>& pillars, Label n, Label d, std::size_t k,
                  bool left_used, std::vector<Label>& current, const IdealVisitor& visit)
{
    if (k == pillars.size()) {
        visit(OrderIdeal(current));
        return;
    }
    // A bead at depth d on pillar k sits above top k+1 in the order, which
    // would force the consecutive pair k, k+1.
    const Label cap = left_used ? 0 : std::min(d, pillars[k].height);
    const std::size_t mark = current.size();
    for (Label beads = 0; beads <= cap; ++beads) {
        if (beads > 0)
            current.push_back(pillars[k].top + (beads - 1) * n);
        walk_pillars(pillars, n, d, k + 1, beads > 0, current, visit);
    }
    current.resize(mark);
}

void walk_labels(const SemigroupPoset& p, std::size_t i, std::vector<Label>& current,
                 std::vector<bool>& in, const IdealVisitor& visit)
{
    const auto& labels = p.labels();
    if (i == labels.size()) {
        visit(OrderIdeal(current));
        return;
    }
    const Label x = labels[i];
    walk_labels(p, i + 1, current, in, visit);

    // Covers below x are x-s and x-t; the generated order needs nothing else.
    auto member = [&](Label y) { return y > 0 && y < static_cast<Label>(in.size()) && in[y]; };
    if (member(x - 1))
        return;
    for (Label step : {p.s(), p.t()}) {
        const Label y = x - step;
        if (y > 0 && p.contains(y) && !member(y))
            return;
    }
    in[x] = true;
    current.push_back(x);
    walk_labels(p, i + 1, current, in, visit);
    current.pop_back();
    in[x] = false;
}

} // namespace

void for_each_ideal_no_consecutive(const SemigroupPoset& p, const IdealVisitor& visit)
{
    if (auto d = p.colonnade_d()) {
        std::vector<Label> current;
        walk_pillars(p.pillars(), p.s(), *d, 0, false, current, visit);
        return;
    }
    for_each_ideal_generic(p, visit);
}

void for_each_ideal_generic(const SemigroupPoset& p, const IdealVisitor& visit)
{
    std::vector<Label> current;
    const Label top = p.labels().empty() ? 0 : p.labels().back();
    std::vector<bool> in(static_cast<std::size_t>(top) + 1, false);
    walk_labels(p, 0, current, in, visit);
}

std::vector<OrderIdeal> enumerate_ideals_no_consecutive(const SemigroupPoset& p)
{
    std::vector<OrderIdeal> out;
    for_each_ideal_no_consecutive(p, [&](const OrderIdeal& ideal) { out.push_back(ideal); });
    return out;
}

std::string render_poset(const SemigroupPoset& p)
{
    const Label s = p.s(), t = p.t();
    if (p.labels().empty())
        return "";
    // Every gap is uniquely s*t - a*s - b*t with a, b >= 1.
    struct Cell { Label a, b, label; };
    std::vector<Cell> cells;
    Label max_a = 0, max_b = 0;
    for (Label b = 1; s * t - s - b * t > 0; ++b)
        for (Label a = 1; s * t - a * s - b * t > 0; ++a) {
            cells.push_back({a, b, s * t - a * s - b * t});
            max_a = std::max(max_a, a);
            max_b = std::max(max_b, b);
        }
    if (cells.size() != p.size())
        throw InternalInvariantViolation("render_poset: gap coordinates do not cover the poset");

    const std::size_t width = std::to_string(p.labels().back()).size();
    std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(max_a),
                                               std::vector<std::string>(static_cast<std::size_t>(max_b)));
    for (const auto& c : cells) {
        std::string text = std::to_string(c.label);
        grid[max_a - c.a][c.b - 1] = std::string(width - text.size(), ' ') + text;
    }

    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0)
                line += ' ';
            line += row[j].empty() ? std::string(width, ' ') : row[j];
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + '\n';
    }
    return out;
}

} // namespace dcore
