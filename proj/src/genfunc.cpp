#include "dcore/genfunc.hpp"

#include "dcore/errors.hpp"

#include <algorithm>
#include <cassert>

namespace dcore {

BigInt count(int d, int n)
{
    if (n < 1 || d < 1)
        throw DomainError("count needs n >= 1 and d >= 1");
    BigInt prev = 1, cur = d; // N_d(1), N_d(2)
    if (n == 1)
        return prev;
    for (int i = 3; i <= n; ++i) {
        BigInt next = cur + d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial count_poly(int n)
{
    if (n < 1)
        throw DomainError("count_poly needs n >= 1");
    const Polynomial dvar = Polynomial::variable();
    Polynomial prev = Polynomial::constant(1), cur = dvar;
    if (n == 1)
        return prev;
    for (int i = 3; i <= n; ++i) {
        Polynomial next = cur + dvar * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CountSequence::CountSequence(int d) : d_(d)
{
    if (d < 1)
        throw DomainError("CountSequence needs d >= 1");
    values_ = {BigInt(1), BigInt(d)};
}

BigInt CountSequence::operator[](int n)
{
    if (n < 1)
        throw DomainError("N_d(n) needs n >= 1");
    while (static_cast<int>(values_.size()) < n) {
        const std::size_t m = values_.size();
        values_.push_back(values_[m - 1] + d_ * values_[m - 2]);
    }
    return values_[static_cast<std::size_t>(n) - 1];
}

// ---------------------------------------------------------------------------

BivariatePolynomial BivariatePolynomial::one()
{
    BivariatePolynomial p;
    p.add_term(0, 0, 1);
    return p;
}

BivariatePolynomial::Run& BivariatePolynomial::run_for(std::uint64_t t, std::uint64_t lo, std::uint64_t hi)
{
    if (runs_.size() <= t)
        runs_.resize(t + 1);
    Run& run = runs_[t];
    if (run.coeffs.empty()) {
        run.offset = lo;
        run.coeffs.resize(hi - lo);
        return run;
    }
    if (lo < run.offset) {
        run.coeffs.insert(run.coeffs.begin(), run.offset - lo, BigInt(0));
        run.offset = lo;
    }
    if (hi > run.offset + run.coeffs.size())
        run.coeffs.resize(hi - run.offset);
    return run;
}

void BivariatePolynomial::add_term(std::uint64_t q, std::uint64_t t, const BigInt& c)
{
    if (c == 0)
        return;
    Run& run = run_for(t, q, q + 1);
    run.coeffs[q - run.offset] += c;
}

void BivariatePolynomial::add_shifted(const BivariatePolynomial& other, std::uint64_t shift_q,
                                      std::uint64_t shift_t, const BigInt& c)
{
    for (std::size_t r = 0; r < other.runs_.size(); ++r) {
        const Run& src = other.runs_[r];
        if (src.coeffs.empty())
            continue;
        const std::uint64_t lo = src.offset + shift_q;
        Run& dst = run_for(r + shift_t, lo, lo + src.coeffs.size());
        const std::size_t base = lo - dst.offset;
        if (c == 1) {
            for (std::size_t i = 0; i < src.coeffs.size(); ++i)
                if (src.coeffs[i] != 0)
                    dst.coeffs[base + i] += src.coeffs[i];
        } else {
            for (std::size_t i = 0; i < src.coeffs.size(); ++i)
                if (src.coeffs[i] != 0)
                    dst.coeffs[base + i] += c * src.coeffs[i];
        }
    }
}

BigInt BivariatePolynomial::coefficient(std::uint64_t q, std::uint64_t t) const
{
    if (t >= runs_.size())
        return 0;
    const Run& run = runs_[t];
    if (q < run.offset || q >= run.offset + run.coeffs.size())
        return 0;
    return run.coeffs[q - run.offset];
}

std::vector<BivariatePolynomial::Term> BivariatePolynomial::terms() const
{
    std::vector<Term> out;
    for (std::size_t r = 0; r < runs_.size(); ++r)
        for (std::size_t i = 0; i < runs_[r].coeffs.size(); ++i)
            if (runs_[r].coeffs[i] != 0)
                out.push_back({runs_[r].offset + i, r, runs_[r].coeffs[i]});
    return out;
}

std::size_t BivariatePolynomial::term_count() const
{
    std::size_t n = 0;
    for (const auto& run : runs_)
        for (const auto& c : run.coeffs)
            n += (c != 0);
    return n;
}

BigInt BivariatePolynomial::total() const
{
    BigInt sum = 0;
    for (const auto& run : runs_)
        for (const auto& c : run.coeffs)
            sum += c;
    return sum;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other)
{
    add_shifted(other, 0, 0, 1);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    const bool a_small = a.term_count() <= b.term_count();
    const BivariatePolynomial& small = a_small ? a : b;
    const BivariatePolynomial& large = a_small ? b : a;
    BivariatePolynomial out;
    for (const auto& term : small.terms())
        out.add_shifted(large, term.q, term.t, term.coeff);
    return out;
}

bool BivariatePolynomial::operator==(const BivariatePolynomial& other) const
{
    const auto x = terms(), y = other.terms();
    return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](const Term& u, const Term& v) {
        return u.q == v.q && u.t == v.t && u.coeff == v.coeff;
    });
}

// ---------------------------------------------------------------------------

SizePolynomial::SizePolynomial(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.size < b.size; });
    for (auto& term : terms) {
        if (!terms_.empty() && terms_.back().size == term.size)
            terms_.back().count += term.count;
        else
            terms_.push_back(std::move(term));
    }
    std::erase_if(terms_, [](const Term& t) { return t.count == 0; });
}

BigInt SizePolynomial::coefficient(std::uint64_t size) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), size,
                               [](const Term& t, std::uint64_t s) { return t.size < s; });
    return it != terms_.end() && it->size == size ? it->count : BigInt(0);
}

BigInt SizePolynomial::total() const
{
    BigInt sum = 0;
    for (const auto& t : terms_)
        sum += t.count;
    return sum;
}

SizePolynomial SizePolynomial::shifted(std::uint64_t c) const
{
    SizePolynomial out = *this;
    for (auto& t : out.terms_)
        t.size += c;
    return out;
}

std::string SizePolynomial::to_string(std::string_view var) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += " + ";
        if (t.size == 0) {
            out += t.count.get_str();
            continue;
        }
        if (t.count != 1)
            out += t.count.get_str() + "*";
        out += var;
        if (t.size > 1)
            out += "^" + std::to_string(t.size);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::uint64_t bead_string_weight(int n, int k, int i)
{
    const std::uint64_t w = static_cast<std::uint64_t>(i + 1) * k +
                            static_cast<std::uint64_t>(n) * i * (i + 1) / 2;
    assert(2 * w == static_cast<std::uint64_t>(i + 1) * (static_cast<std::uint64_t>(i) * n + 2 * k));
    return w;
}

namespace {

// Sum over i < beads of q^{w(k,i)} t^{i+1}: the nonempty strings hanging from pillar k.
BivariatePolynomial pillar_strings(int n, int k, int beads)
{
    BivariatePolynomial s;
    for (int i = 0; i < beads; ++i)
        s.add_term(bead_string_weight(n, k, i), static_cast<std::uint64_t>(i) + 1, 1);
    return s;
}

} // namespace

BivariatePolynomial compute_F(int n, int d)
{
    if (n < 2 || d < 1)
        throw DomainError("compute_F needs n >= 2 and d >= 1");
    // F^n = 1; F^{n-1} = 1 + strings of at most d-1 beads on the last pillar.
    BivariatePolynomial after = BivariatePolynomial::one();
    BivariatePolynomial cur = BivariatePolynomial::one() + pillar_strings(n, n - 1, d - 1);
    for (int k = n - 2; k >= 1; --k) {
        BivariatePolynomial next = cur + pillar_strings(n, k, d) * after;
        after = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SizePolynomial substitute_t(const BivariatePolynomial& f)
{
    std::vector<SizePolynomial::Term> out;
    for (auto& term : f.terms()) {
        const std::uint64_t drop = term.t * (term.t == 0 ? 0 : term.t - 1) / 2;
        if (term.q < drop)
            throw InternalInvariantViolation("negative size after t-substitution: q^" + std::to_string(term.q) +
                                             " t^" + std::to_string(term.t));
        out.push_back({term.q - drop, std::move(term.coeff)});
    }
    return SizePolynomial(std::move(out));
}

SizePolynomial compute_G(int n, int d) { return substitute_t(compute_F(n, d)); }

} // namespace dcore
