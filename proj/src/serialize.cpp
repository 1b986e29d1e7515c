#include "dcore/serialize.hpp"

#include "dcore/errors.hpp"

namespace dcore::json_io {

namespace {

BigInt parse_bigint(const std::string& s)
{
    BigInt v;
    if (v.set_str(s, 10) != 0)
        throw DomainError("not an integer: '" + s + "'");
    return v;
}

FitKind parse_kind(const std::string& s)
{
    if (s == "fixed_d")
        return FitKind::fixed_d;
    if (s == "fixed_n")
        return FitKind::fixed_n;
    if (s == "bivariate")
        return FitKind::bivariate;
    throw DomainError("unknown fit kind '" + s + "'");
}

} // namespace

json size_polynomial(int n, int d, const SizePolynomial& g)
{
    json coeffs = json::array();
    for (const auto& t : g.terms())
        coeffs.push_back(json::array({t.size, to_string(t.count)}));
    return {{"n", n}, {"d", d}, {"coeffs", coeffs}};
}

SizePolynomial parse_size_polynomial(const json& j)
{
    std::vector<SizePolynomial::Term> terms;
    for (const auto& e : j.at("coeffs"))
        terms.push_back({e.at(0).get<std::uint64_t>(), parse_bigint(e.at(1).get<std::string>())});
    return SizePolynomial(std::move(terms));
}

json radical(const Radical& r)
{
    return {{"coeff", to_string(r.coefficient())}, {"radicand", to_string(r.radicand())}};
}

json moment_report(const MomentReport& r)
{
    json pre = json::array();
    for (const auto& m : r.premoments)
        pre.push_back(to_string(m));
    json std_moments = json::array();
    for (std::size_t k = 3; k < r.standardized.size(); ++k) {
        json e = radical(r.standardized[k]);
        e["k"] = k;
        std_moments.push_back(e);
    }
    json out = {{"n", r.n},
                {"d", r.d},
                {"count", r.premoments.empty() ? "0" : to_string(r.premoments[0])},
                {"premoments", pre},
                {"mean", to_string(r.mean)},
                {"variance", to_string(r.variance)},
                {"standardized", std_moments}};
    if (r.standardized.empty() && r.premoments.size() > 3)
        out["degenerate"] = true;
    return out;
}

MomentReport parse_moment_report(const json& j)
{
    MomentReport r;
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    for (const auto& m : j.at("premoments"))
        r.premoments.push_back(parse_bigint(m.get<std::string>()));
    r.mean = parse_rational(j.at("mean").get<std::string>());
    r.variance = parse_rational(j.at("variance").get<std::string>());
    const auto& st = j.at("standardized");
    if (!st.empty()) {
        // k = 0, 1, 2 are fixed by definition.
        r.standardized = {Radical(1), Radical(0), Radical(1)};
        for (const auto& e : st)
            r.standardized.emplace_back(parse_rational(e.at("coeff").get<std::string>()),
                                        parse_rational(e.at("radicand").get<std::string>()));
    }
    if (!r.premoments.empty()) {
        const BigInt& N = r.premoments[0];
        for (const auto& m : r.premoments)
            r.straight.push_back(make_rational(m, N));
    }
    return r;
}

json polynomial(const Polynomial& p)
{
    json out = json::array();
    for (const auto& c : p.coefficients())
        out.push_back(to_string(c));
    return out;
}

Polynomial parse_polynomial(const json& j)
{
    std::vector<Rational> v;
    for (const auto& c : j)
        v.push_back(parse_rational(c.get<std::string>()));
    return Polynomial(std::move(v));
}

json rational_function(const RationalFunction& f)
{
    return {{"num", polynomial(f.numerator())}, {"den", polynomial(f.denominator())}};
}

RationalFunction parse_rational_function(const json& j)
{
    return RationalFunction(parse_polynomial(j.at("num")), parse_polynomial(j.at("den")));
}

json fit(const AnsatzFit& f)
{
    const bool over_q = f.field == CoeffField::rationals;
    auto coeff_list = [&](const std::vector<RationalFunction>& cs) {
        json out = json::array();
        for (const auto& c : cs) {
            if (over_q)
                out.push_back(to_string(c.numerator().coeff(0)));
            else
                out.push_back(rational_function(c));
        }
        return out;
    };
    json out = {{"kind", to_string(f.kind)},
                {"k", f.k},
                {"degree", f.degree},
                {"coeff_field", over_q ? "Q" : "Q(d)"},
                {"a", coeff_list(f.a)},
                {"b", coeff_list(f.b)},
                {"window", json::array({f.window_lo, f.window_hi})},
                {"verified", f.verified_on}};
    if (f.kind == FitKind::fixed_d)
        out["d"] = f.d;
    if (f.kind == FitKind::fixed_n)
        out["n"] = f.n;
    return out;
}

AnsatzFit parse_fit(const json& j)
{
    AnsatzFit f;
    f.kind = parse_kind(j.at("kind").get<std::string>());
    f.k = j.at("k").get<int>();
    f.degree = j.at("degree").get<int>();
    const std::string field = j.at("coeff_field").get<std::string>();
    if (field != "Q" && field != "Q(d)")
        throw DomainError("unknown coefficient field '" + field + "'");
    f.field = field == "Q" ? CoeffField::rationals : CoeffField::rational_functions;
    auto read = [&](const json& list) {
        std::vector<RationalFunction> out;
        for (const auto& c : list) {
            if (f.field == CoeffField::rationals)
                out.emplace_back(parse_rational(c.get<std::string>()));
            else
                out.push_back(parse_rational_function(c));
        }
        return out;
    };
    f.a = read(j.at("a"));
    f.b = read(j.at("b"));
    f.window_lo = j.at("window").at(0).get<int>();
    f.window_hi = j.at("window").at(1).get<int>();
    f.verified_on = j.at("verified").get<std::vector<int>>();
    if (j.contains("d"))
        f.d = j.at("d").get<int>();
    if (j.contains("n"))
        f.n = j.at("n").get<int>();
    return f;
}

json limit(int k, const Limit& l)
{
    json out = {{"k", k}};
    switch (l.kind) {
    case Limit::Kind::positive_infinity:
        out["infinite"] = "+";
        break;
    case Limit::Kind::negative_infinity:
        out["infinite"] = "-";
        break;
    default: {
        json r = radical(l.value);
        out["coeff"] = r["coeff"];
        out["radicand"] = r["radicand"];
    }
    }
    return out;
}

} // namespace dcore::json_io
