// dcore: command-line front end for (n, dn-1)-core partitions with distinct parts.
//
// Exit codes: 0 success, 1 usage or input error, 2 a fit was rejected or a
// verification check failed.

#include "dcore/errors.hpp"
#include "dcore/fitter.hpp"
#include "dcore/genfunc.hpp"
#include "dcore/moments.hpp"
#include "dcore/poset.hpp"
#include "dcore/serialize.hpp"
#include "dcore/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

using namespace dcore;
using json_io::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;

enum class Format { text, json, csv };

struct Options {
    Format format = Format::text;
    int n = 0;
    int d = 0;
    std::string d_text;
    int k = 1;
    int kmax = 0;
    int limit_kmax = 0;
    int s = 0;
    int t = 0;
    int nmax = 0;
    int dmax = 0;
    std::uint64_t budget = kDefaultOracleBudget;
    std::string vary;
    int max_deg = -1;
};

// Signals exit code 2 after output has been written.
struct Rejected {};

void add_format(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}},
            CLI::ignore_case))
        ->default_str("text");
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void csv_header() { std::cout << "n,d,k,value\n"; }

std::string preview(double v) { return decimal_preview(v, 6); }

std::string preview(const Rational& r) { return preview(r.get_d()); }

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw CLI::ValidationError(message);
}

// --- count -----------------------------------------------------------------

void run_count(const Options& opt)
{
    require(opt.n >= 1, "--n must be >= 1");
    if (opt.d_text == "symbolic") {
        const Polynomial p = count_poly(opt.n);
        switch (opt.format) {
        case Format::json:
            print_json({{"n", opt.n}, {"d", "symbolic"}, {"count", json_io::polynomial(p)}});
            break;
        case Format::csv:
            csv_header();
            std::cout << opt.n << ",d,0," << p.to_string("d") << '\n';
            break;
        default:
            std::cout << p.to_string("d") << '\n';
        }
        return;
    }
    int d = 0;
    try {
        d = std::stoi(opt.d_text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--d must be a positive integer or 'symbolic'");
    }
    require(d >= 1, "--d must be >= 1");
    const BigInt N = count(d, opt.n);
    switch (opt.format) {
    case Format::json:
        print_json({{"n", opt.n}, {"d", d}, {"count", N.get_str()}});
        break;
    case Format::csv:
        csv_header();
        std::cout << opt.n << ',' << d << ",0," << N << '\n';
        break;
    default:
        std::cout << N << '\n';
    }
}

// --- gdn -------------------------------------------------------------------

void run_gdn(const Options& opt)
{
    require(opt.n >= 2 && opt.d >= 1, "gdn needs --n >= 2 and --d >= 1");
    const SizePolynomial g = compute_G(opt.n, opt.d);
    switch (opt.format) {
    case Format::json:
        print_json(json_io::size_polynomial(opt.n, opt.d, g));
        break;
    case Format::csv:
        csv_header();
        for (const auto& t : g.terms())
            std::cout << opt.n << ',' << opt.d << ',' << t.size << ',' << t.count << '\n';
        break;
    default:
        std::cout << g.to_string("q") << '\n';
    }
}

// --- moments ---------------------------------------------------------------

void run_moments(const Options& opt)
{
    require(opt.n >= 2 && opt.d >= 1, "moments needs --n >= 2 and --d >= 1");
    require(opt.kmax >= 2, "--kmax must be >= 2");
    MomentReport r;
    bool degenerate = false;
    try {
        r = moment_report(opt.n, opt.d, opt.kmax);
    } catch (const DegenerateDistribution&) {
        degenerate = true;
        const auto pre = premoments(compute_G(opt.n, opt.d), opt.kmax);
        r = to_moments(std::span<const BigInt>(pre.data(), 3), count(opt.d, opt.n));
        r.premoments = pre;
        // zero variance: the size is constant
        r.straight.clear();
        for (const auto& m : pre)
            r.straight.push_back(make_rational(m, pre[0]));
        r.central.resize(pre.size(), Rational(0));
        r.n = opt.n;
        r.d = opt.d;
    }

    switch (opt.format) {
    case Format::json: {
        json j = json_io::moment_report(r);
        if (degenerate)
            j["degenerate"] = true;
        print_json(j);
        break;
    }
    case Format::csv:
        csv_header();
        for (std::size_t k = 0; k < r.premoments.size(); ++k)
            std::cout << r.n << ',' << r.d << ',' << k << ','
                      << to_string(make_rational(r.premoments[k], r.premoments[0])) << '\n';
        break;
    default:
        std::cout << "n = " << r.n << ", d = " << r.d << ", partitions = " << r.premoments[0] << '\n';
        std::cout << "mean     = " << to_string(r.mean) << "  ~ " << preview(r.mean) << '\n';
        std::cout << "variance = " << to_string(r.variance) << "  ~ " << preview(r.variance) << '\n';
        std::cout << "k  pre-moment  straight  central  standardized\n";
        for (std::size_t k = 0; k < r.premoments.size(); ++k) {
            std::cout << k << "  " << r.premoments[k];
            std::cout << "  " << to_string(r.straight[k]) << "  " << to_string(r.central[k]);
            if (k < r.standardized.size())
                std::cout << "  " << r.standardized[k].to_string() << " ~ " << preview(r.standardized[k].to_double());
            else if (k >= 3 && degenerate)
                std::cout << "  degenerate (variance 0)";
            std::cout << '\n';
        }
    }
}

// --- fit -------------------------------------------------------------------

void print_fit_text_nd(const AnsatzFit& fit)
{
    const std::string fixed = fit.kind == FitKind::fixed_d ? std::to_string(fit.d) : "d";
    std::cout << "m_" << fit.k << "(" << fixed << ", n) = A(n) N_" << fixed << "(n) + B(n) N_" << fixed << "(n+1)\n";
    if (fit.field == CoeffField::rationals) {
        std::cout << "A(n) = " << fit.a_polynomial().to_string("n") << '\n';
        std::cout << "B(n) = " << fit.b_polynomial().to_string("n") << '\n';
    } else {
        for (std::size_t j = fit.a.size(); j-- > 0;)
            std::cout << "A[n^" << j << "] = " << fit.a[j].to_string("d") << '\n';
        for (std::size_t j = fit.b.size(); j-- > 0;)
            std::cout << "B[n^" << j << "] = " << fit.b[j].to_string("d") << '\n';
    }
    std::cout << "M_" << fit.k << " = m_" << fit.k << " / N(n) = A(n) + B(n) N(n+1)/N(n)\n";
    std::cout << "degree " << fit.degree << ", window n = " << fit.window_lo << ".." << fit.window_hi << ", verified n =";
    for (int v : fit.verified_on)
        std::cout << ' ' << v;
    std::cout << '\n';
}

void run_fit(const Options& opt)
{
    require(opt.k >= 0, "--k must be >= 0");
    if (opt.vary == "d") {
        require(opt.n >= 2, "fit --vary d needs --n >= 2");
        const AnsatzFit fit = fit_fixed_n(opt.n, opt.k);
        const SymbolicMomentReport sym = symbolic_moments(opt.n, opt.k);
        const int k = opt.k;
        switch (opt.format) {
        case Format::json: {
            json j = json_io::fit(fit);
            j["straight"] = json_io::rational_function(sym.straight[k]);
            j["central"] = json_io::rational_function(sym.central[k]);
            j["mean"] = json_io::rational_function(sym.mean);
            j["variance"] = json_io::rational_function(sym.variance);
            print_json(j);
            break;
        }
        case Format::csv:
            csv_header();
            for (int d = fit.window_lo; d <= fit.verified_on.back(); ++d)
                std::cout << opt.n << ',' << d << ',' << k << ',' << to_string(evaluate_premoment(fit, opt.n, d)) << '\n';
            break;
        default: {
            const std::string at = "(d, " + std::to_string(opt.n) + ")";
            std::cout << "m_" << k << at << " = " << fit.a_polynomial().to_string("d") << '\n';
            std::cout << "M_" << k << at << " = " << sym.straight[k].to_string("d") << '\n';
            std::cout << "M_" << k << "^c" << at << " = " << sym.central[k].to_string("d") << '\n';
            std::cout << "mean" << at << " = " << sym.mean.to_string("d") << '\n';
            std::cout << "variance" << at << " = " << sym.variance.to_string("d") << '\n';
            std::cout << "window d = " << fit.window_lo << ".." << fit.window_hi << ", verified d =";
            for (int v : fit.verified_on)
                std::cout << ' ' << v;
            std::cout << '\n';
        }
        }
        return;
    }

    AnsatzFit fit;
    if (opt.vary == "n") {
        require(opt.d >= 1, "fit --vary n needs --d >= 1");
        fit = fit_fixed_d(opt.d, opt.k, opt.max_deg >= 0 ? std::optional<int>(opt.max_deg) : std::nullopt);
    } else {
        fit = fit_bivariate(opt.k);
    }
    switch (opt.format) {
    case Format::json:
        print_json(json_io::fit(fit));
        break;
    case Format::csv:
        csv_header();
        if (fit.kind == FitKind::fixed_d) {
            for (int n = fit.window_lo; n <= fit.verified_on.back(); ++n)
                std::cout << n << ',' << fit.d << ',' << fit.k << ',' << to_string(evaluate_premoment(fit, n, fit.d)) << '\n';
        } else {
            for (int n = fit.window_lo; n <= fit.verified_on.back(); ++n)
                std::cout << n << ",d," << fit.k << ',' << premoment_in_d(fit, n).to_string("d") << '\n';
        }
        break;
    default:
        print_fit_text_nd(fit);
    }
}

// --- limits ----------------------------------------------------------------

void run_limits(const Options& opt)
{
    require(opt.n >= 2, "limits needs --n >= 2");
    require(opt.limit_kmax >= 1, "--kmax must be >= 1");
    const auto m = premoment_polys(opt.n, std::max(opt.limit_kmax, 2));
    std::vector<Limit> limits;
    for (int k = 1; k <= opt.limit_kmax; ++k)
        limits.push_back(k == 1 ? Limit{} : standardized_limit(m, k));

    switch (opt.format) {
    case Format::json: {
        json list = json::array();
        for (int k = 1; k <= opt.limit_kmax; ++k)
            list.push_back(json_io::limit(k, limits[k - 1]));
        print_json({{"n", opt.n}, {"limits", list}});
        break;
    }
    case Format::csv:
        csv_header();
        for (int k = 1; k <= opt.limit_kmax; ++k)
            std::cout << opt.n << ",inf," << k << ',' << limits[k - 1].to_string() << '\n';
        break;
    default:
        std::cout << "lim_{d->inf} M_k^s(d, " << opt.n << ")\n";
        for (int k = 1; k <= opt.limit_kmax; ++k) {
            const Limit& l = limits[k - 1];
            std::cout << "k=" << k << "  " << l.to_string();
            if (l.is_finite())
                std::cout << "  ~ " << preview(l.value.to_double());
            std::cout << '\n';
        }
    }
}

// --- verify ----------------------------------------------------------------

void run_verify(const Options& opt)
{
    require(opt.nmax >= 2 && opt.dmax >= 1, "verify needs --nmax >= 2 and --dmax >= 1");
    const auto results = verify_grid(opt.nmax, opt.dmax, opt.budget);
    bool ok = true;
    for (const auto& r : results)
        ok = ok && r.passed();

    switch (opt.format) {
    case Format::json: {
        json list = json::array();
        for (const auto& r : results)
            for (const auto& c : r.checks)
                list.push_back({{"n", r.n}, {"d", r.d}, {"check", c.name}, {"status", to_string(c.status)},
                                {"detail", c.detail}});
        print_json({{"status", ok ? "PASS" : "FAIL"}, {"checks", list}});
        break;
    }
    case Format::csv:
        csv_header();
        for (const auto& r : results)
            for (const auto& c : r.checks)
                std::cout << r.n << ',' << r.d << ',' << c.name << ',' << to_string(c.status) << '\n';
        break;
    default:
        for (const auto& r : results) {
            std::cout << "n=" << r.n << " d=" << r.d << ':';
            for (const auto& c : r.checks)
                std::cout << ' ' << c.name << '=' << to_string(c.status);
            std::cout << '\n';
        }
        std::cout << (ok ? "PASS" : "FAIL") << '\n';
    }
    if (!ok)
        throw Rejected{};
}

// --- render ----------------------------------------------------------------

void run_render(const Options& opt)
{
    const SemigroupPoset p = build_poset(opt.s, opt.t);
    const std::string picture = render_poset(p);
    switch (opt.format) {
    case Format::json: {
        json pillars = json::array();
        for (const auto& pl : p.pillars())
            pillars.push_back({{"top", pl.top}, {"height", pl.height}});
        print_json({{"s", opt.s}, {"t", opt.t}, {"labels", p.labels()}, {"pillars", pillars}, {"drawing", picture}});
        break;
    }
    case Format::csv:
        csv_header();
        for (std::size_t i = 0; i < p.labels().size(); ++i)
            std::cout << opt.s << ',' << opt.t << ',' << i << ',' << p.labels()[i] << '\n';
        break;
    default:
        std::cout << picture;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Enumerate (n, dn-1)-core partitions with distinct parts and fit their size moments"};
    app.require_subcommand(1);
    Options opt;

    auto* count_cmd = app.add_subcommand("count", "N_d(n), or its polynomial in d with --d symbolic");
    count_cmd->add_option("--n", opt.n)->required();
    count_cmd->add_option("--d", opt.d_text, "positive integer or 'symbolic'")->required();
    add_format(count_cmd, opt);

    auto* gdn_cmd = app.add_subcommand("gdn", "size generating function G_{d,n}(q)");
    gdn_cmd->add_option("--n", opt.n)->required();
    gdn_cmd->add_option("--d", opt.d)->required();
    add_format(gdn_cmd, opt);

    auto* moments_cmd = app.add_subcommand("moments", "exact moments of the size for fixed n, d");
    moments_cmd->add_option("--n", opt.n)->required();
    moments_cmd->add_option("--d", opt.d)->required();
    moments_cmd->add_option("--kmax", opt.kmax)->default_val(kDefaultMomentCount);
    add_format(moments_cmd, opt);

    auto* fit_cmd = app.add_subcommand("fit", "fit pre-moments to closed forms");
    fit_cmd->add_option("--vary", opt.vary, "d: polynomial in d at fixed n; n: A(n)N_d(n)+B(n)N_d(n+1) at fixed d; both")
        ->required()
        ->check(CLI::IsMember({"d", "n", "both"}));
    fit_cmd->add_option("--k", opt.k)->default_val(1);
    fit_cmd->add_option("--n", opt.n);
    fit_cmd->add_option("--d", opt.d);
    fit_cmd->add_option("--max-deg", opt.max_deg, "largest degree of A, B tried with --vary n (default 2k)");
    add_format(fit_cmd, opt);

    auto* limits_cmd = app.add_subcommand("limits", "lim_{d->inf} of the standardized moments at fixed n");
    limits_cmd->add_option("--n", opt.n)->required();
    limits_cmd->add_option("--kmax", opt.limit_kmax)->default_val(7);
    add_format(limits_cmd, opt);

    auto* verify_cmd = app.add_subcommand("verify", "cross-check enumeration, generating functions and the oracle");
    verify_cmd->add_option("--nmax", opt.nmax)->required();
    verify_cmd->add_option("--dmax", opt.dmax)->required();
    verify_cmd->add_option("--budget", opt.budget, "oracle candidate budget per grid point")
        ->default_val(kDefaultOracleBudget);
    add_format(verify_cmd, opt);

    auto* render_cmd = app.add_subcommand("render", "draw the poset P_{s,t}");
    render_cmd->add_option("--s", opt.s)->required();
    render_cmd->add_option("--t", opt.t)->required();
    add_format(render_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count_cmd->parsed())
            run_count(opt);
        else if (gdn_cmd->parsed())
            run_gdn(opt);
        else if (moments_cmd->parsed())
            run_moments(opt);
        else if (fit_cmd->parsed())
            run_fit(opt);
        else if (limits_cmd->parsed())
            run_limits(opt);
        else if (verify_cmd->parsed())
            run_verify(opt);
        else if (render_cmd->parsed())
            run_render(opt);
    } catch (const Rejected&) {
        return kExitRejected;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const AnsatzRejected& e) {
        std::cerr << "AnsatzRejected: " << e.what() << '\n';
        return kExitRejected;
    } catch (const DegenerateAnsatz& e) {
        std::cerr << "DegenerateAnsatz: " << e.what() << '\n';
        return kExitRejected;
    } catch (const NotCoprime& e) {
        std::cerr << "NotCoprime: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
