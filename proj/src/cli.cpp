#include "binomint/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "binomint/antiderivative.hpp"
#include "binomint/binomial.hpp"
#include "binomint/chebyshev.hpp"
#include "binomint/fermat.hpp"
#include "binomint/hypergeom.hpp"
#include "binomint/rationalizer.hpp"

namespace binomint::cli {

using nlohmann::json;

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

constexpr double kDefaultSeriesTol = 1e-15;
constexpr double kDefaultQuadTol = 1e-12;
constexpr unsigned long kCertificateSamples = 100;

/// A real rounded to 15 significant digits, as a JSON number.
json json_real(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::strtod(format_real(v).c_str(), nullptr);
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return kSyntaxError;
        case ErrorKind::Nonconvergence: return kNonconvergence;
        default: return kDomainError;
    }
}

struct Globals {
    bool as_json = false;
    std::optional<double> tol;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string yes_no(const std::optional<BigInt>& w) { return w ? "yes, witness " + w->str() : "no"; }

json binomial_json(const DifferentialBinomial& db) {
    return {{"integrand", format_integrand(db)}, {"a", db.a.str()},         {"b", db.b.str()},
            {"c", db.c.str()},                   {"alpha", db.alpha.str()}, {"beta", db.beta.str()}};
}

std::string binomial_text(const DifferentialBinomial& db) {
    std::ostringstream os;
    os << "integrand: " << format_integrand(db) << "\n"
       << "a = " << db.a << ", b = " << db.b << ", c = " << db.c << ", alpha = " << db.alpha << ", beta = " << db.beta
       << "\n";
    return os.str();
}

CommandOutcome cmd_classify(const Globals& g, const std::string& expr) {
    const DifferentialBinomial db = parse_integrand(expr);
    const ChebyshevClass cls = classify(db);
    if (g.as_json) {
        json j = binomial_json(db);
        j["class"] = class_to_json(cls);
        j["elementary"] = cls.elementary;
        return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << binomial_text(db) << "case1 (c integer): " << yes_no(cls.case1) << "\n"
       << "case2 ((a+1)/b integer): " << yes_no(cls.case2) << "\n"
       << "case3 ((a+1)/b + c integer): " << yes_no(cls.case3) << "\n"
       << "verdict: " << (cls.elementary ? "elementary" : "non-elementary") << "\n";
    return {kOk, os.str(), ""};
}

CommandOutcome cmd_rationalize(const Globals& g, const std::string& expr) {
    const DifferentialBinomial db = parse_integrand(expr);
    const ChebyshevClass cls = classify(db);
    const SubstitutionCertificate cert = rationalize(db, cls);
    const CertificateReport rep = check_certificate(db, cert, kCertificateSamples);
    const int code = rep.pass ? kOk : kDomainError;
    if (g.as_json) {
        json j = binomial_json(db);
        j["certificate"] = certificate_to_json(cert);
        j["check"] = {{"samples", rep.samples}, {"max_rel_err", json_real(rep.max_rel_err)}, {"pass", rep.pass}};
        return {code, dump(j), ""};
    }
    std::ostringstream os;
    os << binomial_text(db) << "case: " << to_string(cert.case_tag) << "\n"
       << "substitution: " << cert.forward_map << "\n"
       << "derivation: " << cert.jacobian_note << "\n"
       << "transformed: " << cert.transformed.str() << "\n"
       << "domain: x in [" << format_real(cert.domain.x_lo) << ", " << format_real(cert.domain.x_hi) << "] -> t in ["
       << format_real(cert.domain.t_lo) << ", " << format_real(cert.domain.t_hi) << "]\n"
       << "check: " << rep.samples << " samples, max relative error " << format_real(rep.max_rel_err) << ", "
       << (rep.pass ? "pass" : "FAIL") << "\n";
    return {code, os.str(), ""};
}

CommandOutcome cmd_hyper(const Globals& g, const std::string& p, const std::string& q, const std::string& r, double z) {
    const HypergeomParams params{Rational::from_string(p), Rational::from_string(q), Rational::from_string(r), z};
    const SeriesResult s = gauss_2f1(params, g.tol.value_or(kDefaultSeriesTol));
    if (g.as_json) {
        json j = {{"p", params.p.str()},
                  {"q", params.q.str()},
                  {"r", params.r.str()},
                  {"z", json_real(z)},
                  {"value", json_real(s.value)},
                  {"terms_used", s.terms_used},
                  {"truncation_bound", json_real(s.truncation_bound)}};
        return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << "2F1(" << params.p << ", " << params.q << "; " << params.r << "; " << format_real(z)
       << ") = " << format_real(s.value) << "\n"
       << "terms used: " << s.terms_used << "\n"
       << "truncation bound: " << format_real(s.truncation_bound) << "\n";
    return {kOk, os.str(), ""};
}

CommandOutcome cmd_integrate(const Globals& g, unsigned long n, double x, const std::string& method) {
    if (n < 2) throw Error(ErrorKind::DomainError, "integrate needs n >= 2");
    std::vector<AntiderivativeResult> results;
    const bool all = method == "all";
    if (method == "hyper" || (all && x <= kMaxHyperX)) {
        results.push_back(antider_hyper(n, x, g.tol.value_or(kDefaultSeriesTol)));
    }
    if (method == "closed" || (all && n == 2)) {
        if (n != 2) throw Error(ErrorKind::DomainError, "no elementary closed form for n = " + std::to_string(n));
        results.push_back(antider_closed_n2(x));
    }
    if (method == "quad" || all) results.push_back(quadrature_oracle(n, x, g.tol.value_or(kDefaultQuadTol)));

    double discrepancy = 0.0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (std::size_t k = i + 1; k < results.size(); ++k) {
            discrepancy = std::max(discrepancy, std::abs(results[i].value - results[k].value));
        }
    }

    if (g.as_json) {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"method", to_string(r.method)}, {"value", json_real(r.value)}, {"err_est", json_real(r.err_est)}});
        }
        json j = {{"n", n}, {"x", json_real(x)}, {"results", arr}};
        if (all) j["max_discrepancy"] = json_real(discrepancy);
        return {kOk, dump(j), ""};
    }
    std::ostringstream os;
    os << "I(x) = integral_0^x (1 - t^" << n << ")^(1/" << n << ") dt at x = " << format_real(x) << "\n";
    for (const auto& r : results) {
        os << to_string(r.method) << ": " << format_real(r.value) << " (err_est " << format_real(r.err_est) << ")\n";
    }
    if (all) os << "max pairwise discrepancy: " << format_real(discrepancy) << "\n";
    return {kOk, os.str(), ""};
}

CommandOutcome cmd_flt_scan(const Globals& g, unsigned long n, unsigned long z_max, unsigned workers) {
    const auto triples = search_triples(n, z_max, workers);
    if (g.as_json) {
        json arr = json::array();
        for (const auto& t : triples) {
            json row = triple_to_json(t);
            const NormalizedPoint p = normalize(t);
            row["x"] = p.x.str();
            row["y"] = p.y.str();
            arr.push_back(std::move(row));
        }
        return {kOk, dump({{"n", n}, {"z_max", z_max}, {"count", triples.size()}, {"triples", arr}}), ""};
    }
    std::ostringstream os;
    os << "X\tY\tZ\tx\ty\n";
    for (const auto& t : triples) {
        const NormalizedPoint p = normalize(t);
        os << t.X() << '\t' << t.Y() << '\t' << t.Z() << '\t' << p.x << '\t' << p.y << '\n';
    }
    os << "# " << triples.size() << " triple(s) with Z <= " << z_max << " for n = " << n << "\n";
    return {kOk, os.str(), ""};
}

CommandOutcome cmd_report(const Globals& g, unsigned long n_lo, unsigned long n_hi) {
    const auto rows = exceptionality_report(n_lo, n_hi);
    if (g.as_json) return {kOk, dump(report_to_json(rows)), ""};
    return {kOk, report_to_tsv(rows), ""};
}

CommandOutcome error_outcome(const Globals& g, int code, std::string_view kind, const std::string& message,
                             std::optional<std::size_t> position) {
    if (g.as_json) {
        json j = {{"error", kind}, {"message", message}};
        if (position) j["position"] = *position;
        return {code, dump(j), ""};
    }
    return {code, "", "error: " + message + "\n"};
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
    Globals g;
    CLI::App app{"Differential binomial integrability and the Fermat-curve antiderivative", "binomint"};
    app.require_subcommand(1);
    app.add_flag("--json", g.as_json, "Structured JSON output");
    double tol = 0.0;
    auto* tol_opt = app.add_option("--tol", tol, "Tolerance for series and quadrature")->check(CLI::Range(0.0, 1.0));

    std::string expr;
    auto* classify_cmd = app.add_subcommand("classify", "Chebyshev integrability class of an integrand");
    classify_cmd->add_option("expr", expr, "Integrand such as \"(1 - x^2)^(1/2)\"")->required();

    auto* rationalize_cmd = app.add_subcommand("rationalize", "Rationalizing substitution certificate");
    rationalize_cmd->add_option("expr", expr, "Integrand")->required();

    std::string hp, hq, hr;
    double hz = 0.0;
    auto* hyper_cmd = app.add_subcommand("hyper", "Gauss hypergeometric function 2F1(p, q; r; z)");
    hyper_cmd->add_option("p", hp)->required();
    hyper_cmd->add_option("q", hq)->required();
    hyper_cmd->add_option("r", hr)->required();
    hyper_cmd->add_option("z", hz)->required();

    unsigned long in = 0;
    double ix = 0.0;
    std::string method = "all";
    auto* integrate_cmd = app.add_subcommand("integrate", "I(x) = integral_0^x (1 - t^n)^(1/n) dt");
    integrate_cmd->add_option("n", in)->required();
    integrate_cmd->add_option("x", ix)->required();
    integrate_cmd->add_option("--method", method)->check(CLI::IsMember({"hyper", "closed", "quad", "all"}));

    unsigned long sn = 0, z_max = 0;
    unsigned workers = 1;
    auto* scan_cmd = app.add_subcommand("flt-scan", "Exhaustive search for X^n + Y^n = Z^n with Z <= z_max");
    scan_cmd->add_option("n", sn)->required();
    scan_cmd->add_option("z_max", z_max)->required();
    scan_cmd->add_option("--workers", workers, "Threads splitting the Z range")->check(CLI::Range(1U, 64U));

    unsigned long n_lo = 0, n_hi = 0;
    auto* report_cmd = app.add_subcommand("report", "Chebyshev class of (1 - x^n)^(1/n) for n in [n_lo, n_hi]");
    report_cmd->add_option("n_lo", n_lo)->required();
    report_cmd->add_option("n_hi", n_hi)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        if (code == 0) return {kOk, out.str(), err.str()};
        return error_outcome(g, kSyntaxError, "usage-error", e.what(), std::nullopt);
    }
    if (*tol_opt) g.tol = tol;

    try {
        if (*classify_cmd) return cmd_classify(g, expr);
        if (*rationalize_cmd) return cmd_rationalize(g, expr);
        if (*hyper_cmd) return cmd_hyper(g, hp, hq, hr, hz);
        if (*integrate_cmd) return cmd_integrate(g, in, ix, method);
        if (*scan_cmd) return cmd_flt_scan(g, sn, z_max, workers);
        if (*report_cmd) return cmd_report(g, n_lo, n_hi);
    } catch (const Error& e) {
        return error_outcome(g, exit_code_for(e.kind()), to_string(e.kind()), e.what(), e.position());
    } catch (const std::exception& e) {
        return error_outcome(g, kDomainError, "invalid-input", e.what(), std::nullopt);
    }
    return error_outcome(g, kSyntaxError, "usage-error", "no subcommand", std::nullopt);
}

}  // namespace binomint::cli
