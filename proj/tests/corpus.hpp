#pragma once

// Integrand corpus shared by the rationalizer unit tests and the acceptance
// suite: a, b in {±1/2, 1, 3/2, 2, 3}, c in {±1/2, ±1/3, 1, 2},
// alpha, beta in {±1, 2}, kept when elementary and real on some x-interval.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "binomint/chebyshev.hpp"
#include "binomint/quadrature.hpp"
#include "binomint/rationalizer.hpp"

namespace corpus {

struct Entry {
    std::string key;  // canonical text, unique
    binomint::DifferentialBinomial db;
    binomint::ChebyshevClass cls;
    binomint::SubstitutionCertificate cert;
};

inline std::vector<Entry> elementary_corpus() {
    using binomint::Rational;
    const std::vector<Rational> ab = {Rational(1, 2), Rational(-1, 2), Rational(1), Rational(3, 2), Rational(2),
                                      Rational(3)};
    const std::vector<Rational> cs = {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3), Rational(1),
                                      Rational(2)};
    const std::vector<Rational> coeffs = {Rational(1), Rational(-1), Rational(2)};
    std::map<std::string, Entry> unique;
    for (const auto& a : ab) {
        for (const auto& b : ab) {
            for (const auto& c : cs) {
                for (const auto& alpha : coeffs) {
                    for (const auto& beta : coeffs) {
                        const auto db = binomint::make_binomial(a, b, c, alpha, beta);
                        const auto cls = binomint::classify(db);
                        if (!cls.elementary) continue;
                        try {
                            auto cert = binomint::rationalize(db, cls);
                            const std::string key = binomint::format_integrand(db);
                            unique.emplace(key, Entry{key, db, cls, std::move(cert)});
                        } catch (const binomint::Error& e) {
                            // Only integrands with no real interval are dropped.
                            if (e.kind() != binomint::ErrorKind::DomainError) throw;
                        }
                    }
                }
            }
        }
    }
    std::vector<Entry> out;
    for (auto& [k, v] : unique) out.push_back(std::move(v));
    return out;
}

struct ChangeOfVariables {
    double max_rel_err = 0.0;
};

/// Integrates the transformed integrand over [t(x0), t(x1)] and the
/// original over [x0, x1] for `count` random sub-intervals of the domain.
inline ChangeOfVariables change_of_variables(const Entry& e, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double lo = e.cert.domain.x_lo;
    const double hi = e.cert.domain.x_hi;
    std::uniform_real_distribution<double> xs(lo, hi);
    ChangeOfVariables out;
    for (int i = 0; i < count; ++i) {
        double x0 = xs(rng);
        double x1 = xs(rng);
        if (x0 > x1) std::swap(x0, x1);
        if (x1 - x0 < 1e-3 * (hi - lo)) x1 = std::min(hi, x0 + 0.1 * (hi - lo));
        const double t0 = binomint::substitution_t(e.db, e.cert, x0);
        const double t1 = binomint::substitution_t(e.db, e.cert, x1);
        const auto original = binomint::adaptive_integrate(
            [&](double x) { return binomint::eval_integrand(e.db, x); }, x0, x1, 0.0, 1e-13);
        const auto transformed =
            binomint::adaptive_integrate([&](double t) { return e.cert.transformed.eval(t); }, t0, t1, 0.0, 1e-13);
        const double rel = std::abs(original.value - transformed.value) /
                           std::max(std::abs(original.value), std::numeric_limits<double>::min());
        out.max_rel_err = std::max(out.max_rel_err, rel);
    }
    return out;
}

}  // namespace corpus
