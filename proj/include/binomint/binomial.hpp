#pragma once

#include <string>
#include <string_view>

#include "binomint/exact.hpp"

namespace binomint {

/// The integrand x^a (alpha + beta x^b)^c. Instances built through
/// make_binomial always have b > 0 and beta != 0.
struct DifferentialBinomial {
    Rational a;
    Rational b;
    Rational c;
    Rational alpha;
    Rational beta;

    friend bool operator==(const DifferentialBinomial&, const DifferentialBinomial&) = default;
};

/// Validates and canonicalizes. A negative inner exponent is flipped with
/// x^a(alpha + beta x^b)^c = x^(a+bc) (beta + alpha x^-b)^c.
DifferentialBinomial make_binomial(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& alpha, const Rational& beta);

/// Real principal power base^e. Negative bases are allowed only when the
/// exponent's reduced denominator is odd (real odd root).
double real_power(double base, const Rational& e);

/// x^a (alpha + beta x^b)^c for x > 0 (x = 0 allowed when a >= 0).
double eval_integrand(const DifferentialBinomial& db, double x);

/// Parses e.g. "x^(1/2)*(1 + 2*x^3)^(-1/3)". Whitespace is ignored.
DifferentialBinomial parse_integrand(std::string_view text);

/// Canonical text form accepted by parse_integrand.
std::string format_integrand(const DifferentialBinomial& db);

}  // namespace binomint
