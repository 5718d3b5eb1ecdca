#pragma once

#include <string>

#include <json.hpp>

#include "binomint/binomial.hpp"
#include "binomint/chebyshev.hpp"

namespace binomint {

enum class CaseTag { Case1, Case2, Case3 };

std::string_view to_string(CaseTag tag);

/// Which quantity the new variable's m-th power equals.
enum class SubstitutionKind {
    PowerOfX,            ///< t^m = x
    Binomial,            ///< t^m = alpha + beta x^b
    ReciprocalBinomial,  ///< t^m = alpha x^-b + beta
};

/// Maps an x-interval onto a t-interval. t_lo = t(x_lo), t_hi = t(x_hi), so
/// t_lo > t_hi when the substitution is decreasing.
struct DomainMap {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;

    friend bool operator==(const DomainMap&, const DomainMap&) = default;
};

/// A rationalizing substitution together with the exact integrand it
/// produces: integrand(x(t)) * x'(t) == transformed(t).
struct SubstitutionCertificate {
    CaseTag case_tag = CaseTag::Case1;
    unsigned long m = 1;
    SubstitutionKind kind = SubstitutionKind::PowerOfX;
    std::string forward_map;
    RationalFunction transformed;
    std::string jacobian_note;
    DomainMap domain;

    friend bool operator==(const SubstitutionCertificate&, const SubstitutionCertificate&) = default;
};

/// Largest exponent denominator accepted by rationalize.
inline constexpr long kMaxExponentDenominator = 12;
/// Largest |integer power| expanded while building the certificate.
inline constexpr long kMaxExpansionPower = 256;

/// Builds the certificate for the first applicable case (Case1 > Case2 > Case3).
/// Throws NotElementary, ExponentTooComplex, DegenerateIntegrand (Case3 with
/// alpha = 0) or DomainError (no interval where the integrand is real).
SubstitutionCertificate rationalize(const DifferentialBinomial& db, const ChebyshevClass& cls);

/// x(t) and dx/dt for the certificate's substitution.
double substitution_x(const DifferentialBinomial& db, const SubstitutionCertificate& cert, double t);
double substitution_dxdt(const DifferentialBinomial& db, const SubstitutionCertificate& cert, double t);
/// t(x), the forward map.
double substitution_t(const DifferentialBinomial& db, const SubstitutionCertificate& cert, double x);

struct CertificateReport {
    double max_rel_err = 0.0;
    bool pass = false;
    unsigned long samples = 0;
};

inline constexpr double kCertificateTolerance = 1e-10;

/// Compares transformed(t) with integrand(x(t)) * x'(t) on an even grid over
/// the t-domain shrunk 1% inward at both ends.
CertificateReport check_certificate(const DifferentialBinomial& db, const SubstitutionCertificate& cert,
                                    unsigned long samples);

/// Coefficients are written as "p/q" strings; doubles use shortest
/// round-trip form, so to_json/from_json round-trips bit-exactly.
nlohmann::json certificate_to_json(const SubstitutionCertificate& cert);
SubstitutionCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace binomint
