#include "binomint/rationalizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace binomint {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::Case3: return "Case3";
    }
    return "unknown";
}

namespace {

std::string_view kind_name(SubstitutionKind k) {
    switch (k) {
        case SubstitutionKind::PowerOfX: return "power-of-x";
        case SubstitutionKind::Binomial: return "binomial";
        case SubstitutionKind::ReciprocalBinomial: return "reciprocal-binomial";
    }
    return "unknown";
}

SubstitutionKind kind_from_name(const std::string& s) {
    if (s == "power-of-x") return SubstitutionKind::PowerOfX;
    if (s == "binomial") return SubstitutionKind::Binomial;
    if (s == "reciprocal-binomial") return SubstitutionKind::ReciprocalBinomial;
    throw Error(ErrorKind::DomainError, "unknown substitution kind '" + s + "'");
}

CaseTag case_from_name(const std::string& s) {
    if (s == "Case1") return CaseTag::Case1;
    if (s == "Case2") return CaseTag::Case2;
    if (s == "Case3") return CaseTag::Case3;
    throw Error(ErrorKind::DomainError, "unknown case tag '" + s + "'");
}

long bounded_power(const BigInt& v, const char* what) {
    if (v.abs() > BigInt(kMaxExpansionPower)) {
        throw Error(ErrorKind::ExponentTooComplex, std::string(what) + " power " + v.str() + " exceeds expansion bound");
    }
    return v.to_long();
}

long small_denominator(const Rational& q, const char* what) {
    if (q.den() > BigInt(kMaxExponentDenominator)) {
        throw Error(ErrorKind::ExponentTooComplex,
                    std::string("denominator of ") + what + " = " + q.str() + " exceeds " +
                        std::to_string(kMaxExponentDenominator));
    }
    return q.den().to_long();
}

/// coef * base^j * t^e as a rational function; negative powers go to the
/// denominator.
RationalFunction assemble(const Rational& coef, const Polynomial& base, long j, long e) {
    Polynomial num(coef);
    Polynomial den(Rational(1));
    if (j >= 0) {
        num = num * base.pow(static_cast<unsigned long>(j));
    } else {
        den = den * base.pow(static_cast<unsigned long>(-j));
    }
    if (e >= 0) {
        num = num * Polynomial::monomial(Rational(1), static_cast<unsigned long>(e));
    } else {
        den = den * Polynomial::monomial(Rational(1), static_cast<unsigned long>(-e));
    }
    return RationalFunction(std::move(num), std::move(den));
}

/// (t^m - shift) / scale
Polynomial shifted_power(unsigned long m, const Rational& shift, const Rational& scale) {
    const Rational inv = scale.inverse();
    return Polynomial::monomial(inv, m) + Polynomial(-shift * inv);
}

/// Open x-interval on which alpha + beta x^b keeps one sign and the
/// integrand is real. Prefers the interval with a positive base.
struct XInterval {
    double lo;
    double hi;  // +inf allowed
};

XInterval real_interval(const DifferentialBinomial& db) {
    const int sa = db.alpha.sign();
    const int sb = db.beta.sign();
    const double inf = std::numeric_limits<double>::infinity();
    const bool odd_root = db.c.den().raw() % 2 != 0;
    double root = 0.0;
    if (sa != 0 && sa != sb) root = std::pow(-db.alpha.to_double() / db.beta.to_double(), 1.0 / db.b.to_double());

    if (sa == 0) {
        if (sb > 0 || odd_root) return {0.0, inf};
    } else if (sa > 0 && sb > 0) {
        return {0.0, inf};
    } else if (sa > 0 && sb < 0) {
        return {0.0, root};
    } else if (sa < 0 && sb > 0) {
        return {root, inf};
    } else if (odd_root) {
        return {0.0, inf};
    }
    throw Error(ErrorKind::DomainError, "integrand " + format_integrand(db) + " has no real interval with x > 0");
}

/// A compact sampling window strictly inside the real interval.
std::pair<double, double> sampling_window(const XInterval& iv) {
    if (iv.lo == 0.0 && std::isinf(iv.hi)) return {0.25, 2.0};
    if (iv.lo == 0.0) return {0.1 * iv.hi, 0.9 * iv.hi};
    return {1.1 * iv.lo, 3.0 * iv.lo};
}

/// "coef*body" with unit coefficients elided.
std::string scaled_term(const Rational& coef, const std::string& body) {
    if (coef == Rational(1)) return body;
    if (coef == Rational(-1)) return "-" + body;
    return coef.str() + "*" + body;
}

/// lead + constant, e.g. "x^(-2) - 1".
std::string two_term_sum(const std::string& lead, const Rational& constant) {
    if (constant.is_zero()) return lead;
    return lead + (constant.sign() < 0 ? " - " : " + ") + constant.abs().str();
}

std::string case_note(CaseTag tag, const DifferentialBinomial& db, unsigned long m, const BigInt& witness) {
    std::ostringstream os;
    switch (tag) {
        case CaseTag::Case1:
            os << "c = " << witness << " is an integer; x = t^" << m << ", dx = " << m << "*t^" << (m - 1)
               << " dt; x^a -> t^(" << (db.a * Rational(static_cast<long>(m))).str() << "), x^b -> t^("
               << (db.b * Rational(static_cast<long>(m))).str() << ")";
            break;
        case CaseTag::Case2:
            os << "(a+1)/b = " << witness << "; u = x^b gives (1/b) u^(" << (witness - BigInt(1)).str()
               << ") (alpha + beta*u)^c du; t^" << m << " = alpha + beta*u, du = (" << m << "/beta) t^" << (m - 1)
               << " dt";
            break;
        case CaseTag::Case3:
            os << "(a+1)/b + c = " << witness << "; v = x^-b gives (-1/b) v^(" << (-witness - BigInt(1)).str()
               << ") (alpha*v + beta)^c dv; t^" << m << " = alpha*v + beta, dv = (" << m << "/alpha) t^" << (m - 1)
               << " dt";
            break;
    }
    return os.str();
}

}  // namespace

SubstitutionCertificate rationalize(const DifferentialBinomial& db, const ChebyshevClass& cls) {
    if (!cls.elementary) {
        throw Error(ErrorKind::NotElementary, "integrand " + format_integrand(db) + " satisfies no Chebyshev condition");
    }
    const long den_a = small_denominator(db.a, "a");
    const long den_b = small_denominator(db.b, "b");
    const long den_c = small_denominator(db.c, "c");

    SubstitutionCertificate cert;

    if (cls.case1) {
        const long s = lcm(BigInt(den_a), BigInt(den_b)).to_long();
        const Rational sr(s);
        const long a_s = bounded_power(*(db.a * sr).as_integer(), "x^a");
        const long b_s = bounded_power(*(db.b * sr).as_integer(), "x^b");
        const long c_int = bounded_power(*cls.case1, "binomial");
        // s * t^(s*a + s - 1) * (alpha + beta t^(s*b))^c
        const Polynomial base = Polynomial(db.alpha) + Polynomial::monomial(db.beta, static_cast<unsigned long>(b_s));
        cert.case_tag = CaseTag::Case1;
        cert.m = static_cast<unsigned long>(s);
        cert.kind = SubstitutionKind::PowerOfX;
        cert.forward_map = "t^" + std::to_string(s) + " = x";
        cert.transformed = assemble(sr, base, c_int, a_s + s - 1);
        cert.jacobian_note = case_note(CaseTag::Case1, db, cert.m, *cls.case1);
    } else if (cls.case2) {
        const long m = den_c;
        const long p = db.c.num().to_long();
        const long k = bounded_power(*cls.case2, "u");
        // (1/b)(m/beta) ((t^m - alpha)/beta)^(k-1) t^(p+m-1)
        cert.case_tag = CaseTag::Case2;
        cert.m = static_cast<unsigned long>(m);
        cert.kind = SubstitutionKind::Binomial;
        cert.forward_map =
            "t^" + std::to_string(m) + " = " + two_term_sum(scaled_term(db.beta, "x^(" + db.b.str() + ")"), db.alpha);
        cert.transformed = assemble(Rational(m) / (db.b * db.beta), shifted_power(cert.m, db.alpha, db.beta), k - 1,
                                    p + m - 1);
        cert.jacobian_note = case_note(CaseTag::Case2, db, cert.m, *cls.case2);
    } else {
        if (db.alpha.is_zero()) {
            throw Error(ErrorKind::DegenerateIntegrand, "reciprocal substitution is undefined for alpha = 0");
        }
        const long m = den_c;
        const long p = db.c.num().to_long();
        const long k = bounded_power(*cls.case3, "v");
        // (-1/b)(m/alpha) ((t^m - beta)/alpha)^(-k-1) t^(p+m-1)
        cert.case_tag = CaseTag::Case3;
        cert.m = static_cast<unsigned long>(m);
        cert.kind = SubstitutionKind::ReciprocalBinomial;
        cert.forward_map =
            "t^" + std::to_string(m) + " = " + two_term_sum(scaled_term(db.alpha, "x^(" + (-db.b).str() + ")"), db.beta);
        cert.transformed = assemble(-Rational(m) / (db.b * db.alpha), shifted_power(cert.m, db.beta, db.alpha), -k - 1,
                                    p + m - 1);
        cert.jacobian_note = case_note(CaseTag::Case3, db, cert.m, *cls.case3);
    }

    const auto [x_lo, x_hi] = sampling_window(real_interval(db));
    cert.domain = {x_lo, x_hi, substitution_t(db, cert, x_lo), substitution_t(db, cert, x_hi)};
    return cert;
}

double substitution_t(const DifferentialBinomial& db, const SubstitutionCertificate& cert, double x) {
    const Rational root(1, static_cast<long>(cert.m));
    switch (cert.kind) {
        case SubstitutionKind::PowerOfX: return real_power(x, root);
        case SubstitutionKind::Binomial:
            return real_power(db.alpha.to_double() + db.beta.to_double() * real_power(x, db.b), root);
        case SubstitutionKind::ReciprocalBinomial:
            return real_power(db.alpha.to_double() * real_power(x, -db.b) + db.beta.to_double(), root);
    }
    throw Error(ErrorKind::DomainError, "unknown substitution kind");
}

double substitution_x(const DifferentialBinomial& db, const SubstitutionCertificate& cert, double t) {
    const double tm = std::pow(t, static_cast<double>(cert.m));
    switch (cert.kind) {
        case SubstitutionKind::PowerOfX: return tm;
        case SubstitutionKind::Binomial:
            return real_power((tm - db.alpha.to_double()) / db.beta.to_double(), db.b.inverse());
        case SubstitutionKind::ReciprocalBinomial:
            return real_power((tm - db.beta.to_double()) / db.alpha.to_double(), -db.b.inverse());
    }
    throw Error(ErrorKind::DomainError, "unknown substitution kind");
}

double substitution_dxdt(const DifferentialBinomial& db, const SubstitutionCertificate& cert, double t) {
    const double md = static_cast<double>(cert.m);
    const double dtm = md * std::pow(t, md - 1.0);  // d(t^m)/dt
    const double tm = std::pow(t, md);
    const Rational inv_b = db.b.inverse();
    switch (cert.kind) {
        case SubstitutionKind::PowerOfX: return dtm;
        case SubstitutionKind::Binomial: {
            const double u = (tm - db.alpha.to_double()) / db.beta.to_double();
            return inv_b.to_double() * real_power(u, inv_b - Rational(1)) * dtm / db.beta.to_double();
        }
        case SubstitutionKind::ReciprocalBinomial: {
            const double v = (tm - db.beta.to_double()) / db.alpha.to_double();
            return -inv_b.to_double() * real_power(v, -inv_b - Rational(1)) * dtm / db.alpha.to_double();
        }
    }
    throw Error(ErrorKind::DomainError, "unknown substitution kind");
}

CertificateReport check_certificate(const DifferentialBinomial& db, const SubstitutionCertificate& cert,
                                    unsigned long samples) {
    if (samples == 0) throw Error(ErrorKind::DomainError, "need at least one sample");
    const double span = cert.domain.t_hi - cert.domain.t_lo;
    const double lo = cert.domain.t_lo + 0.01 * span;
    const double hi = cert.domain.t_hi - 0.01 * span;

    CertificateReport rep;
    rep.samples = samples;
    for (unsigned long i = 0; i < samples; ++i) {
        const double frac = samples == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(samples - 1);
        const double t = lo + frac * (hi - lo);
        const double expected = eval_integrand(db, substitution_x(db, cert, t)) * substitution_dxdt(db, cert, t);
        const double got = cert.transformed.eval(t);
        const double scale = std::max({std::abs(expected), std::abs(got), std::numeric_limits<double>::min()});
        double rel = std::abs(got - expected) / scale;
        if (!std::isfinite(rel)) rel = std::numeric_limits<double>::infinity();
        rep.max_rel_err = std::max(rep.max_rel_err, rel);
    }
    rep.pass = rep.max_rel_err <= kCertificateTolerance;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Polynomial poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

}  // namespace

nlohmann::json certificate_to_json(const SubstitutionCertificate& cert) {
    return nlohmann::json{
        {"case", to_string(cert.case_tag)},
        {"m", cert.m},
        {"kind", kind_name(cert.kind)},
        {"forward_map", cert.forward_map},
        {"transformed",
         {{"numerator", poly_to_json(cert.transformed.numerator())},
          {"denominator", poly_to_json(cert.transformed.denominator())}}},
        {"jacobian_note", cert.jacobian_note},
        {"domain_map",
         {{"x_lo", cert.domain.x_lo}, {"x_hi", cert.domain.x_hi}, {"t_lo", cert.domain.t_lo}, {"t_hi", cert.domain.t_hi}}},
    };
}

SubstitutionCertificate certificate_from_json(const nlohmann::json& j) {
    SubstitutionCertificate cert;
    cert.case_tag = case_from_name(j.at("case").get<std::string>());
    cert.m = j.at("m").get<unsigned long>();
    cert.kind = kind_from_name(j.at("kind").get<std::string>());
    cert.forward_map = j.at("forward_map").get<std::string>();
    cert.transformed = RationalFunction(poly_from_json(j.at("transformed").at("numerator")),
                                        poly_from_json(j.at("transformed").at("denominator")));
    cert.jacobian_note = j.at("jacobian_note").get<std::string>();
    const auto& d = j.at("domain_map");
    cert.domain = {d.at("x_lo").get<double>(), d.at("x_hi").get<double>(), d.at("t_lo").get<double>(),
                   d.at("t_hi").get<double>()};
    return cert;
}

}  // namespace binomint
