#include "binomint/antiderivative.hpp"

#include <cmath>
#include <string>

#include "binomint/error.hpp"
#include "binomint/hypergeom.hpp"
#include "binomint/quadrature.hpp"

namespace binomint {

std::string_view to_string(AntiderivativeMethod m) {
    switch (m) {
        case AntiderivativeMethod::Hypergeometric: return "hyper";
        case AntiderivativeMethod::ClosedFormN2: return "closed";
        case AntiderivativeMethod::Quadrature: return "quad";
    }
    return "unknown";
}

namespace {

void require_unit_interval(double x, double hi) {
    if (!(x >= 0.0 && x <= hi)) {
        throw Error(ErrorKind::DomainError, "x = " + std::to_string(x) + " outside [0, " + std::to_string(hi) + "]");
    }
}

void require_tol(double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorKind::DomainError, "tolerance must lie in (0, 1)");
}

}  // namespace

double integrand(unsigned long n, double x) {
    if (n == 0) throw Error(ErrorKind::DomainError, "n must be positive");
    require_unit_interval(x, 1.0);
    const double nd = static_cast<double>(n);
    const double base = 1.0 - std::pow(x, nd);
    return base <= 0.0 ? 0.0 : std::pow(base, 1.0 / nd);
}

AntiderivativeResult antider_hyper(unsigned long n, double x, double tol) {
    if (n < 2) throw Error(ErrorKind::DomainError, "hypergeometric route needs n >= 2");
    require_unit_interval(x, kMaxHyperX);
    require_tol(tol);
    AntiderivativeResult r{n, x, 0.0, AntiderivativeMethod::Hypergeometric, 0.0};
    if (x == 0.0) return r;
    const auto nn = static_cast<long>(n);
    const HypergeomParams params{Rational(-1, nn), Rational(1, nn), Rational(1) + Rational(1, nn),
                                 std::pow(x, static_cast<double>(n))};
    const SeriesResult s = gauss_2f1(params, tol);
    r.value = x * s.value;
    r.err_est = x * s.truncation_bound;
    return r;
}

AntiderivativeResult antider_closed_n2(double x) {
    require_unit_interval(x, 1.0);
    const double value = 0.5 * (x * std::sqrt(1.0 - x * x) + std::asin(x));
    return {2, x, value, AntiderivativeMethod::ClosedFormN2, 0.0};
}

AntiderivativeResult quadrature_oracle(unsigned long n, double x, double tol) {
    if (n == 0) throw Error(ErrorKind::DomainError, "n must be positive");
    require_unit_interval(x, 1.0);
    require_tol(tol);
    const QuadResult q = adaptive_integrate([n](double t) { return integrand(n, t); }, 0.0, x, tol);
    return {n, x, q.value, AntiderivativeMethod::Quadrature, q.err_est};
}

DerivativeReport derivative_check(unsigned long n, double x, double h, AntiderivativeMethod method) {
    if (!(h > 0.0)) throw Error(ErrorKind::DomainError, "step h must be positive");
    if (!(x - h > 0.0 && x + h < kMaxHyperX)) {
        throw Error(ErrorKind::DomainError, "need 0 < x - h and x + h < 0.95");
    }
    auto eval = [&](double at) {
        switch (method) {
            case AntiderivativeMethod::Hypergeometric: return antider_hyper(n, at).value;
            case AntiderivativeMethod::ClosedFormN2:
                if (n != 2) throw Error(ErrorKind::DomainError, "closed form exists only for n = 2");
                return antider_closed_n2(at).value;
            case AntiderivativeMethod::Quadrature: return quadrature_oracle(n, at, 1e-14).value;
        }
        throw Error(ErrorKind::DomainError, "unknown method");
    };
    DerivativeReport rep;
    rep.fd_derivative = (eval(x + h) - eval(x - h)) / (2.0 * h);
    rep.integrand_value = integrand(n, x);
    rep.abs_err = std::abs(rep.fd_derivative - rep.integrand_value);
    return rep;
}

}  // namespace binomint
