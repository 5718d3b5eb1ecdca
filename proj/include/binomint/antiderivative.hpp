#pragma once

#include <string_view>

namespace binomint {

/// I(x) = integral from 0 to x of (1 - t^n)^(1/n) dt, with I(0) = 0.
enum class AntiderivativeMethod { Hypergeometric, ClosedFormN2, Quadrature };

std::string_view to_string(AntiderivativeMethod m);

struct AntiderivativeResult {
    unsigned long n = 0;
    double x = 0.0;
    double value = 0.0;
    AntiderivativeMethod method = AntiderivativeMethod::Quadrature;
    double err_est = 0.0;
};

/// Largest x accepted by the hypergeometric route.
inline constexpr double kMaxHyperX = 0.95;

/// (1 - x^n)^(1/n) for 0 <= x <= 1.
double integrand(unsigned long n, double x);

/// x * 2F1(-1/n, 1/n; 1 + 1/n; x^n), for n >= 2 and 0 <= x <= 0.95.
AntiderivativeResult antider_hyper(unsigned long n, double x, double tol = 1e-15);

/// (x sqrt(1 - x^2) + arcsin x) / 2, for 0 <= x <= 1.
AntiderivativeResult antider_closed_n2(double x);

/// Adaptive Gauss-Kronrod quadrature of the integrand over [0, x].
AntiderivativeResult quadrature_oracle(unsigned long n, double x, double tol = 1e-12);

struct DerivativeReport {
    double fd_derivative = 0.0;
    double integrand_value = 0.0;
    double abs_err = 0.0;
};

/// Central difference (I(x+h) - I(x-h)) / 2h compared with the integrand.
/// Requires 0 < x - h and x + h < 0.95. ClosedFormN2 requires n = 2.
DerivativeReport derivative_check(unsigned long n, double x, double h,
                                  AntiderivativeMethod method = AntiderivativeMethod::Hypergeometric);

}  // namespace binomint
