#pragma once

#include <cstddef>
#include <functional>

namespace binomint {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    std::size_t intervals = 0;
};

inline constexpr std::size_t kMaxQuadIntervals = 200'000;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature. The interval with the
/// largest |K15 - G7| is bisected until the summed estimate is at most
/// max(abs_tol, rel_tol * |value|). Works for a > b (returns the signed
/// integral). Throws Nonconvergence when the interval cap is hit.
QuadResult adaptive_integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                              double rel_tol = 0.0, std::size_t max_intervals = kMaxQuadIntervals);

}  // namespace binomint
