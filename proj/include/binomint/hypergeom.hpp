#pragma once

#include <cstddef>

#include "binomint/exact.hpp"

namespace binomint {

/// Parameters of the Gauss function 2F1(p, q; r; z).
struct HypergeomParams {
    Rational p;
    Rational q;
    Rational r;
    double z = 0.0;
};

struct SeriesResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    /// Estimated bound on |value - true value| from the discarded tail
    /// plus summation rounding.
    double truncation_bound = 0.0;
};

enum class SeriesMode {
    /// Negative z goes through the Pfaff transformation first.
    Auto,
    /// Sum the defining series at z as given.
    Direct,
};

/// Largest |z| accepted for the series argument actually summed.
inline constexpr double kMaxSeriesArgument = 0.95;
inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

/// Evaluates 2F1 by its defining series with the term-ratio recurrence.
/// Summation stops after three consecutive terms below tol * |partial sum|;
/// terminating series (p or q a non-positive integer) are summed in full.
///
/// Throws PoleError when r is 0 or a negative integer, DivergenceError when
/// |z| >= 1 or the summed argument exceeds kMaxSeriesArgument, and
/// Nonconvergence when kMaxSeriesTerms is reached.
SeriesResult gauss_2f1(const HypergeomParams& params, double tol, SeriesMode mode = SeriesMode::Auto);

}  // namespace binomint
