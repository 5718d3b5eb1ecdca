#include "binomint/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace binomint {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// -k when x is a non-positive integer k, else empty.
std::optional<long> nonpositive_integer(const Rational& x) {
    const auto i = x.as_integer();
    if (!i || i->sign() > 0) return std::nullopt;
    return -i->to_long();
}

double term_ratio(double p, double q, double r, double z, double k) {
    return std::abs((p + k) * (q + k) * z / ((r + k) * (k + 1.0)));
}

SeriesResult sum_series(const Rational& pr, const Rational& qr, const Rational& rr, double z, double tol) {
    const double p = pr.to_double();
    const double q = qr.to_double();
    const double r = rr.to_double();

    std::optional<long> last;
    if (auto np = nonpositive_integer(pr)) last = *np;
    if (auto nq = nonpositive_integer(qr)) last = last ? std::min(*last, *nq) : *nq;

    double term = 1.0;
    double sum = 1.0;
    double abs_sum = 1.0;
    std::size_t k = 0;

    if (last) {
        for (long j = 0; j < *last; ++j) {
            const double kd = static_cast<double>(j);
            term *= (p + kd) * (q + kd) * z / ((r + kd) * (kd + 1.0));
            sum += term;
            abs_sum += std::abs(term);
        }
        return {sum, static_cast<std::size_t>(*last) + 1, 8.0 * kEps * abs_sum};
    }

    int small_run = 0;
    while (true) {
        if (k + 1 >= kMaxSeriesTerms) {
            throw Error(ErrorKind::Nonconvergence,
                        "2F1 series did not converge within " + std::to_string(kMaxSeriesTerms) + " terms");
        }
        const double kd = static_cast<double>(k);
        term *= (p + kd) * (q + kd) * z / ((r + kd) * (kd + 1.0));
        ++k;
        sum += term;
        abs_sum += std::abs(term);
        small_run = std::abs(term) <= tol * std::abs(sum) ? small_run + 1 : 0;
        if (small_run < 3) continue;

        // Bound the remaining ratios over a window; they tend to |z|.
        double rho = std::abs(z);
        for (std::size_t j = k; j < k + 64; ++j) rho = std::max(rho, term_ratio(p, q, r, z, static_cast<double>(j)));
        if (rho >= 1.0) continue;
        const double tail = std::abs(term) * rho / (1.0 - rho);
        return {sum, k + 1, tail + 8.0 * kEps * abs_sum};
    }
}

}  // namespace

SeriesResult gauss_2f1(const HypergeomParams& params, double tol, SeriesMode mode) {
    if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorKind::DomainError, "tolerance must lie in (0, 1)");
    if (nonpositive_integer(params.r)) {
        throw Error(ErrorKind::PoleError, "r = " + params.r.str() + " is a pole of the 2F1 series");
    }
    const double z = params.z;
    if (!std::isfinite(z) || std::abs(z) >= 1.0) {
        throw Error(ErrorKind::DivergenceError, "2F1 series diverges for |z| >= 1");
    }
    if (z == 0.0) return {1.0, 1, 0.0};

    if (mode == SeriesMode::Auto && z < 0.0) {
        // Pfaff: F(p,q;r;z) = (1-z)^-p F(p, r-q; r; z/(z-1)), argument in (0, 1/2).
        const double w = z / (z - 1.0);
        const double prefactor = std::pow(1.0 - z, -params.p.to_double());
        SeriesResult s = sum_series(params.p, params.r - params.q, params.r, w, tol);
        s.value *= prefactor;
        s.truncation_bound = s.truncation_bound * prefactor + 4.0 * kEps * std::abs(s.value);
        return s;
    }

    if (std::abs(z) > kMaxSeriesArgument) {
        throw Error(ErrorKind::DivergenceError, "series argument outside the fast-convergence region |z| <= 0.95");
    }
    return sum_series(params.p, params.q, params.r, z, tol);
}

}  // namespace binomint
