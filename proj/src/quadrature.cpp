#include "binomint/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "binomint/error.hpp"

namespace binomint {

namespace {

// Kronrod abscissae, descending; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(mid);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    double kabs = std::abs(kron);
    for (std::size_t i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double f1 = f(mid - dx);
        const double f2 = f(mid + dx);
        kron += kWgk[i] * (f1 + f2);
        kabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
    }
    const double value = kron * half;
    double err = std::abs((kron - gauss) * half);
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * kabs * std::abs(half));
    return {lo, hi, value, err};
}

}  // namespace

QuadResult adaptive_integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                              double rel_tol, std::size_t max_intervals) {
    if (a == b) return {0.0, 0.0, 0};
    if (a > b) {
        QuadResult r = adaptive_integrate(f, b, a, abs_tol, rel_tol, max_intervals);
        r.value = -r.value;
        return r;
    }
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    double total = first.value;
    double total_err = first.err;
    heap.push(first);

    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (heap.size() >= max_intervals) {
            throw Error(ErrorKind::Nonconvergence,
                        "adaptive quadrature hit the cap of " + std::to_string(max_intervals) + " intervals");
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            throw Error(ErrorKind::Nonconvergence, "adaptive quadrature exhausted floating-point resolution");
        }
        const Segment left = gk15(f, worst.lo, mid);
        const Segment right = gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed drift from the incremental updates.
    double value = 0.0;
    double err = 0.0;
    const std::size_t count = heap.size();
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    return {value, err, count};
}

}  // namespace binomint
