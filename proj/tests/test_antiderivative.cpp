#include <doctest.h>

#include <cmath>
#include <numbers>

#include "binomint/antiderivative.hpp"
#include "binomint/error.hpp"
#include "binomint/hypergeom.hpp"

using namespace binomint;

namespace {

// mpmath quad at 30 digits, integral_0^0.5 (1 - t^n)^(1/n) dt
constexpr double kI2Half = 0.478305738745259098229484407962;
constexpr double kI3Half = 0.494661212782474473223721348989;
constexpr double kI5Half = 0.499475568976047283468685820262;
constexpr double kI7Half = 0.499930120561683949689670914265;
constexpr double kI11Half = 0.499998150235591501525036997232;

}  // namespace

TEST_CASE("integrand values") {
    CHECK(integrand(2, 0.6) == doctest::Approx(0.8).epsilon(1e-15));
    for (unsigned long n : {1UL, 2UL, 7UL, 40UL}) {
        CHECK(integrand(n, 0.0) == 1.0);
        CHECK(integrand(n, 1.0) == 0.0);
    }
    CHECK_THROWS_AS(integrand(3, -0.1), Error);
    CHECK_THROWS_AS(integrand(3, 1.1), Error);
}

TEST_CASE("closed form for n = 2") {
    CHECK(antider_closed_n2(0.0).value == 0.0);
    CHECK(std::abs(antider_closed_n2(1.0).value - std::numbers::pi / 4.0) <= 1e-15);
    CHECK(std::abs(antider_closed_n2(0.5).value - kI2Half) <= 1e-15);
    CHECK(antider_closed_n2(0.5).method == AntiderivativeMethod::ClosedFormN2);
    CHECK_THROWS_AS(antider_closed_n2(1.5), Error);
}

TEST_CASE("hypergeometric representation") {
    CHECK(antider_hyper(4, 0.0).value == 0.0);
    CHECK(std::abs(antider_hyper(2, 0.5).value - kI2Half) <= 1e-14);
    CHECK(std::abs(antider_hyper(2, 0.5).value - antider_closed_n2(0.5).value) <= 1e-14);
    CHECK(std::abs(antider_hyper(3, 0.5).value - kI3Half) <= 1e-14);
    CHECK(std::abs(antider_hyper(3, 0.5).value - quadrature_oracle(3, 0.5).value) <= 1e-10);
    CHECK(std::abs(antider_hyper(5, 0.5).value - kI5Half) <= 1e-14);
    CHECK(std::abs(antider_hyper(7, 0.5).value - kI7Half) <= 1e-14);
    CHECK(std::abs(antider_hyper(11, 0.5).value - kI11Half) <= 1e-14);
    CHECK(antider_hyper(5, 0.5).err_est >= 0.0);
    CHECK_THROWS_AS(antider_hyper(1, 0.5), Error);
    CHECK_THROWS_AS(antider_hyper(3, 0.96), Error);
}

TEST_CASE("quadrature oracle") {
    CHECK(std::abs(quadrature_oracle(2, 1.0, 1e-12).value - std::numbers::pi / 4.0) <= 1e-10);
    CHECK(quadrature_oracle(1, 0.5).value == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(quadrature_oracle(6, 0.0).value == 0.0);
    const auto q = quadrature_oracle(3, 0.5, 1e-12);
    CHECK(std::abs(q.value - kI3Half) <= 1e-12);
    CHECK(q.err_est <= 1e-12);
    CHECK(q.method == AntiderivativeMethod::Quadrature);
}

TEST_CASE("three-way agreement on the grid") {
    for (unsigned long n : {2UL, 3UL, 5UL, 7UL, 11UL}) {
        for (int i = 1; i <= 9; ++i) {
            const double x = 0.1 * i;
            const double hyper = antider_hyper(n, x).value;
            const double quad = quadrature_oracle(n, x, 1e-13).value;
            REQUIRE(std::abs(hyper - quad) <= 1e-9);
            if (n == 2) REQUIRE(std::abs(hyper - antider_closed_n2(x).value) <= 1e-11);
        }
    }
}

TEST_CASE("monotone and bounded") {
    for (unsigned long n : {2UL, 3UL, 5UL, 9UL}) {
        double prev = 0.0;
        for (int i = 1; i <= 95; ++i) {
            const double x = i / 100.0;
            const double v = antider_hyper(n, x).value;
            REQUIRE(v > prev);
            REQUIRE(x * integrand(n, x) <= v);
            REQUIRE(v <= x);
            prev = v;
        }
    }
}

TEST_CASE("finite differences recover the integrand") {
    CHECK(derivative_check(2, 0.5, 1e-5).abs_err <= 1e-8);
    CHECK(derivative_check(5, 0.3, 1e-5).abs_err <= 1e-8);
    CHECK(derivative_check(2, 0.5, 1e-5, AntiderivativeMethod::ClosedFormN2).abs_err <= 1e-9);
    for (unsigned long n : {2UL, 3UL, 5UL}) {
        for (int i = 2; i <= 8; ++i) REQUIRE(derivative_check(n, 0.1 * i, 1e-5).abs_err <= 1e-7);
    }
    CHECK_THROWS_AS(derivative_check(3, 0.94, 0.02), Error);
    CHECK_THROWS_AS(derivative_check(3, 0.5, 0.0), Error);
    CHECK_THROWS_AS(derivative_check(3, 0.5, 1e-5, AntiderivativeMethod::ClosedFormN2), Error);
}

TEST_CASE("the alternative parameterization x*F(1/n, 2-1/n; 1+1/n; -x^n) fails the oracles") {
    // Evaluated through the same series engine; it is not an antiderivative.
    for (long n : {2L, 3L, 5L}) {
        const double x = 0.5;
        auto alt = [n](double at) {
            return at * gauss_2f1({Rational(1, n), Rational(2) - Rational(1, n), Rational(1) + Rational(1, n),
                                   -std::pow(at, static_cast<double>(n))},
                                  1e-15)
                            .value;
        };
        const double h = 1e-5;
        const double fd = (alt(x + h) - alt(x - h)) / (2.0 * h);
        CHECK(std::abs(fd - integrand(static_cast<unsigned long>(n), x)) > 1e-3);
        CHECK(std::abs(alt(x) - quadrature_oracle(static_cast<unsigned long>(n), x).value) > 1e-3);
    }
}
