#include <doctest.h>

#include <cmath>
#include <random>

#include "binomint/exact.hpp"

using namespace binomint;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 500);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational arithmetic examples") {
    CHECK(rational_arith(Rational(1, 2), ArithOp::Add, Rational(1, 3)) == Rational(5, 6));
    CHECK(rational_arith(Rational(3, 5), ArithOp::Pow, Rational(2)) == Rational(9, 25));
    CHECK(rational_arith(Rational(7, 3), ArithOp::Mul, Rational(3, 7)) == Rational(1));
    CHECK(rational_arith(Rational(2, 3), ArithOp::Pow, Rational(-2)) == Rational(9, 4));
    CHECK(rational_arith(Rational(1), ArithOp::Sub, Rational(1, 4)) == Rational(3, 4));
    CHECK(rational_arith(Rational(1, 2), ArithOp::Div, Rational(-1, 4)) == Rational(-2));
}

TEST_CASE("rational errors") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("expected an exception");
        return ErrorKind::DomainError;
    };
    CHECK(kind_of([] { rational_arith(Rational(1), ArithOp::Div, Rational(0)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { rational_arith(Rational(0), ArithOp::Pow, Rational(-1)); }) == ErrorKind::ZeroToNegativePower);
    CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { rational_arith(Rational(2), ArithOp::Pow, Rational(1, 2)); }) == ErrorKind::DomainError);
}

TEST_CASE("rationals are reduced with positive denominator") {
    const Rational r(6, -8);
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(4));
    CHECK(r.str() == "-3/4");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational::from_string("-4/2") == Rational(-2));
    CHECK(Rational::from_string("10/15").str() == "2/3");
}

TEST_CASE("is_integer") {
    CHECK(is_integer(Rational(2, 1)) == BigInt(2));
    CHECK_FALSE(is_integer(Rational(2, 3)).has_value());
    CHECK(is_integer(Rational(-4, 2)) == BigInt(-2));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    for (int i = 0; i < 1000; ++i) {
        const long n = dist(rng);
        REQUIRE(is_integer(Rational(n, 1)) == BigInt(n));
    }
}

TEST_CASE("rational field properties on random samples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational p = random_rational(rng);
        const Rational q = random_rational(rng);
        const Rational r = random_rational(rng);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE(p * (q + r) == p * q + p * r);
        // Reduction is idempotent: rebuilding from the reduced parts changes nothing.
        const Rational again(p.num(), p.den());
        REQUIRE(again.num() == p.num());
        REQUIRE(again.den() == p.den());
    }
}

TEST_CASE("big naturals handle large powers exactly") {
    const BigNatural x(10000UL);
    const BigNatural p = x.pow(200);
    CHECK(p.str().size() == 801);  // 10^800
    CHECK(p.str().front() == '1');
    CHECK(BigNatural(3UL).pow(200) * BigNatural(3UL) == BigNatural(3UL).pow(201));
    CHECK_THROWS_AS(BigNatural(BigInt(-1)), Error);
}

TEST_CASE("polynomial evaluation") {
    const Polynomial p({Rational(1), Rational(2)});
    CHECK(poly_eval(p, 3.0) == doctest::Approx(7.0));
    CHECK(poly_eval(p, Rational(3)) == Rational(7));
    CHECK(poly_eval(Polynomial{}, 12.5) == 0.0);
    CHECK(Polynomial{}.degree() == Polynomial::kZeroDegree);
    const Polynomial q({Rational(-1), Rational(0), Rational(1)});
    CHECK(poly_eval(q, 1.0) == 0.0);
    CHECK(poly_eval(q, Rational(1)) == Rational(0));
}

TEST_CASE("trailing zeros are trimmed") {
    const Polynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial({Rational(0)}).is_zero());
}

TEST_CASE("polynomial powers") {
    const Polynomial one_plus_t({Rational(1), Rational(1)});
    CHECK(poly_pow_expand(one_plus_t, 2) == Polynomial({Rational(1), Rational(2), Rational(1)}));
    CHECK(poly_pow_expand(one_plus_t, 0) == Polynomial(Rational(1)));
    const Polynomial one_minus_t({Rational(1), Rational(-1)});
    CHECK(poly_pow_expand(one_minus_t, 3) == Polynomial({Rational(1), Rational(-3), Rational(3), Rational(-1)}));
    CHECK(poly_pow_expand(one_minus_t, 3).str() == "1 - 3*t + 3*t^2 - t^3");
}

TEST_CASE("poly_pow_expand agrees with repeated exact evaluation") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<unsigned long> power(0, 6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = random_rational(rng);
        const Polynomial p(c);
        const unsigned long k = power(rng);
        const Polynomial pk = poly_pow_expand(p, k);
        for (int i = 0; i < 50; ++i) {
            const Rational t = random_rational(rng);
            REQUIRE(poly_eval(pk, t) == poly_eval(p, t).pow(static_cast<long>(k)));
        }
    }
}

TEST_CASE("double evaluation of expanded powers stays accurate near roots") {
    // (t^2 - 1)^8 at t = 1 + 1e-3: the expanded form cancels heavily.
    const Polynomial base({Rational(-1), Rational(0), Rational(1)});
    const Polynomial p = base.pow(8);
    const double t = 1.001;
    const double expected = p.eval(Rational::from_double(t)).to_double();
    double magnitude = 0.0;
    double plain = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        magnitude = magnitude * t + std::abs(it->to_double());
        plain = plain * t + it->to_double();
    }
    // condition number is ~1e24 here; double-double keeps ~106 bits
    CHECK(std::abs(p.eval(t) - expected) <= 1e-30 * magnitude);
    CHECK(std::abs(p.eval(t) - expected) <= 1e-8 * std::abs(expected));
    // plain Horner is pure noise at this point
    CHECK(std::abs(plain - expected) > std::abs(expected));
}

TEST_CASE("rational function keeps a monic denominator") {
    const RationalFunction f(Polynomial({Rational(2)}), Polynomial({Rational(1), Rational(4)}));
    CHECK(f.denominator().leading() == Rational(1));
    CHECK(f.numerator() == Polynomial(Rational(1, 2)));
    CHECK(f.eval(Rational(1)) == Rational(2, 5));
    CHECK(f.eval(1.0) == doctest::Approx(0.4));
    CHECK_THROWS_AS(RationalFunction(Polynomial(Rational(1)), Polynomial{}), Error);
}
