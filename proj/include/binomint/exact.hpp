#pragma once

/**
 * Exact arithmetic carriers: arbitrary-precision integers, rationals kept
 * in lowest terms, dense univariate polynomials over Q and rational
 * functions with a monic denominator.
 *
 * Big integers are GMP-backed. Every value is immutable once built; all
 * operations return new values.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "binomint/error.hpp"

namespace binomint {

class BigInt {
public:
    BigInt() = default;
    BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal literal.
    static BigInt from_string(std::string_view digits);

    const mpz_class& raw() const noexcept { return v_; }
    std::string str() const { return v_.get_str(); }
    int sign() const noexcept { return sgn(v_); }
    bool fits_long() const noexcept { return v_.fits_slong_p(); }
    long to_long() const;
    double to_double() const { return v_.get_d(); }

    BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
    BigInt pow(unsigned long e) const;

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

private:
    mpz_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Non-negative big integer. Used for Fermat triple components.
class BigNatural {
public:
    BigNatural() = default;
    BigNatural(unsigned long v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit BigNatural(BigInt v);

    const BigInt& value() const noexcept { return v_; }
    std::string str() const { return v_.str(); }
    BigNatural pow(unsigned long e) const { return BigNatural(v_.pow(e)); }

    friend BigNatural operator+(const BigNatural& a, const BigNatural& b) { return BigNatural(a.v_ + b.v_); }
    friend BigNatural operator*(const BigNatural& a, const BigNatural& b) { return BigNatural(a.v_ * b.v_); }
    friend bool operator==(const BigNatural&, const BigNatural&) = default;
    friend std::strong_ordering operator<=>(const BigNatural& a, const BigNatural& b) { return a.v_ <=> b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const BigNatural& v) { return os << v.str(); }

private:
    BigInt v_;
};

/// Exact rational, always reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : q_(n.raw()) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "p" or "p/q" with an optional leading sign.
    static Rational from_string(std::string_view text);
    /// Exact value of a finite double.
    static Rational from_double(double v);

    BigInt num() const { return BigInt(mpz_class(q_.get_num())); }
    BigInt den() const { return BigInt(mpz_class(q_.get_den())); }
    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sign() == 0; }
    double to_double() const { return q_.get_d(); }

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const;

    /// The integer value when the denominator is 1.
    std::optional<BigInt> as_integer() const;

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long e) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

enum class ArithOp { Add, Sub, Mul, Div, Pow };

/// Binary operation dispatch. For Pow the right operand must be an integer.
Rational rational_arith(const Rational& lhs, ArithOp op, const Rational& rhs);

std::optional<BigInt> is_integer(const Rational& q);

/// Dense polynomial in one variable with rational coefficients.
/// Index is degree; no trailing zeros; the zero polynomial has no coefficients.
class Polynomial {
public:
    static constexpr long kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

    /// c * t^k
    static Polynomial monomial(const Rational& c, unsigned long k);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational{}; }
    Rational leading() const { return c_.empty() ? Rational{} : c_.back(); }

    /// Horner evaluation carried in double-double arithmetic, so expanded
    /// powers like (t^m - a)^j keep full double accuracy near their roots.
    double eval(double t) const;
    Rational eval(const Rational& t) const;

    Polynomial pow(unsigned long k) const;
    Polynomial scaled(const Rational& s) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, e.g. "1 - 3*t + 3*t^2 - t^3".
    std::string str(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
    std::vector<std::array<double, 2>> split_;  // each coefficient as hi + lo
};

inline double poly_eval(const Polynomial& p, double t) { return p.eval(t); }
inline Rational poly_eval(const Polynomial& p, const Rational& t) { return p.eval(t); }
inline Polynomial poly_pow_expand(const Polynomial& p, unsigned long k) { return p.pow(k); }

/// numerator / denominator with a monic denominator. No gcd cancellation
/// beyond the constant content.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(Polynomial{}, Polynomial(Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(const Polynomial& p)  // NOLINT(google-explicit-constructor)
        : RationalFunction(p, Polynomial(Rational(1))) {}

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    double eval(double t) const { return num_.eval(t) / den_.eval(t); }
    Rational eval(const Rational& t) const;

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str(std::string_view var = "t") const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace binomint
