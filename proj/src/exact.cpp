#include "binomint/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace binomint {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::ZeroToNegativePower: return "zero-to-negative-power";
        case ErrorKind::DegenerateIntegrand: return "degenerate-integrand";
        case ErrorKind::DomainError: return "domain-error";
        case ErrorKind::SyntaxError: return "syntax-error";
        case ErrorKind::NotBinomial: return "not-a-differential-binomial";
        case ErrorKind::NotElementary: return "not-elementary";
        case ErrorKind::ExponentTooComplex: return "exponent-too-complex";
        case ErrorKind::PoleError: return "pole-error";
        case ErrorKind::DivergenceError: return "divergence-error";
        case ErrorKind::Nonconvergence: return "nonconvergence";
    }
    return "unknown";
}

namespace {

bool valid_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigInt BigInt::from_string(std::string_view digits) {
    if (!valid_integer_literal(digits)) {
        throw Error(ErrorKind::SyntaxError, "invalid integer literal '" + std::string(digits) + "'");
    }
    if (digits.front() == '+') digits.remove_prefix(1);
    return BigInt(mpz_class(std::string(digits), 10));
}

long BigInt::to_long() const {
    if (!fits_long()) throw Error(ErrorKind::DomainError, "integer " + str() + " does not fit in a machine word");
    return v_.get_si();
}

BigInt BigInt::pow(unsigned long e) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
    return BigInt(std::move(r));
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(r));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInt(std::move(r));
}

BigNatural::BigNatural(BigInt v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw Error(ErrorKind::DomainError, "negative value " + v_.str() + " for a natural number");
}

// ---------------------------------------------------------------------------

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.sign() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    q_ = mpq_class(num.raw(), den.raw());
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw Error(ErrorKind::SyntaxError, "signed denominator in '" + std::string(text) + "'");
    }
    return Rational(BigInt::from_string(text.substr(0, slash)), BigInt::from_string(den_text));
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw Error(ErrorKind::DomainError, "non-finite value has no rational form");
    return Rational(mpq_class(v));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<BigInt> Rational::as_integer() const {
    if (q_.get_den() != 1) return std::nullopt;
    return BigInt(mpz_class(q_.get_num()));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw Error(ErrorKind::ZeroToNegativePower, "zero raised to negative power");
        return inverse().pow(-e);
    }
    const auto ue = static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), ue);
    // Powers of coprime integers stay coprime.
    return Rational(mpq_class(n, d));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational rational_arith(const Rational& lhs, ArithOp op, const Rational& rhs) {
    switch (op) {
        case ArithOp::Add: return lhs + rhs;
        case ArithOp::Sub: return lhs - rhs;
        case ArithOp::Mul: return lhs * rhs;
        case ArithOp::Div: return lhs / rhs;
        case ArithOp::Pow: {
            const auto e = rhs.as_integer();
            if (!e) throw Error(ErrorKind::DomainError, "non-integer exponent " + rhs.str());
            return lhs.pow(e->to_long());
        }
    }
    throw Error(ErrorKind::DomainError, "unknown operation");
}

std::optional<BigInt> is_integer(const Rational& q) { return q.as_integer(); }

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
    c_.push_back(constant);
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, unsigned long k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    split_.clear();
    split_.reserve(c_.size());
    for (const Rational& c : c_) {
        const double hi = c.to_double();
        const double lo = (c - Rational::from_double(hi)).to_double();
        split_.push_back({hi, lo});
    }
}

double Polynomial::eval(double t) const {
    double hi = 0.0;
    double lo = 0.0;
    for (auto it = split_.rbegin(); it != split_.rend(); ++it) {
        // (hi, lo) = (hi, lo) * t + coefficient
        const double p = hi * t;
        const double p_err = std::fma(hi, t, -p);
        const double s = p + (*it)[0];
        const double bb = s - p;
        const double s_err = (p - (s - bb)) + ((*it)[0] - bb);
        const double tail = lo * t + p_err + s_err + (*it)[1];
        hi = s + tail;
        lo = tail - (hi - s);
    }
    return hi + lo;
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned long k) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& c : v) c = c * s;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(Rational(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::str(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) os << mag.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator polynomial");
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational s = lead.inverse();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

Rational RationalFunction::eval(const Rational& t) const { return num_.eval(t) / den_.eval(t); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace binomint
