#include "binomint/binomial.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

namespace binomint {

DifferentialBinomial make_binomial(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& alpha, const Rational& beta) {
    if (b.is_zero()) throw Error(ErrorKind::DegenerateIntegrand, "inner exponent b must be nonzero");
    if (beta.is_zero()) throw Error(ErrorKind::DegenerateIntegrand, "coefficient beta must be nonzero");
    if (b.sign() > 0) return {a, b, c, alpha, beta};
    if (alpha.is_zero()) {
        throw Error(ErrorKind::DegenerateIntegrand, "alpha = 0 with b < 0 is a pure power after canonicalization");
    }
    return {a + b * c, -b, c, beta, alpha};
}

double real_power(double base, const Rational& e) {
    if (e.is_zero()) return 1.0;
    const double ed = e.to_double();
    if (base > 0.0) return std::pow(base, ed);
    if (base == 0.0) {
        if (e.sign() < 0) throw Error(ErrorKind::DomainError, "zero base raised to negative power");
        return 0.0;
    }
    const BigInt den = e.den();
    if (den.raw() % 2 == 0) {
        throw Error(ErrorKind::DomainError, "negative base under an even-denominator power " + e.str());
    }
    const double mag = std::pow(-base, ed);
    return e.num().raw() % 2 == 0 ? mag : -mag;
}

double eval_integrand(const DifferentialBinomial& db, double x) {
    if (x < 0.0) throw Error(ErrorKind::DomainError, "integrand evaluated at negative x");
    if (x == 0.0 && db.a.sign() < 0) throw Error(ErrorKind::DomainError, "x^a singular at x = 0 for a < 0");
    const double inner = db.alpha.to_double() + db.beta.to_double() * real_power(x, db.b);
    return real_power(x, db.a) * real_power(inner, db.c);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, X, Ident, LParen, RParen, Caret, Star, Slash, Plus, Minus, End, Bad };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, i, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string word(s.substr(i, j - i));
            out.push_back({word == "x" ? Tok::X : Tok::Ident, i, word});
            i = j;
            continue;
        }
        Tok k = Tok::Bad;
        switch (c) {
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '^': k = Tok::Caret; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            default: break;
        }
        out.push_back({k, i, std::string(1, static_cast<char>(c))});
        ++i;
    }
    out.push_back({Tok::End, s.size(), ""});
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Bad: return "unexpected character '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

// A parenthesized sum: power -> coefficient, with explicit constants kept
// even when they are zero.
struct Sum {
    std::map<Rational, Rational> terms;
    bool has_constant = false;
    std::size_t pos = 0;
};

struct Factor {
    std::size_t pos;
    std::optional<Sum> sum;  // empty: bare x
    Rational exponent{1};
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    std::vector<Factor> parse_expr() {
        std::vector<Factor> factors;
        factors.push_back(parse_factor());
        while (peek().kind == Tok::Star) {
            advance();
            factors.push_back(parse_factor());
        }
        if (peek().kind != Tok::End) fail("expected '*' or end of input");
        return factors;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& advance() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw Error(ErrorKind::SyntaxError,
                    "syntax error at position " + std::to_string(t.pos) + ": " + what + ", found " + describe(t),
                    t.pos);
    }

    [[noreturn]] void not_binomial(const Token& t, const std::string& what) const {
        throw Error(ErrorKind::NotBinomial,
                    "not a differential binomial at position " + std::to_string(t.pos) + ": " + what, t.pos);
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        advance();
    }

    BigInt parse_uint() {
        if (peek().kind != Tok::Number) fail("expected integer");
        return BigInt::from_string(advance().text);
    }

    BigInt parse_sint() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            advance();
            neg = true;
        }
        BigInt v = parse_uint();
        return neg ? -v : v;
    }

    Rational parse_rat() {
        BigInt n = parse_uint();
        if (peek().kind != Tok::Slash) return Rational(n);
        advance();
        const Token& dt = peek();
        BigInt d = parse_uint();
        if (d.sign() == 0) {
            throw Error(ErrorKind::SyntaxError, "syntax error at position " + std::to_string(dt.pos) + ": zero denominator",
                        dt.pos);
        }
        return Rational(n, d);
    }

    Rational parse_pow_opt() {
        if (peek().kind != Tok::Caret) return Rational(1);
        advance();
        if (peek().kind != Tok::LParen) {
            if (peek().kind != Tok::Number && peek().kind != Tok::Minus) fail("expected exponent");
            return Rational(parse_sint());
        }
        advance();
        BigInt n = parse_sint();
        Rational e(n);
        if (peek().kind == Tok::Slash) {
            advance();
            const Token& dt = peek();
            BigInt d = parse_uint();
            if (d.sign() == 0) {
                throw Error(ErrorKind::SyntaxError,
                            "syntax error at position " + std::to_string(dt.pos) + ": zero denominator", dt.pos);
            }
            e = Rational(n, d);
        }
        expect(Tok::RParen, "')'");
        return e;
    }

    Factor parse_factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::X: {
                advance();
                return Factor{t.pos, std::nullopt, parse_pow_opt()};
            }
            case Tok::LParen: {
                advance();
                Sum s = parse_sum();
                s.pos = t.pos;
                expect(Tok::RParen, "')'");
                return Factor{t.pos, std::move(s), parse_pow_opt()};
            }
            case Tok::Ident: not_binomial(t, "unsupported symbol or function '" + t.text + "'");
            default: fail("expected 'x' or '('");
        }
    }

    Sum parse_sum() {
        Sum s;
        bool negate = false;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = advance().kind == Tok::Minus;
        add_monomial(s, negate);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            negate = advance().kind == Tok::Minus;
            add_monomial(s, negate);
        }
        return s;
    }

    void add_monomial(Sum& s, bool negate) {
        Rational coef(1);
        Rational power(0);
        bool has_x = false;
        const Token& t = peek();
        if (t.kind == Tok::Ident) not_binomial(t, "unsupported symbol or function '" + t.text + "'");
        if (t.kind == Tok::LParen) not_binomial(t, "nested parentheses are outside the binomial shape");
        if (t.kind == Tok::Number) {
            coef = parse_rat();
            if (peek().kind == Tok::Star) {
                advance();
                if (peek().kind == Tok::Ident) not_binomial(peek(), "unsupported symbol or function '" + peek().text + "'");
                if (peek().kind != Tok::X) fail("expected 'x'");
            }
            if (peek().kind == Tok::X) has_x = true;
        } else if (t.kind == Tok::X) {
            has_x = true;
        } else {
            fail("expected coefficient or 'x'");
        }
        if (has_x) {
            advance();
            power = parse_pow_opt();
        }
        if (negate) coef = -coef;
        if (power.is_zero()) s.has_constant = true;
        s.terms[power] = s.terms[power] + coef;
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

struct BinomialFactor {
    Rational alpha, beta, b, c;
};

}  // namespace

DifferentialBinomial parse_integrand(std::string_view text) {
    Parser parser(text);
    const std::vector<Factor> factors = parser.parse_expr();

    auto reject = [](std::size_t pos, const std::string& what) -> Error {
        return Error(ErrorKind::NotBinomial, "not a differential binomial at position " + std::to_string(pos) + ": " + what,
                     pos);
    };

    Rational a(0);
    std::optional<BinomialFactor> bin;
    std::size_t bin_pos = 0;
    for (const Factor& f : factors) {
        if (!f.sum) {
            a = a + f.exponent;
            continue;
        }
        Rational constant(0);
        std::vector<std::pair<Rational, Rational>> powers;  // (power, coef), nonzero coef
        for (const auto& [p, coef] : f.sum->terms) {
            if (p.is_zero()) {
                constant = coef;
            } else if (!coef.is_zero()) {
                powers.emplace_back(p, coef);
            }
        }
        const bool has_constant = f.sum->has_constant;
        if (powers.empty()) {
            if (f.exponent.is_zero() || (has_constant && constant == Rational(1))) continue;
            throw reject(f.pos, "constant factor other than 1");
        }
        if (powers.size() > 1) throw reject(f.pos, "more than one power of x inside parentheses");
        const auto& [power, coef] = powers.front();
        if (!has_constant) {
            if (coef != Rational(1) && !f.exponent.is_zero()) throw reject(f.pos, "scaled power of x without a constant term");
            a = a + power * f.exponent;
            continue;
        }
        BinomialFactor next{constant, coef, power, f.exponent};
        if (!bin) {
            bin = next;
            bin_pos = f.pos;
        } else if (bin->alpha == next.alpha && bin->beta == next.beta && bin->b == next.b) {
            bin->c = bin->c + next.c;
        } else {
            throw reject(f.pos, "second distinct binomial factor (first at position " + std::to_string(bin_pos) + ")");
        }
    }
    if (!bin) throw reject(0, "no binomial factor (alpha + beta*x^b)");
    return make_binomial(a, bin->b, bin->c, bin->alpha, bin->beta);
}

std::string format_integrand(const DifferentialBinomial& db) {
    std::string out;
    if (!db.a.is_zero()) out += "x^(" + db.a.str() + ")*";
    const Rational mag = db.beta.abs();
    out += "(" + db.alpha.str() + (db.beta.sign() < 0 ? " - " : " + ") + (mag == Rational(1) ? "" : mag.str() + "*") +
           "x^(" + db.b.str() + "))^(" + db.c.str() + ")";
    return out;
}

}  // namespace binomint
