#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "binomint/chebyshev.hpp"
#include "binomint/exact.hpp"

namespace binomint {

/// Candidate solution of X^n + Y^n = Z^n. Construction orders the legs so
/// that X <= Y.
class FermatTriple {
public:
    FermatTriple(BigNatural x, BigNatural y, BigNatural z, unsigned long n);

    const BigNatural& X() const noexcept { return x_; }
    const BigNatural& Y() const noexcept { return y_; }
    const BigNatural& Z() const noexcept { return z_; }
    unsigned long n() const noexcept { return n_; }
    /// X == Y; excluded by the strict X < Y convention but representable.
    bool tie() const { return x_ == y_; }

    friend bool operator==(const FermatTriple&, const FermatTriple&) = default;

private:
    BigNatural x_, y_, z_;
    unsigned long n_;
};

/// (X/Z, Y/Z) in lowest terms.
struct NormalizedPoint {
    Rational x;
    Rational y;
    bool on_curve = false;  ///< X^n + Y^n == Z^n held exactly
    bool tie = false;       ///< x == y
};

bool flt_check(const FermatTriple& t);
NormalizedPoint normalize(const FermatTriple& t);

/// x^n + y^n - 1, exactly.
Rational curve_residual(const Rational& x, const Rational& y, unsigned long n);
inline Rational curve_residual(const NormalizedPoint& p, unsigned long n) { return curve_residual(p.x, p.y, n); }

/// All triples 1 <= X <= Y < Z <= z_max with X^n + Y^n = Z^n, sorted by
/// (Z, Y, X). With workers > 1 the Z range is split across threads; the
/// merged output is identical to the sequential one.
std::vector<FermatTriple> search_triples(unsigned long n, unsigned long z_max, unsigned workers = 1);

struct ReportRow {
    unsigned long n = 0;
    ChebyshevClass cls;
    bool elementary = false;
};

std::vector<ReportRow> exceptionality_report(unsigned long n_lo, unsigned long n_hi);

/// Header plus one line per row: n, case1, case2, case3, elementary.
/// Absent witnesses are written as "-".
std::string report_to_tsv(const std::vector<ReportRow>& rows);
nlohmann::json report_to_json(const std::vector<ReportRow>& rows);
nlohmann::json triple_to_json(const FermatTriple& t);
nlohmann::json class_to_json(const ChebyshevClass& cls);

}  // namespace binomint
