#pragma once

#include <optional>

#include "binomint/binomial.hpp"

namespace binomint {

/// Which of Chebyshev's integrality conditions hold, with integer witnesses.
///   case1: c
///   case2: (a+1)/b
///   case3: (a+1)/b + c
/// Witnesses may be negative.
struct ChebyshevClass {
    std::optional<BigInt> case1;
    std::optional<BigInt> case2;
    std::optional<BigInt> case3;
    bool elementary = false;

    friend bool operator==(const ChebyshevClass&, const ChebyshevClass&) = default;
};

ChebyshevClass classify(const DifferentialBinomial& db);

/// Class of the integrand (1 - x^n)^(1/n).
ChebyshevClass flt_exponent_class(unsigned long n);

}  // namespace binomint
