#include "binomint/chebyshev.hpp"

namespace binomint {

ChebyshevClass classify(const DifferentialBinomial& db) {
    const Rational ratio = (db.a + Rational(1)) / db.b;
    ChebyshevClass cls;
    cls.case1 = is_integer(db.c);
    cls.case2 = is_integer(ratio);
    cls.case3 = is_integer(ratio + db.c);
    cls.elementary = cls.case1 || cls.case2 || cls.case3;
    return cls;
}

ChebyshevClass flt_exponent_class(unsigned long n) {
    if (n == 0) throw Error(ErrorKind::DomainError, "exponent n must be positive");
    const auto nn = static_cast<long>(n);
    return classify(make_binomial(Rational(0), Rational(nn), Rational(1, nn), Rational(1), Rational(-1)));
}

}  // namespace binomint
