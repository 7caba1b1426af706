#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"
#include "tqc/univariate.hpp"

namespace tqc {

// num/den in (x, hbar); variable 0 is x, variable 1 is hbar.
struct BivariateRational {
    LaurentPoly num = LaurentPoly::constant(2, 0);
    LaurentPoly den = LaurentPoly::constant(2, 1);

    // Decided by cross-multiplication.
    bool equals(const BivariateRational& o) const;
    BivariateRational operator+(const BivariateRational& o) const;
    BivariateRational operator*(const BivariateRational& o) const;

    // f(x + sign*hbar) = e^{sign hbar d/dx} f
    BivariateRational shifted(int sign) const;
    // f(x, 0); throws if the denominator vanishes there.
    RationalFunction at_hbar_zero() const;
};

struct XdFunction {
    int d = 0;
    BivariateRational value;
};

// Sum over partitions of d over the common denominator prod_{i<=d} (x + i hbar).
XdFunction x_d(int d);

struct RecursionReport {
    int d = 0;
    LaurentPoly residual; // numerator after cross-multiplication
    bool ok() const { return residual.is_zero(); }
};

// (x/hbar)(e^{-hbar d/dx} - 1) X_d + (1 + x/hbar)^{-1} e^{hbar d/dx} X_{d-1} = 0
RecursionReport verify_recursion(int d);

} // namespace tqc
