#include "tqc/gwp1.hpp"

#include <stdexcept>

namespace tqc {

namespace {

LaurentPoly X() { return LaurentPoly::variable(2, 0); }
LaurentPoly H() { return LaurentPoly::variable(2, 1); }

// polynomial in x only (arity 2, no hbar) to UPoly
UPoly to_upoly(const LaurentPoly& p)
{
    std::vector<BigRational> c;
    for (const auto& [k, v] : p.terms()) {
        auto e = p.exponents(k);
        if (e[1] != 0 || e[0] < 0)
            throw std::invalid_argument("not a polynomial in x");
        if (static_cast<int>(c.size()) <= e[0])
            c.resize(e[0] + 1, BigRational(0));
        c[e[0]] = v;
    }
    return UPoly(c);
}

// p(x + c hbar)
LaurentPoly shift_x(const LaurentPoly& p, int c)
{
    const LaurentPoly arg = X() + H() * BigRational(c);
    LaurentPoly out(2);
    for (const auto& [e, coeff] : p.coefficients_in(0)) {
        if (e < 0)
            throw std::invalid_argument("shift needs a polynomial in x");
        out += coeff * arg.pow(e);
    }
    return out;
}

} // namespace

bool BivariateRational::equals(const BivariateRational& o) const { return num * o.den == o.num * den; }

BivariateRational BivariateRational::operator+(const BivariateRational& o) const
{
    return {num * o.den + o.num * den, den * o.den};
}

BivariateRational BivariateRational::operator*(const BivariateRational& o) const
{
    return {num * o.num, den * o.den};
}

BivariateRational BivariateRational::shifted(int sign) const
{
    return {shift_x(num, sign), shift_x(den, sign)};
}

RationalFunction BivariateRational::at_hbar_zero() const
{
    LaurentPoly n = num.substitute(1, BigRational(0));
    LaurentPoly d = den.substitute(1, BigRational(0));
    if (d.is_zero())
        throw std::domain_error("denominator vanishes at hbar = 0");
    return RationalFunction(to_upoly(n), to_upoly(d));
}

XdFunction x_d(int d)
{
    if (d < 0)
        throw std::domain_error("x_d needs d >= 0");
    XdFunction out;
    out.d = d;
    LaurentPoly den = LaurentPoly::constant(2, 1);
    for (int i = 1; i <= d; ++i)
        den = den * (X() + H() * BigRational(i));
    LaurentPoly num(2);
    const BigRational dfact(factorial(d));
    for (const auto& lam : partitions_of(d)) {
        BigRational w = BigRational(dim_irrep(lam)) / dfact;
        LaurentPoly term = LaurentPoly::constant(2, w * w);
        const int l = lam.length();
        for (int i = 1; i <= l; ++i)
            term = term * (X() + H() * BigRational(i - lam.parts[i - 1]));
        for (int i = l + 1; i <= d; ++i)
            term = term * (X() + H() * BigRational(i));
        num += term;
    }
    out.value = {num, den};
    return out;
}

RecursionReport verify_recursion(int d)
{
    if (d < 1)
        throw std::domain_error("verify_recursion needs d >= 1");
    const BivariateRational Xd = x_d(d).value;
    const BivariateRational Xp = x_d(d - 1).value;

    // (x/hbar)(Xd(x-hbar) - Xd(x))
    BivariateRational diff = Xd.shifted(-1) + BivariateRational{-Xd.num, Xd.den};
    BivariateRational a = BivariateRational{X(), H()} * diff;
    // hbar/(hbar+x) Xp(x+hbar)
    BivariateRational b = BivariateRational{H(), X() + H()} * Xp.shifted(1);

    RecursionReport rep;
    rep.d = d;
    rep.residual = (a + b).num;
    return rep;
}

} // namespace tqc
