#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tqc {

// Univariate Laurent polynomial; used for ħ-dependence.
class HbarLaurent {
public:
    HbarLaurent() = default;
    HbarLaurent(const BigRational& c);
    HbarLaurent(int c) : HbarLaurent(BigRational(c)) {}
    static HbarLaurent monomial(int e, const BigRational& c = 1);
    static HbarLaurent hbar() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    BigRational operator[](int e) const;

    HbarLaurent& operator+=(const HbarLaurent& o);
    HbarLaurent& operator-=(const HbarLaurent& o);
    HbarLaurent& operator*=(const BigRational& c);
    HbarLaurent operator-() const;
    friend HbarLaurent operator+(HbarLaurent a, const HbarLaurent& b) { return a += b; }
    friend HbarLaurent operator-(HbarLaurent a, const HbarLaurent& b) { return a -= b; }
    friend HbarLaurent operator*(const HbarLaurent& a, const HbarLaurent& b);
    friend HbarLaurent operator*(HbarLaurent a, const BigRational& c) { return a *= c; }
    friend HbarLaurent operator*(const BigRational& c, HbarLaurent a) { return a *= c; }
    bool operator==(const HbarLaurent& o) const { return low_ == o.low_ && c_ == o.c_; }

    // Drop exponents above e.
    HbarLaurent truncated_above(int e) const;
    // ħ d/dħ
    HbarLaurent euler_derivative() const;
    BigRational evaluate(const BigRational& h) const;

    std::vector<std::pair<int, BigRational>> terms() const;
    std::string str() const;

private:
    int low_ = 0;
    std::vector<BigRational> c_;
    void normalize();
};

// (a)_n = a(a+1)...(a+n-1)
HbarLaurent pochhammer_hbar(const HbarLaurent& a, int n);

// Dense univariate polynomial over Q.
class UPoly {
public:
    UPoly() = default;
    UPoly(const BigRational& c);
    UPoly(int c) : UPoly(BigRational(c)) {}
    explicit UPoly(std::vector<BigRational> coeffs);
    static UPoly x() { return UPoly(std::vector<BigRational>{0, 1}); }
    static UPoly monomial(int e, const BigRational& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    BigRational operator[](int i) const;
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }
    // Exponent of the lowest nonzero term; 0 for the zero polynomial.
    int valuation() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const BigRational& c);
    UPoly operator-() const;
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const BigRational& c) { return a *= c; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly pow(int k) const;
    UPoly derivative() const;
    BigRational evaluate(const BigRational& x) const;
    UPoly compose(const UPoly& inner) const;
    UPoly monic() const;
    // Content-free with integer coefficients and positive leading term.
    UPoly primitive() const;

    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(const UPoly& a, const UPoly& b);

    // Yun: returns a_1, a_2, ... with p = c * prod a_i^i, a_i monic square-free.
    std::vector<UPoly> squarefree_decomposition() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<BigRational> c_;
    void normalize();
};

// Reduced univariate rational function with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(const BigRational& c) : num_(c), den_(1) {}
    RationalFunction(int c) : RationalFunction(BigRational(c)) {}
    RationalFunction(const UPoly& p) : num_(p), den_(1) {}
    RationalFunction(const UPoly& num, const UPoly& den);
    static RationalFunction x() { return RationalFunction(UPoly::x()); }
    // Laurent polynomial in one variable (arity 1).
    static RationalFunction from_laurent(const LaurentPoly& p);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    RationalFunction pow(int k) const;
    RationalFunction derivative() const;
    BigRational evaluate(const BigRational& x) const;
    // f(g(x))
    RationalFunction compose(const RationalFunction& inner) const;

    // Order of pole at x = infinity: deg num - deg den (negative for a zero).
    int degree_at_infinity() const { return num_.degree() - den_.degree(); }

    // Some(Laurent) if the denominator is a monomial.
    bool is_laurent() const;
    LaurentPoly to_laurent() const;

    std::string str(const std::string& var = "x") const;

private:
    UPoly num_, den_;
    void reduce();
};

// Res_{x=a} f(x) dx.
BigRational residue_at(const RationalFunction& f, const BigRational& a);

} // namespace tqc
