#include "tqc/laurent_poly.hpp"
#include "tqc/trunc_series.hpp"
#include "tqc/univariate.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tqc;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int arity, int terms)
{
    std::uniform_int_distribution<int> e(-3, 3), c(-9, 9), d(1, 5);
    LaurentPoly p(arity);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> exps(arity);
        for (auto& x : exps)
            x = e(rng);
        p += LaurentPoly::monomial(arity, exps, make_rational(c(rng), d(rng)));
    }
    return p;
}

QSeries random_series(std::mt19937& rng, int K, bool unit_linear)
{
    std::uniform_int_distribution<int> c(-6, 6), d(1, 4), sgn(0, 1);
    QSeries s(K);
    for (int i = 2; i <= K; ++i)
        s[i] = make_rational(c(rng), d(rng));
    s[1] = unit_linear ? (sgn(rng) ? 1 : -1) : make_rational(c(rng) | 1, d(rng));
    return s;
}

LaurentPoly t1() { return LaurentPoly::variable(1, 0); }

} // namespace

TEST(LaurentPoly, Examples)
{
    LaurentPoly t = t1(), one = LaurentPoly::constant(1, 1);
    EXPECT_EQ((t + one) * (t - one), t * t - one);
    EXPECT_EQ(t + LaurentPoly(1), t);
    EXPECT_EQ(t.pow(-1) * t, one);
}

TEST(LaurentPoly, Derivatives)
{
    LaurentPoly t = t1();
    EXPECT_EQ(t.pow(3).derivative(0), t.pow(2) * BigRational(3));
    EXPECT_EQ(t.pow(-1).derivative(0), -t.pow(-2));
    LaurentPoly a = LaurentPoly::variable(2, 0), b = LaurentPoly::variable(2, 1);
    EXPECT_EQ((a * b).derivative(0), b);
}

TEST(LaurentPoly, Substitution)
{
    LaurentPoly t = t1();
    EXPECT_EQ((t * t - LaurentPoly::constant(1, 1)).substitute(0, BigRational(1)), LaurentPoly(1));
    LaurentPoly a = LaurentPoly::variable(2, 0), b = LaurentPoly::variable(2, 1);
    EXPECT_EQ((a * b).substitute(1, a), a * a);

    QSeries s(2, {-1, -2, -2});
    QSeries inv = substitute_series(t.pow(-1), s);
    EXPECT_EQ(inv[0], -1);
    EXPECT_EQ(inv[1], 2);
    EXPECT_EQ(inv[2], -2);
}

TEST(LaurentPoly, EvaluateAtZero)
{
    LaurentPoly t1 = LaurentPoly::variable(2, 0), t2 = LaurentPoly::variable(2, 1);
    LaurentPoly p = t1 * t2 + t2 * t2 + LaurentPoly::constant(2, 3);
    EXPECT_EQ(p.evaluate({BigRational(0), BigRational(2)}), 7);
    EXPECT_EQ(p.evaluate({BigRational(0), BigRational(0)}), 3);
    EXPECT_THROW(t1.pow(-1).evaluate({BigRational(0), BigRational(1)}), std::domain_error);
}

TEST(LaurentPoly, RingAxiomsRandomized)
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const int arity = 1 + trial % 3;
        LaurentPoly a = random_poly(rng, arity, 4), b = random_poly(rng, arity, 4), c = random_poly(rng, arity, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, LaurentPoly(arity));
    }
}

TEST(LaurentPoly, DerivativeIsFiniteDifferenceWithNilpotentStep)
{
    // p(t + e) - p(t) over e, with e^2 = 0, evaluated at a point series
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly p = random_poly(rng, 1, 5);
        BigRational t0 = make_rational(trial + 2, 3);
        QSeries pt(1, {t0, 1});
        QSeries shifted = substitute_series(p, pt);
        EXPECT_EQ(shifted[0], p.evaluate({t0}));
        EXPECT_EQ(shifted[1], p.derivative(0).evaluate({t0}));
    }
}

TEST(LaurentPoly, GradedOrderIsDeterministic)
{
    LaurentPoly a = LaurentPoly::variable(2, 0), b = LaurentPoly::variable(2, 1);
    LaurentPoly p = b * b + a + b + a * a * b.pow(-1) + LaurentPoly::constant(2, 3);
    auto terms = p.graded_terms();
    std::vector<std::vector<int>> exps;
    for (const auto& [e, c] : terms)
        exps.push_back(e);
    EXPECT_EQ(exps, (std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {2, -1}, {0, 2}}));
    EXPECT_EQ(from_terms(2, terms), p);
}

TEST(Series, ReversionExamples)
{
    QSeries id = QSeries::variable(6);
    EXPECT_EQ(id.reversion(), id);

    QSeries f(6, {0, 1, -1});
    QSeries g = f.reversion();
    const std::vector<int> catalan{0, 1, 1, 2, 5, 14, 42};
    for (int k = 0; k <= 6; ++k)
        EXPECT_EQ(g[k], catalan[k]) << k;
}

TEST(Series, LambertReversion)
{
    const int K = 10;
    QSeries z = QSeries::variable(K);
    QSeries f = z * (-z).exp();
    QSeries g = f.reversion();
    for (int k = 1; k <= K; ++k) {
        BigInt kk = 1;
        for (int i = 0; i < k - 1; ++i)
            kk *= k;
        EXPECT_EQ(g[k], BigRational(kk) / BigRational(factorial(k))) << k;
    }
    QSeries back = f.compose(g);
    EXPECT_EQ(back, QSeries::variable(K));
}

TEST(Series, ReversionRoundTripRandomized)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        QSeries f = random_series(rng, 8, true);
        QSeries g = f.reversion();
        EXPECT_EQ(f.compose(g), QSeries::variable(8));
        EXPECT_EQ(g.compose(f), QSeries::variable(8));
    }
}

TEST(Series, LogExp)
{
    QSeries one = QSeries::constant(8, 1);
    EXPECT_EQ(one.log(), QSeries(8));
    QSeries opx(8, {1, 1});
    EXPECT_EQ(opx.log().exp(), opx);
    QSeries s(4, {1, 60, 7, 3});
    EXPECT_EQ(s.log()[1], 60);
}

TEST(Series, MixedTruncationTakesMinimum)
{
    QSeries a(3, {1, 1, 1, 1}), b(5, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ((a * b).order(), 3);
    EXPECT_EQ((a + b).order(), 3);
}

TEST(RationalFunction, ShiftCompositionIsIdentity)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        UPoly num(std::vector<BigRational>{c(rng), c(rng), 1});
        UPoly den(std::vector<BigRational>{c(rng) | 1, 1, c(rng)});
        RationalFunction f(num, den);
        BigRational h = make_rational(c(rng), 3);
        RationalFunction plus(UPoly(std::vector<BigRational>{h, 1})), minus(UPoly(std::vector<BigRational>{-h, 1}));
        EXPECT_EQ(f.compose(plus).compose(minus), f);
    }
}

TEST(Residue, Examples)
{
    RationalFunction x = RationalFunction::x();
    const BigRational c = make_rational(2, 3);
    RationalFunction G = x * x + RationalFunction(5);
    EXPECT_EQ(residue_at(G / (x - RationalFunction(c)), c), G.evaluate(c));
    RationalFunction H = x.pow(3) - x;
    EXPECT_EQ(residue_at(H / (x - RationalFunction(c)).pow(2), c), H.derivative().evaluate(c));
    EXPECT_EQ(residue_at((x * x + RationalFunction(1)) / (x - RationalFunction(1)), 1), 2);
}

TEST(Residue, LinearAndZeroWhenRegular)
{
    RationalFunction x = RationalFunction::x();
    RationalFunction f = RationalFunction(1) / (x * (x - RationalFunction(1)).pow(2));
    RationalFunction g = (x + RationalFunction(3)) / (x - RationalFunction(1));
    const BigRational a = make_rational(-3, 7);
    EXPECT_EQ(residue_at(f * RationalFunction(a) + g, 1), a * residue_at(f, 1) + residue_at(g, 1));
    EXPECT_EQ(residue_at(g, 0), 0);
    EXPECT_EQ(residue_at(x.pow(4), 2), 0);
    // residues of a rational function vanishing at infinity to order 2 sum to zero
    EXPECT_EQ(residue_at(f, 0) + residue_at(f, 1), 0);
}
