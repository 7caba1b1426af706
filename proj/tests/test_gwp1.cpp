#include "tqc/gwp1.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tqc;

namespace {

LaurentPoly X() { return LaurentPoly::variable(2, 0); }
LaurentPoly H() { return LaurentPoly::variable(2, 1); }

BigRational eval(const BivariateRational& f, const BigRational& x, const BigRational& h)
{
    return f.num.evaluate({x, h}) / f.den.evaluate({x, h});
}

// Hook lengths, computed from the conjugate partition.
BigRational dim_over_factorial(const std::vector<int>& lam)
{
    std::vector<int> conj(lam.empty() ? 0 : lam[0], 0);
    for (int p : lam)
        for (int j = 0; j < p; ++j)
            ++conj[j];
    BigRational prod = 1;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j)
            prod *= lam[i] - j + conj[j] - static_cast<int>(i) - 1;
    return 1 / prod;
}

void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

// Pointwise sum over partitions, independent of the library's polynomial form.
BigRational x_d_oracle(int d, const BigRational& x, const BigRational& h)
{
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(d, d, cur, parts);
    BigRational s = 0;
    for (const auto& lam : parts) {
        BigRational w = dim_over_factorial(lam);
        BigRational term = w * w;
        for (int i = 1; i <= d; ++i) {
            const int li = i <= static_cast<int>(lam.size()) ? lam[i - 1] : 0;
            term *= (x + h * (i - li)) / (x + h * i);
        }
        s += term;
    }
    return s;
}

} // namespace

TEST(Gwp1, X0IsOne) { EXPECT_TRUE(x_d(0).value.equals({LaurentPoly::constant(2, 1), LaurentPoly::constant(2, 1)})); }

TEST(Gwp1, X1)
{
    EXPECT_TRUE(x_d(1).value.equals({X(), X() + H()}));
}

TEST(Gwp1, X2ByHand)
{
    // (1/4) [ (x - hbar)/(x + hbar) + x/(x + 2 hbar) ]
    BivariateRational a{X() - H(), X() + H()};
    BivariateRational b{X(), X() + H() * BigRational(2)};
    BivariateRational quarter{LaurentPoly::constant(2, BigRational(1, 4)), LaurentPoly::constant(2, 1)};
    EXPECT_TRUE(x_d(2).value.equals(quarter * (a + b)));
}

TEST(Gwp1, MatchesPointwiseOracle)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int d = 0; d <= 6; ++d) {
        BivariateRational f = x_d(d).value;
        for (int trial = 0; trial < 5; ++trial) {
            BigRational x(num(rng), den(rng)), h(num(rng), den(rng));
            x.canonicalize();
            h.canonicalize();
            bool pole = false;
            for (int i = 0; i <= d; ++i)
                pole = pole || x + h * i == 0;
            if (pole)
                continue;
            EXPECT_EQ(eval(f, x, h), x_d_oracle(d, x, h)) << d;
        }
    }
}

TEST(Gwp1, RecursionHolds)
{
    for (int d = 1; d <= 6; ++d)
        EXPECT_TRUE(verify_recursion(d).ok()) << d;
}

TEST(Gwp1, RecursionPointwise)
{
    const BigRational x(7, 3), h(2, 5);
    for (int d = 1; d <= 6; ++d) {
        BigRational lhs = x / h * (x_d_oracle(d, x - h, h) - x_d_oracle(d, x, h));
        BigRational rhs = h / (x + h) * x_d_oracle(d - 1, x + h, h);
        EXPECT_EQ(lhs + rhs, 0) << d;
    }
}

TEST(Gwp1, ClassicalLimit)
{
    for (int d = 0; d <= 8; ++d)
        EXPECT_EQ(x_d(d).value.at_hbar_zero(), RationalFunction(BigRational(1) / BigRational(factorial(d)))) << d;
}

TEST(Gwp1, ShiftsCompose)
{
    BivariateRational f = x_d(3).value;
    EXPECT_TRUE(f.shifted(1).shifted(-1).equals(f));
    const BigRational x(5, 2), h(1, 3);
    EXPECT_EQ(eval(f.shifted(1), x, h), eval(f, x + h, h));
    EXPECT_EQ(eval(f.shifted(-1), x, h), eval(f, x - h, h));
}

TEST(Gwp1, RejectsNegativeDegree)
{
    EXPECT_THROW(x_d(-1), std::domain_error);
    EXPECT_THROW(verify_recursion(0), std::domain_error);
}
