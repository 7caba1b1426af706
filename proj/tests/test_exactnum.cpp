#include "tqc/exactnum.hpp"
#include "tqc/univariate.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace tqc;

namespace {

// Akiyama-Tanigawa; gives B_1 = +1/2, only even indices are compared.
BigRational bernoulli_oracle(int n)
{
    std::vector<BigRational> a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = BigRational(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[j - 1] = BigRational(j) * (a[j - 1] - a[j]);
    }
    return a[0];
}

// Number of partitions of m with parts <= k.
long partitions_oracle(int m, int k)
{
    if (m == 0)
        return 1;
    if (k == 0)
        return 0;
    return partitions_oracle(m, k - 1) + (m >= k ? partitions_oracle(m - k, k) : 0);
}

// Standard Young tableaux by removing corners.
BigInt syt_count(std::vector<int> shape)
{
    while (!shape.empty() && shape.back() == 0)
        shape.pop_back();
    if (shape.empty())
        return 1;
    BigInt total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner)
            continue;
        auto s = shape;
        --s[i];
        total += syt_count(s);
    }
    return total;
}

} // namespace

TEST(DoubleFactorial, Examples)
{
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(5), 15);
    EXPECT_EQ(double_factorial(9), 945);
}

TEST(DoubleFactorial, MatchesFactorialQuotient)
{
    for (int d = 0; d <= 20; ++d) {
        BigInt pow2 = 1;
        for (int i = 0; i < d; ++i)
            pow2 *= 2;
        EXPECT_EQ(double_factorial(2 * d - 1), factorial(2 * d) / (pow2 * factorial(d))) << d;
    }
}

TEST(Bernoulli, Examples)
{
    EXPECT_EQ(bernoulli(0), 1);
    EXPECT_EQ(bernoulli(2), BigRational(1, 6));
    EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
}

TEST(Bernoulli, AgreesWithAkiyamaTanigawa)
{
    for (int n = 0; n <= 30; n += 2)
        EXPECT_EQ(bernoulli(n), bernoulli_oracle(n)) << n;
}

TEST(Bernoulli, AlternatesInSign)
{
    for (int m = 1; m <= 15; ++m)
        EXPECT_EQ(sgn(bernoulli(2 * m)), m % 2 ? 1 : -1) << m;
}

TEST(Partitions, Examples)
{
    ASSERT_EQ(partitions_of(0).size(), 1u);
    EXPECT_TRUE(partitions_of(0)[0].parts.empty());
    auto p3 = partitions_of(3);
    ASSERT_EQ(p3.size(), 3u);
    EXPECT_EQ(p3[0].parts, (std::vector<int>{3}));
    EXPECT_EQ(p3[1].parts, (std::vector<int>{2, 1}));
    EXPECT_EQ(p3[2].parts, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(Partitions, CountsMatchRecurrence)
{
    for (int m = 0; m <= 25; ++m) {
        EXPECT_EQ(partition_count(m), partitions_oracle(m, m)) << m;
        EXPECT_EQ(static_cast<long>(partitions_of(m).size()), partitions_oracle(m, m)) << m;
    }
}

TEST(Partitions, BoundedLength)
{
    for (int m = 1; m <= 10; ++m)
        for (int k = 1; k <= m; ++k)
            for (const auto& p : partitions_of(m, k))
                EXPECT_LE(p.length(), k);
}

TEST(AutOrder, Examples)
{
    EXPECT_EQ(aut_order({{2, 2, 1}}), 2);
    EXPECT_EQ(aut_order({{1, 1, 1}}), 6);
    EXPECT_EQ(aut_order({{3, 2}}), 1);
}

TEST(AutOrder, DividesLengthFactorial)
{
    for (int m = 1; m <= 12; ++m)
        for (const auto& p : partitions_of(m))
            EXPECT_EQ(factorial(p.length()) % aut_order(p), 0);
}

TEST(DimIrrep, Examples)
{
    EXPECT_EQ(dim_irrep({{5}}), 1);
    EXPECT_EQ(dim_irrep({{2, 1}}), 2);
    EXPECT_EQ(dim_irrep({{}}), 1);
    BigInt s = 0;
    for (const auto& p : partitions_of(4))
        s += dim_irrep(p) * dim_irrep(p);
    EXPECT_EQ(s, 24);
}

TEST(DimIrrep, HookFormulaMatchesTableauCount)
{
    for (int m = 1; m <= 9; ++m)
        for (const auto& p : partitions_of(m))
            EXPECT_EQ(dim_irrep(p), syt_count(p.parts));
}

TEST(DimIrrep, BurnsideSum)
{
    for (int d = 0; d <= 8; ++d) {
        BigInt s = 0;
        for (const auto& p : partitions_of(d))
            s += dim_irrep(p) * dim_irrep(p);
        EXPECT_EQ(s, factorial(d)) << d;
    }
}

TEST(Pochhammer, Examples)
{
    const HbarLaurent inv = HbarLaurent::monomial(-1);
    EXPECT_EQ(pochhammer_hbar(inv, 0), HbarLaurent(1));
    EXPECT_EQ(pochhammer_hbar(inv, 2), inv * (inv + HbarLaurent(1)));
    EXPECT_EQ(pochhammer_hbar(HbarLaurent(3), 3), HbarLaurent(60));
}

TEST(Rational, CanonicalAndRoundTrip)
{
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
    EXPECT_EQ(to_string(make_rational(10, 5)), "2");
    for (const char* s : {"0", "1/24", "-691/2730", "123456789012345678901234567890"})
        EXPECT_EQ(to_string(parse_rational(s)), s);
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
    EXPECT_THROW(parse_rational("1/x"), std::invalid_argument);
}
