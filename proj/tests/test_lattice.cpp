#include "tqc/freeenergy.hpp"
#include "tqc/lattice.hpp"

#include <gtest/gtest.h>

using namespace tqc;

namespace {

BigRational sq(int b) { return BigRational(b * b); }

} // namespace

TEST(Lattice, N03IsOneOnEvenSums)
{
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c)
                EXPECT_EQ(lattice_N(0, 3, {a, b, c}), (a + b + c) % 2 ? 0 : 1) << a << b << c;
}

TEST(Lattice, N11Quasipolynomial)
{
    for (int b = 2; b <= 20; b += 2)
        EXPECT_EQ(lattice_N(1, 1, {b}), (sq(b) - 4) / 48) << b;
    for (int b = 1; b <= 19; b += 2)
        EXPECT_EQ(lattice_N(1, 1, {b}), 0) << b;
}

TEST(Lattice, N04AllEven)
{
    for (int a = 2; a <= 6; a += 2)
        for (int b = 2; b <= 6; b += 2)
            for (int c = 2; c <= 6; c += 2)
                for (int d = 2; d <= 6; d += 2)
                    EXPECT_EQ(lattice_N(0, 4, {a, b, c, d}), (sq(a) + sq(b) + sq(c) + sq(d)) / 4 - 1);
}

TEST(Lattice, N12Quasipolynomial)
{
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b) {
            if ((a + b) % 2)
                continue;
            BigRational s = sq(a) + sq(b);
            BigRational want = a % 2 ? (s - 2) * (s - 10) / 384 : (s - 4) * (s - 8) / 384;
            EXPECT_EQ(lattice_N(1, 2, {a, b}), want) << a << "," << b;
        }
}

TEST(Lattice, MatchesQExpansion)
{
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        auto base = base_from_F(g, n, 6);
        for (const auto& [p, v] : base)
            EXPECT_EQ(lattice_N(g, n, p), v) << g << "," << n;
    }
}

TEST(Lattice, ZeroEntryAndOddSumVanish)
{
    EXPECT_EQ(lattice_N(1, 2, {1, 2}), 0);
}

TEST(Lattice, Symmetric)
{
    EXPECT_EQ(lattice_N(0, 4, {1, 3, 2, 4}), lattice_N(0, 4, {4, 2, 3, 1}));
    EXPECT_EQ(lattice_N(1, 2, {5, 3}), lattice_N(1, 2, {3, 5}));
}

TEST(EulerCharacteristic, Values)
{
    EXPECT_EQ(harer_zagier_chi(1, 1), make_rational(-1, 12));
    EXPECT_EQ(harer_zagier_chi(0, 3), 1);
    EXPECT_EQ(harer_zagier_chi(0, 4), -1);
    EXPECT_EQ(harer_zagier_chi(1, 2), make_rational(1, 12));
    EXPECT_EQ(harer_zagier_chi(2, 1), make_rational(1, 120));
}

TEST(EulerCharacteristic, FibrationRecursion)
{
    for (int g = 0; g <= 4; ++g)
        for (int n = g == 0 ? 3 : 1; n <= 6; ++n)
            EXPECT_EQ(harer_zagier_chi(g, n + 1), BigRational(2 - 2 * g - n) * harer_zagier_chi(g, n)) << g << "," << n;
}

TEST(EulerCharacteristic, DiagonalOfFreeEnergy)
{
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 3}, {1, 2}, {0, 4}, {2, 1}, {0, 5}, {1, 3}}) {
        EulerReport r = euler_consistency(g, n);
        EXPECT_TRUE(r.ok()) << g << "," << n << ": " << to_string(r.diagonal) << " vs " << to_string(r.expected);
    }
    EXPECT_EQ(euler_consistency(1, 1).diagonal, make_rational(1, 12));
    EXPECT_EQ(euler_consistency(0, 3).diagonal, -1);
    EXPECT_EQ(euler_consistency(1, 2).diagonal, make_rational(1, 12));
}

TEST(EulerCharacteristic, RejectsUnstable)
{
    EXPECT_THROW(harer_zagier_chi(0, 2), std::domain_error);
    EXPECT_THROW(harer_zagier_chi(-1, 3), std::domain_error);
}
