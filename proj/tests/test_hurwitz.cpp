#include "tqc/hurwitz.hpp"

#include <gtest/gtest.h>

using namespace tqc;

TEST(Hurwitz, Examples)
{
    EXPECT_EQ(hurwitz(1, 0, 1, {1}), 1);
    EXPECT_EQ(hurwitz(1, 0, 1, {2}), BigRational(1, 2));
    EXPECT_EQ(hurwitz(2, 0, 1, {2}), BigRational(1, 2));
    EXPECT_EQ(hurwitz(1, 0, 2, {1, 1}), BigRational(1, 2));
    EXPECT_EQ(hurwitz(1, 1, 1, {2}), BigRational(1, 12));
}

TEST(Hurwitz, OneBranchPointClosedForm)
{
    // H_{0,1}(d) = d^{d-3} / (d-1)!
    for (int d = 1; d <= 7; ++d) {
        BigRational p = 1;
        for (int i = 0; i < d - 3; ++i)
            p *= d;
        for (int i = 0; i > d - 3; --i)
            p /= d;
        EXPECT_EQ(hurwitz(1, 0, 1, {d}), p / BigRational(factorial(d - 1))) << d;
    }
}

TEST(Hurwitz, TupleCountsAgree)
{
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : partitions_of(d))
            for (int g = 0; g <= 1; ++g)
                EXPECT_EQ(hurwitz_tuple_count(g, lam.parts), hurwitz_tuple_count_naive(g, lam.parts))
                    << "g=" << g << " d=" << d;
}

TEST(Hurwitz, CalibrationIsUnique)
{
    OracleCalibration c = calibrate_hurwitz_oracle();
    EXPECT_EQ(c.labeling, OracleLabeling::aut);
    EXPECT_EQ(c.fitting.size(), 1u);
}

TEST(Hurwitz, CutAndJoinMatchesOracle)
{
    for (int d = 1; d <= kOracleMaxDegree; ++d)
        for (const auto& lam : partitions_of(d))
            for (int g = 0; g <= 2; ++g)
                EXPECT_EQ(hurwitz(1, g, lam.length(), lam.parts), brute_oracle(g, lam.length(), lam.parts))
                    << "g=" << g << " d=" << d;
}

TEST(Hurwitz, SymmetricInMu)
{
    EXPECT_EQ(hurwitz(1, 1, 2, {1, 3}), hurwitz(1, 1, 2, {3, 1}));
    EXPECT_EQ(hurwitz(2, 0, 3, {2, 4, 2}), hurwitz(2, 0, 3, {4, 2, 2}));
}

TEST(Hurwitz, SValue)
{
    EXPECT_EQ(HurwitzTable::s_value(1, 1, {2}), 3);
    EXPECT_EQ(HurwitzTable::s_value(2, 0, {2}), 0);
    EXPECT_EQ(HurwitzTable::s_value(2, 0, {1}), BigRational(-1, 2));
}

TEST(Lambert, TreeFunction)
{
    QSeries z = lambert_z_series(1, 9);
    for (int k = 1; k <= 9; ++k) {
        BigInt kk = 1;
        for (int i = 0; i < k - 1; ++i)
            kk *= k;
        EXPECT_EQ(z[k], BigRational(kk) / BigRational(factorial(k))) << k;
    }
}

TEST(Lambert, ReversesDefiningRelation)
{
    for (int r = 1; r <= 3; ++r) {
        QSeries z = lambert_z_series(r, 10);
        QSeries zr = z.pow(r);
        QSeries x = z * (-zr).exp();
        EXPECT_EQ(x, QSeries::variable(10)) << r;
    }
}

TEST(QuantumCurve, AnnihilatesWaveFunction)
{
    EXPECT_TRUE(qc_series_check(1, 4, 3).ok());
    for (int r = 1; r <= 3; ++r) {
        QcReport q = qc_series_check(r, 4, 2);
        EXPECT_TRUE(q.ok()) << r;
        EXPECT_GT(q.checked, 0);
    }
}

TEST(QuantumCurve, SecondOperator)
{
    QcReport q = q_operator_check(1, 3, 2);
    EXPECT_TRUE(q.ok());
}

TEST(QuantumCurve, Commutator)
{
    EXPECT_TRUE(commutator_check(1, 2, 0, 4, 2).ok());
    EXPECT_TRUE(commutator_check(2, 2, 1, 6, 3).ok());
}
