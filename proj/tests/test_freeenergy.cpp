#include "tqc/catalan.hpp"
#include "tqc/freeenergy.hpp"
#include "tqc/lattice.hpp"

#include <gtest/gtest.h>

using namespace tqc;

namespace {

std::vector<BigRational> ones(int n) { return std::vector<BigRational>(n, BigRational(1)); }

std::vector<std::pair<int, int>> stable_upto(int chi_max)
{
    std::vector<std::pair<int, int>> out;
    for (int chi = 1; chi <= chi_max; ++chi)
        for (int g = 0; 2 * g - 2 < chi; ++g)
            out.emplace_back(g, chi - 2 * g + 2);
    return out;
}

// chi(M_{g,n+1}) = (2 - 2g - n) chi(M_{g,n}), from chi(M_{0,3}) = 1 and
// chi(M_{g,1}) = zeta(1-2g): -1/12, 1/120, -1/252.
BigRational chi_oracle(int g, int n)
{
    if (g == 0) {
        BigRational c = 1;
        for (int k = 3; k < n; ++k)
            c *= BigRational(2 - k);
        return c;
    }
    const std::vector<BigRational> base{0, make_rational(-1, 12), make_rational(1, 120), make_rational(-1, 252)};
    BigRational c = base.at(g);
    for (int k = 1; k < n; ++k)
        c *= BigRational(2 - 2 * g - k);
    return c;
}

} // namespace

TEST(F11, Values)
{
    LaurentPoly f = f11();
    EXPECT_EQ(f.evaluate({BigRational(1)}), make_rational(1, 12));
    EXPECT_EQ(f.evaluate({BigRational(-1)}), 0);
    EXPECT_EQ(f.invert_variable(0), f);
    EXPECT_EQ(fC(1, 1), f);
}

TEST(F03, Values)
{
    LaurentPoly f = f03();
    EXPECT_EQ(f.evaluate(ones(3)), -1);
    LaurentPoly t1 = LaurentPoly::variable(3, 0), t2 = LaurentPoly::variable(3, 1), t3 = LaurentPoly::variable(3, 2);
    EXPECT_EQ(f.homogeneous_part(f.total_degree()), t1 * t2 * t3 * make_rational(-1, 16));
    EXPECT_EQ(fC(0, 3), f);
}

TEST(FreeEnergy, EulerCharacteristicAtOnes)
{
    EXPECT_EQ(fC(0, 4).evaluate(ones(4)), -1);
    EXPECT_EQ(fC(1, 2).evaluate(ones(2)), make_rational(1, 12));
    for (auto [g, n] : stable_upto(4)) {
        BigRational sign = n % 2 ? -1 : 1;
        EXPECT_EQ(fC(g, n).evaluate(ones(n)), sign * chi_oracle(g, n)) << g << "," << n;
    }
}

TEST(FreeEnergy, PropertiesThroughChiFour)
{
    for (auto [g, n] : stable_upto(4)) {
        PropertyReport rep = check_properties({g, n, fC(g, n)});
        EXPECT_TRUE(rep.ok()) << g << "," << n << (rep.failures.empty() ? "" : " " + rep.failures.front());
    }
}

TEST(FreeEnergy, Symmetric)
{
    for (auto [g, n] : stable_upto(3))
        EXPECT_TRUE(fC(g, n).is_symmetric()) << g << "," << n;
}

TEST(Laplace, Examples)
{
    LaplaceReport r = laplace_match(1, 1, 8);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.checked, 0);
    EXPECT_TRUE(laplace_match(0, 3, 6).ok());
}

TEST(Laplace, ThroughChiThree)
{
    for (auto [g, n] : stable_upto(3)) {
        LaplaceReport r = laplace_match(g, n, 6);
        EXPECT_TRUE(r.ok()) << g << "," << n;
    }
}

TEST(ChartSeries, TOfQ)
{
    ChartSeries c = ChartSeries::build(6);
    // -(1+q)/(1-q) = -1 - 2q - 2q^2 - ...
    EXPECT_EQ(c.t_of_q[0], -1);
    for (int k = 1; k <= 6; ++k)
        EXPECT_EQ(c.t_of_q[k], -2);
}

TEST(PrincipalSpecialization, S2FromF03AndF11)
{
    LaurentPoly diag03 = fC(0, 3).remap(1, {0, 0, 0});
    LaurentPoly diag11 = fC(1, 1);
    EXPECT_EQ(principal_Sm(2), diag03 * make_rational(1, 6) + diag11);
}
