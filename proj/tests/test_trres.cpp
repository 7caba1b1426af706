#include "tqc/freeenergy.hpp"
#include "tqc/trres.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

using namespace tqc;

namespace {

// Witten-Kontsevich numbers from the string equation and the DVV
// (Virasoro) recursion.
class DvvOracle {
public:
    BigRational get(int g, std::vector<int> d)
    {
        const int n = static_cast<int>(d.size());
        if (g < 0 || n == 0 || 2 * g - 2 + n <= 0)
            return 0;
        for (int x : d)
            if (x < 0)
                return 0;
        if (std::accumulate(d.begin(), d.end(), 0) != 3 * g - 3 + n)
            return 0;
        std::sort(d.begin(), d.end(), std::greater<>());
        if (g == 0 && n == 3)
            return 1;
        if (g == 1 && n == 1)
            return BigRational(1, 24);
        auto key = std::make_pair(g, d);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        BigRational v = d.back() == 0 ? string_eq(g, d) : dvv(g, d);
        memo_.emplace(key, v);
        return v;
    }

private:
    std::map<std::pair<int, std::vector<int>>, BigRational> memo_;

    BigRational string_eq(int g, std::vector<int> d)
    {
        d.pop_back();
        BigRational s = 0;
        for (std::size_t j = 0; j < d.size(); ++j) {
            auto e = d;
            --e[j];
            s += get(g, e);
        }
        return s;
    }

    static BigRational df(int k) { return BigRational(double_factorial(k)); }

    BigRational dvv(int g, const std::vector<int>& d)
    {
        const int k = d[0] - 1;
        std::vector<int> rest(d.begin() + 1, d.end());
        BigRational s = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            auto e = rest;
            e[j] = k + rest[j];
            s += df(2 * k + 2 * rest[j] + 1) / df(2 * rest[j] - 1) * get(g, e);
        }
        const int m = static_cast<int>(rest.size());
        for (int a = 0; a <= k - 1; ++a) {
            const int b = k - 1 - a;
            BigRational w = df(2 * a + 1) * df(2 * b + 1) / 2;
            std::vector<int> e{a, b};
            e.insert(e.end(), rest.begin(), rest.end());
            BigRational inner = get(g - 1, e);
            for (int g1 = 0; g1 <= g; ++g1)
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::vector<int> I{a}, J{b};
                    for (int i = 0; i < m; ++i)
                        ((mask >> i) & 1u ? I : J).push_back(rest[i]);
                    inner += get(g1, I) * get(g - g1, J);
                }
            s += w * inner;
        }
        return s / df(2 * k + 3);
    }
};

std::vector<std::vector<int>> dvectors(int g, int n)
{
    std::vector<std::vector<int>> out;
    const int total = 3 * g - 3 + n;
    std::vector<int> d(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            d[i] = left;
            out.push_back(d);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (total >= 0)
        rec(0, total);
    return out;
}

} // namespace

TEST(Kernel, Prefactors)
{
    LaurentPoly t = LaurentPoly::variable(1, 0);
    EXPECT_EQ(kernel(airy_curve()), t.pow(4) * make_rational(1, 64));
    LaurentPoly one = LaurentPoly::constant(1, 1);
    EXPECT_EQ(kernel(catalan_curve()), (t * t - one).pow(3) * t.pow(-2) * make_rational(1, 64));
}

TEST(Kernel, AiryEta)
{
    RationalFunction t = RationalFunction::x();
    EXPECT_EQ(airy_curve().eta(), RationalFunction(16) / t.pow(4));
}

TEST(Wgn, OneOneBothCurves)
{
    LaurentPoly t = LaurentPoly::variable(1, 0), one = LaurentPoly::constant(1, 1);
    EXPECT_EQ(airy_engine().W(1, 1), t * t * make_rational(-1, 128));
    EXPECT_EQ(catalan_engine().W(1, 1), (t * t - one).pow(3) * t.pow(-4) * make_rational(-1, 128));
}

TEST(Wgn, CatalanEqualsDerivativeOfFreeEnergy)
{
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 1}, {0, 5}, {1, 3}}) {
        LaurentPoly d = fC(g, n);
        for (int i = 0; i < n; ++i)
            d = d.derivative(i);
        EXPECT_EQ(catalan_engine().W(g, n), d) << g << "," << n;
    }
}

TEST(Wgn, Symmetric)
{
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 2}, {1, 3}})
        EXPECT_TRUE(airy_engine().W(g, n).is_symmetric()) << g << "," << n;
}

TEST(Wgn, UnstableRejected) { EXPECT_THROW(airy_engine().W(0, 2), std::domain_error); }

TEST(Intersections, Examples)
{
    EXPECT_EQ(intersection_number(1, {1}), BigRational(1, 24));
    EXPECT_EQ(intersection_number(0, {0, 0, 0}), 1);
    EXPECT_EQ(intersection_number(1, {0, 2}), BigRational(1, 24));
    EXPECT_EQ(intersection_number(1, {1, 1}), BigRational(1, 24));
    EXPECT_EQ(intersection_number(0, {0, 0, 0, 1}), 1);
    EXPECT_EQ(intersection_number(0, {1, 0, 0}), 0);
}

TEST(Intersections, MatchDvvRecursion)
{
    DvvOracle oracle;
    for (int chi = 1; chi <= 4; ++chi)
        for (int g = 0; 2 * g - 2 < chi; ++g) {
            const int n = chi - 2 * g + 2;
            for (const auto& d : dvectors(g, n))
                EXPECT_EQ(intersection_number(g, d), oracle.get(g, d)) << "g=" << g << " n=" << n;
        }
}

TEST(Intersections, KnownHigherGenus)
{
    EXPECT_EQ(intersection_number(2, {4}), BigRational(1, 1152));
    EXPECT_EQ(intersection_number(3, {7}), BigRational(1, 82944));
}

TEST(AiryFreeEnergy, MatchesIntersectionPolynomial)
{
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}})
        EXPECT_EQ(airy_free_energy(g, n), airy_polynomial_from_intersections(g, n)) << g << "," << n;
}
