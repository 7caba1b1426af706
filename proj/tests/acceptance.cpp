#include "tqc/catalan.hpp"
#include "tqc/freeenergy.hpp"
#include "tqc/gwp1.hpp"
#include "tqc/hurwitz.hpp"
#include "tqc/lattice.hpp"
#include "tqc/trres.hpp"
#include "tqc/wkb.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tqc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::vector<std::pair<int, int>> stable_range(int chi_min, int chi_max)
{
    std::vector<std::pair<int, int>> out;
    for (int chi = chi_min; chi <= chi_max; ++chi)
        for (int g = 0; 2 * g - 2 < chi; ++g)
            out.emplace_back(g, chi - 2 * g + 2);
    return out;
}

std::string gn(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

Outcome intersections()
{
    Outcome o;
    o.require(intersection_number(0, {0, 0, 0}) == 1, "<t0^3>");
    o.require(intersection_number(1, {1}) == BigRational(1, 24), "<t1>_1");
    o.require(intersection_number(1, {0, 2}) == BigRational(1, 24), "<t0 t2>_1");
    o.require(intersection_number(1, {1, 1}) == BigRational(1, 24), "<t1^2>_1");
    o.require(intersection_number(0, {0, 0, 0, 1}) == 1, "<t0^3 t1>");
    return o;
}

Outcome rainbow()
{
    Outcome o;
    for (int m = 1; m <= 4; ++m) {
        RainbowResult r = rainbow_check(m);
        o.require(r.equal(), "m=" + std::to_string(m) + " " + to_string(r.lhs) + " vs " + to_string(r.rhs));
    }
    o.require(rainbow_check(2).lhs == BigRational(5, 16), "m=2 is not 5/16");
    return o;
}

Outcome airy_coefficients()
{
    const std::vector<std::string> printed{
        "-5/48",       "5/64",     "-1105/9216",           "565/2048",
        "-82825/98304", "19675/6144", "-1282031525/88080384", "80727925/1048576",
        "-1683480621875/3623878656",
    };
    Outcome o;
    for (int m = 1; m <= 9; ++m) {
        std::string got = to_string(airy_Sm_gamma_side(m));
        o.require(got == printed[m - 1], "m=" + std::to_string(m) + " got " + got);
    }
    return o;
}

Outcome free_energy_properties()
{
    Outcome o;
    for (auto [g, n] : stable_range(1, 4)) {
        PropertyReport r = check_properties({g, n, fC(g, n)});
        o.require(r.ok(), gn(g, n) + (r.failures.empty() ? "" : " " + r.failures.front()));
    }
    return o;
}

Outcome laplace()
{
    Outcome o;
    for (auto [g, n] : stable_range(1, 3)) {
        LaplaceReport r = laplace_match(g, n, 6);
        o.require(r.ok() && r.checked > 0, gn(g, n));
    }
    return o;
}

Outcome w_equals_dF()
{
    Outcome o;
    for (auto [g, n] : stable_range(2, 3)) {
        LaurentPoly d = fC(g, n);
        for (int i = 0; i < n; ++i)
            d = d.derivative(i);
        o.require(catalan_engine().W(g, n) == d, gn(g, n));
    }
    LaurentPoly t = LaurentPoly::variable(1, 0), one = LaurentPoly::constant(1, 1);
    o.require(catalan_engine().W(1, 1) == (t * t - one).pow(3) * t.pow(-4) * BigRational(-1, 128), "W11");
    return o;
}

Outcome catalan_wkb()
{
    Outcome o;
    QuantumCurveSpec C = catalan_quantum_curve();
    WkbSeries W = wkb_hierarchy(C, 1);
    std::vector<RationalFunction> dS{W.dS[0], W.dS[1]};
    for (int m = 2; m <= 5; ++m)
        dS.push_back(d_dx(C, RationalFunction::from_laurent(principal_Sm(m))));
    HierarchyReport rep = check_hierarchy(C, dS);
    o.require(rep.residuals.size() == 6, "expected 6 equations");
    o.require(rep.ok(), "nonzero residual");
    return o;
}

Outcome catalan_psi()
{
    Outcome o;
    PsiReport P = catalan_psi_check(8);
    o.require(P.mismatches.empty(), std::to_string(P.mismatches.size()) + " mismatches");
    o.require(P.shadow.size() >= 5, "shadow too short");
    for (std::size_t n = 0; n < P.shadow.size() && n <= 4; ++n) {
        BigRational df(double_factorial(2 * static_cast<long>(n) - 1));
        o.require(P.shadow[n].first == df, "shadow n=" + std::to_string(n));
    }
    return o;
}

Outcome lattice()
{
    Outcome o;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}, {1, 2}})
        for (const auto& [p, v] : base_from_F(g, n, 6))
            if (lattice_N(g, n, p) != v) {
                o.require(false, gn(g, n));
                break;
            }
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = 1; c <= 6; ++c)
                if ((a + b + c) % 2 == 0)
                    o.require(lattice_N(0, 3, {a, b, c}) == 1, "N03");
    return o;
}

Outcome hurwitz_checks()
{
    Outcome o;
    int cases = 0;
    for (int d = 1; d <= 5; ++d)
        for (const auto& lam : partitions_of(d))
            for (int g = 0; g <= 2; ++g) {
                ++cases;
                o.require(hurwitz(1, g, lam.length(), lam.parts) == brute_oracle(g, lam.length(), lam.parts),
                          "oracle g=" + std::to_string(g) + " d=" + std::to_string(d));
            }
    for (int r = 1; r <= 3; ++r)
        o.require(qc_series_check(r, 4, 2).ok(), "qc r=" + std::to_string(r));
    o.require(q_operator_check(1, 3, 2).ok(), "Q r=1");
    if (o.ok)
        o.detail = std::to_string(cases) + " oracle cases";
    return o;
}

Outcome gwp1()
{
    Outcome o;
    LaurentPoly x = LaurentPoly::variable(2, 0), h = LaurentPoly::variable(2, 1);
    o.require(x_d(1).value.equals({x, x + h}), "X1");
    for (int d = 1; d <= 6; ++d) {
        o.require(verify_recursion(d).ok(), "recursion d=" + std::to_string(d));
        o.require(x_d(d).value.at_hbar_zero() == RationalFunction(BigRational(1) / BigRational(factorial(d))),
                  "classical d=" + std::to_string(d));
    }
    return o;
}

Outcome table1()
{
    Outcome o;
    LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
    LaurentPoly u = x, w = y;
    auto c = [](long v) { return LaurentPoly::constant(2, BigRational(v)); };

    const std::vector<LaurentPoly> affine{
        y * y - x,
        y * y + x * y + c(1),
        c(4) * x * (x - c(1)) * y * y + c(4) * (c(2) * x - c(1)) * y + c(1),
        (x + c(1)) * (y * y + y) + c(1),
        (x * x - c(1)) * y * y + c(2) * x * x * y - c(1),
    };
    const std::vector<LaurentPoly> infinity{
        w * w - u.pow(5),
        u.pow(4) - u * w + w * w,
        w * w + c(4) * (u - c(2)) * u * w - c(4) * u * u * (u - c(1)),
        w * w - u * (u + c(1)) * w + u.pow(3) * (u + c(1)),
    };
    const std::vector<int> genus{0, 0, 0, 0, 1};
    const std::vector<std::vector<std::string>> sing{
        {"infinity:irregular class 3/2"},
        {"infinity:irregular class 2"},
        {"x=0:regular", "x=1:regular", "infinity:regular"},
        {"x=-1:regular", "infinity:irregular class 1"},
        {"x=-1:regular", "x=1:regular", "infinity:irregular class 1"},
    };

    for (int row = 1; row <= 5; ++row) {
        const std::string tag = "row " + std::to_string(row);
        Table1Row R = table1_row(row);
        LaurentPoly a = R.curves.affine.to_laurent();
        o.require(a == affine[row - 1] || a == -affine[row - 1], tag + " affine");
        if (row <= 4) {
            LaurentPoly f = R.curves.infinity.to_laurent();
            o.require(f == infinity[row - 1] || f == -infinity[row - 1], tag + " infinity");
        } else {
            // Nonsingular over u = 0: both roots in w are simple.
            LaurentPoly f = R.curves.infinity.to_laurent();
            LaurentPoly f0 = f.substitute(0, BigRational(0));
            LaurentPoly df0 = f.derivative(1).substitute(0, BigRational(0));
            bool smooth = true;
            int roots = 0;
            for (long v = -4; v <= 4; ++v) {
                if (f0.evaluate({0, BigRational(v)}) == 0) {
                    ++roots;
                    smooth = smooth && df0.evaluate({0, BigRational(v)}) != 0;
                }
            }
            o.require(roots == 2 && smooth, tag + " infinity chart singular");
        }
        o.require(R.genus == genus[row - 1], tag + " genus " + std::to_string(R.genus));
        std::vector<std::string> got;
        for (const auto& s : R.singularities)
            got.push_back(s.where + ":" + s.cls.str());
        o.require(got == sing[row - 1], tag + " singularities");
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Airy intersection numbers", 5, intersections},
        {2, "rainbow formula m=1..4", 60, rainbow},
        {3, "Airy gamma-side coefficients", 5, airy_coefficients},
        {4, "F^C properties, 2g-2+n<=4", 120, free_energy_properties},
        {5, "Laplace match, 2g-2+n<=3, mu<=6", 120, laplace},
        {6, "W^C = d..dF^C and W^C_{1,1}", 60, w_equals_dF},
        {7, "Catalan WKB hierarchy, S_3..S_5", 60, catalan_wkb},
        {8, "Catalan wave function mod x^-9", 60, catalan_psi},
        {9, "lattice counts vs q-expansion", 60, lattice},
        {10, "Hurwitz oracle and quantum curves", 300, hurwitz_checks},
        {11, "GW(P1) recursion", 30, gwp1},
        {12, "quantum curve table", 5, table1},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.limit_seconds) {
            o.ok = false;
            o.detail = "over time limit";
        }
        failed += o.ok ? 0 : 1;
        std::printf("%s %2d %-40s %8.3fs / %gs%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    c.limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
