#include "suite.hpp"

#include "tqc/catalan.hpp"
#include "tqc/freeenergy.hpp"
#include "tqc/gwp1.hpp"
#include "tqc/hurwitz.hpp"
#include "tqc/lattice.hpp"
#include "tqc/trres.hpp"
#include "tqc/trunc_series.hpp"
#include "tqc/wkb.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace tqc::cli {

namespace {

using Check = std::pair<std::string, std::function<std::string()>>;

// A check returns an empty string on success, else a short reason.
std::string expect_eq(const BigRational& got, const BigRational& want, const std::string& what)
{
    if (got == want)
        return {};
    return what + ": got " + to_string(got) + ", want " + to_string(want);
}

std::vector<std::pair<int, int>> stable_range(int lo, int hi)
{
    std::vector<std::pair<int, int>> out;
    for (int chi = lo; chi <= hi; ++chi)
        for (int g = 0; 2 * g - 2 < chi; ++g)
            out.emplace_back(g, chi - 2 * g + 2);
    return out;
}

std::vector<Check> exactnum_checks()
{
    return {
        {"bernoulli",
         [] {
             const std::vector<std::pair<int, BigRational>> known{
                 {0, 1}, {2, make_rational(1, 6)}, {4, make_rational(-1, 30)},
                 {6, make_rational(1, 42)}, {10, make_rational(5, 66)}, {12, make_rational(-691, 2730)}};
             for (const auto& [n, b] : known)
                 if (auto e = expect_eq(bernoulli(n), b, "B_" + std::to_string(n)); !e.empty())
                     return e;
             return std::string();
         }},
        {"partitions",
         [] {
             if (partition_count(10) != 42 || partition_count(20) != 627)
                 return std::string("partition counts");
             for (int n = 1; n <= 7; ++n) {
                 BigInt s = 0;
                 for (const auto& l : partitions_of(n))
                     s += dim_irrep(l) * dim_irrep(l);
                 if (s != factorial(n))
                     return "sum of dim^2 != " + std::to_string(n) + "!";
             }
             return std::string();
         }},
        {"parse-roundtrip", [] {
             for (const char* s : {"0", "-7", "5/16", "-691/2730"})
                 if (to_string(parse_rational(s)) != s)
                     return std::string("roundtrip of ") + s;
             return std::string();
         }},
    };
}

std::vector<Check> polyseries_checks()
{
    return {
        {"ring-axioms",
         [] {
             LaurentPoly t = LaurentPoly::variable(2, 0), u = LaurentPoly::variable(2, 1);
             LaurentPoly a = t * t - u.pow(-1) * make_rational(3, 2);
             LaurentPoly b = t * u + LaurentPoly::constant(2, make_rational(1, 7));
             LaurentPoly c = u.pow(3) - t.pow(-2);
             if (!((a * b) * c == a * (b * c)) || !(a * (b + c) == a * b + a * c) || !(a * b == b * a))
                 return std::string("LaurentPoly ring axioms");
             return std::string();
         }},
        {"series-inverse",
         [] {
             QSeries s(12);
             for (int i = 0; i <= 12; ++i)
                 s[i] = make_rational(i + 1, i * i + 1);
             QSeries one = s * s.inverse();
             for (int i = 0; i <= 12; ++i)
                 if (one[i] != (i == 0 ? 1 : 0))
                     return std::string("s * s^-1 != 1");
             return std::string();
         }},
        {"reversion",
         [] {
             QSeries s(10);
             s[1] = 1;
             s[2] = make_rational(-1, 3);
             s[5] = 2;
             QSeries id = s.compose(s.reversion());
             for (int i = 0; i <= 10; ++i)
                 if (id[i] != (i == 1 ? 1 : 0))
                     return std::string("s o s^-1 != x");
             return std::string();
         }},
        {"exp-log", [] {
             QSeries s(10);
             for (int i = 1; i <= 10; ++i)
                 s[i] = make_rational(1, i);
             if (!(s.exp().log() == s))
                 return std::string("log exp s != s");
             return std::string();
         }},
    };
}

std::vector<Check> catalan_checks()
{
    return {
        {"C01-closed",
         [] {
             for (int m = 0; m <= 8; ++m)
                 if (auto e = expect_eq(catalan_general(0, 1, {2 * m}), catalan_closed(m), "C01"); !e.empty())
                     return e;
             return std::string();
         }},
        {"C02-closed",
         [] {
             for (int a = 1; a <= 6; ++a)
                 for (int b = 1; b <= 6; ++b)
                     if (auto e = expect_eq(catalan_general(0, 2, {a, b}), c02_closed(a, b), "C02"); !e.empty())
                         return e;
             return std::string();
         }},
        {"known-values", [] {
             if (auto e = expect_eq(catalan_general(1, 1, {4}), 1, "C11(4)"); !e.empty())
                 return e;
             return expect_eq(catalan_general(0, 1, {6}), 5, "C01(6)");
         }},
    };
}

std::vector<Check> freeenergy_checks()
{
    return {
        {"properties",
         [] {
             for (auto [g, n] : stable_range(1, 3)) {
                 auto rep = check_properties({g, n, fC(g, n)});
                 if (!rep.ok())
                     return "F(" + std::to_string(g) + "," + std::to_string(n) + ") " +
                            (rep.failures.empty() ? std::string() : rep.failures.front());
             }
             return std::string();
         }},
        {"laplace", [] {
             for (auto [g, n] : stable_range(1, 2)) {
                 auto rep = laplace_match(g, n, 4);
                 if (!rep.ok())
                     return "Laplace mismatch at (" + std::to_string(g) + "," + std::to_string(n) + ")";
             }
             return std::string();
         }},
    };
}

std::vector<Check> trres_checks()
{
    return {
        {"intersections",
         [] {
             const std::vector<std::tuple<int, std::vector<int>, BigRational>> known{
                 {0, {0, 0, 0}, 1},
                 {1, {1}, make_rational(1, 24)},
                 {1, {0, 2}, make_rational(1, 24)},
                 {1, {1, 1}, make_rational(1, 24)},
                 {0, {0, 0, 0, 1}, 1},
                 {2, {4}, make_rational(1, 1152)}};
             for (const auto& [g, d, v] : known)
                 if (auto e = expect_eq(intersection_number(g, d), v, "<tau>_" + std::to_string(g)); !e.empty())
                     return e;
             return std::string();
         }},
        {"W-equals-dF", [] {
             for (auto [g, n] : stable_range(1, 2)) {
                 LaurentPoly d = fC(g, n);
                 for (int i = 0; i < n; ++i)
                     d = d.derivative(i);
                 if (!(d == catalan_engine().W(g, n)))
                     return "W != dF at (" + std::to_string(g) + "," + std::to_string(n) + ")";
             }
             return std::string();
         }},
    };
}

std::vector<Check> wkb_checks()
{
    return {
        {"rainbow",
         [] {
             for (int m = 1; m <= 3; ++m)
                 if (!rainbow_check(m).equal())
                     return "rainbow m=" + std::to_string(m);
             return expect_eq(rainbow_check(2).lhs, make_rational(5, 16), "rainbow m=2");
         }},
        {"airy-coefficients",
         [] {
             auto A = wkb_hierarchy(airy_quantum_curve(), 10);
             for (int m = 1; m <= 9; ++m)
                 if (auto e = expect_eq(A.airy_c[m + 1], airy_Sm_gamma_side(m), "S_" + std::to_string(m + 1));
                     !e.empty())
                     return e;
             return std::string();
         }},
        {"catalan-psi",
         [] { return catalan_psi_check(8).ok() ? std::string() : std::string("Psi identity"); }},
        {"table1", [] {
             const std::vector<int> genus{0, 0, 0, 0, 1};
             for (int row = 1; row <= 5; ++row)
                 if (table1_row(row).genus != genus[row - 1])
                     return "genus of row " + std::to_string(row);
             return std::string();
         }},
    };
}

std::vector<Check> lattice_checks()
{
    return {
        {"q-expansion",
         [] {
             for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}}) {
                 for (const auto& [p, v] : base_from_F(g, n, 4))
                     if (lattice_N(g, n, p) != v)
                         return "N(" + std::to_string(g) + "," + std::to_string(n) + ")";
             }
             return std::string();
         }},
        {"euler", [] {
             for (auto [g, n] : stable_range(1, 3))
                 if (!euler_consistency(g, n).ok())
                     return "chi at (" + std::to_string(g) + "," + std::to_string(n) + ")";
             return expect_eq(harer_zagier_chi(1, 1), make_rational(-1, 12), "chi(M_{1,1})");
         }},
    };
}

std::vector<Check> hurwitz_checks()
{
    return {
        {"oracle",
         [] {
             for (int d = 1; d <= 4; ++d)
                 for (const auto& lam : partitions_of(d))
                     for (int g = 0; g <= 1; ++g)
                         if (auto e = expect_eq(hurwitz(1, g, lam.length(), lam.parts),
                                                brute_oracle(g, lam.length(), lam.parts), "H vs oracle");
                             !e.empty())
                             return e;
             return std::string();
         }},
        {"quantum-curve", [] {
             for (int r = 1; r <= 2; ++r)
                 if (!qc_series_check(r, 4, 2).ok())
                     return "P Psi != 0 for r=" + std::to_string(r);
             return std::string();
         }},
    };
}

std::vector<Check> gwp1_checks()
{
    return {
        {"recursion",
         [] {
             for (int d = 1; d <= 4; ++d)
                 if (!verify_recursion(d).ok())
                     return "recursion at d=" + std::to_string(d);
             return std::string();
         }},
        {"classical-limit", [] {
             for (int d = 0; d <= 4; ++d)
                 if (!(x_d(d).value.at_hbar_zero() == RationalFunction(BigRational(1, 1) / BigRational(factorial(d)))))
                     return "X_d(x,0) != 1/d! at d=" + std::to_string(d);
             return std::string();
         }},
    };
}

std::vector<Check> checks_for(const std::string& module)
{
    if (module == "exactnum")
        return exactnum_checks();
    if (module == "polyseries")
        return polyseries_checks();
    if (module == "catalan")
        return catalan_checks();
    if (module == "freeenergy")
        return freeenergy_checks();
    if (module == "trres")
        return trres_checks();
    if (module == "wkb")
        return wkb_checks();
    if (module == "lattice")
        return lattice_checks();
    if (module == "hurwitz")
        return hurwitz_checks();
    if (module == "gwp1")
        return gwp1_checks();
    throw std::invalid_argument("unknown suite '" + module + "'");
}

} // namespace

const std::vector<std::string>& suite_modules()
{
    static const std::vector<std::string> names{"exactnum", "polyseries", "catalan", "freeenergy", "trres",
                                                "wkb",      "lattice",    "hurwitz", "gwp1"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite)
{
    std::vector<std::string> modules;
    if (suite == "all")
        modules = suite_modules();
    else
        modules = {suite};
    std::vector<std::vector<Check>> plan;
    for (const auto& m : modules)
        plan.push_back(checks_for(m));

    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        for (const auto& [name, fn] : plan[i]) {
            CheckResult r{modules[i], name, false, {}};
            try {
                r.detail = fn();
                r.ok = r.detail.empty();
            } catch (const std::exception& e) {
                r.detail = std::string("exception: ") + e.what();
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace tqc::cli
