#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"
#include "tqc/trunc_series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tqc {

struct FreeEnergyC {
    int g = 0;
    int n = 0;
    LaurentPoly poly;
};

LaurentPoly f11();
LaurentPoly f03();

// F^C_{g,n} memo; integrates the differential recursion from t_1 = -1.
class FreeEnergyTable {
public:
    const LaurentPoly& get(int g, int n);
    FreeEnergyC free_energy(int g, int n) { return FreeEnergyC{g, n, get(g, n)}; }

    const std::map<std::pair<int, int>, LaurentPoly>& entries() const { return memo_; }
    void insert(int g, int n, LaurentPoly p) { memo_[{g, n}] = std::move(p); }
    void clear() { memo_.clear(); }

private:
    std::map<std::pair<int, int>, LaurentPoly> memo_;
    std::map<std::pair<int, int>, LaurentPoly> d1_;

    const LaurentPoly& d1(int g, int n);
    LaurentPoly compute(int g, int n);
};

FreeEnergyTable& default_free_energies();
const LaurentPoly& fC(int g, int n);

struct PropertyReport {
    bool degree = false;
    bool reciprocity = false;
    bool vanishing = false;
    bool euler = false;
    bool highest = false;
    std::vector<std::string> failures;

    bool ok() const { return degree && reciprocity && vanishing && euler && highest; }
};

PropertyReport check_properties(const FreeEnergyC& F);

// Coordinate changes as series in a single local variable.
struct ChartSeries {
    int K = 0;
    QSeries z_of_x; // in y = 1/x
    QSeries t_of_x; // in y = 1/x, constant term -1
    QSeries t_of_q; // -(1+q)/(1-q)

    static ChartSeries build(int K);
};

// Replace every t_i by the series s(u_i) and keep u_i^0..u_i^K.
// In the result the exponent of variable i is the power of u_i.
LaurentPoly expand_in_chart(const LaurentPoly& F, const QSeries& s, int K);

struct LaplaceMismatch {
    std::vector<int> mu;
    BigRational expected;
    BigRational got;
};

struct LaplaceReport {
    int checked = 0;
    std::vector<LaplaceMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Coefficient of prod x_i^{-mu_i} in F^C_{g,n}(t(x_1),...) against
// C_{g,n}(mu)/prod mu_i, all 1 <= mu_i <= mu_max.
LaplaceReport laplace_match(int g, int n, int mu_max);

// S_m(t) = sum_{2g-2+n=m-1} F^C_{g,n}(t,...,t)/n!, m >= 2.
LaurentPoly principal_Sm(int m);

// S_m(t(x)) as a series in 1/x through x^{-K}.
QSeries principal_Sm_series(int m, int K);

} // namespace tqc
