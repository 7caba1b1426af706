#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"
#include "tqc/trunc_series.hpp"
#include "tqc/univariate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tqc {

// (ħ d/dx)^2 + s1 (ħ d/dx) + s2, spectral curve y^2 + s1 y + s2 = 0.
struct QuantumCurveSpec {
    std::string name;
    RationalFunction s1;
    RationalFunction s2;
    // Branch x = x(t), y = y(t) of the spectral curve.
    std::optional<RationalFunction> x_of_t;
    std::optional<RationalFunction> y_of_t;

    bool has_parametrization() const { return x_of_t && y_of_t; }
    // y(t)^2 + s1(x(t)) y(t) + s2(x(t)); zero for a valid parametrization.
    RationalFunction semiclassical_residual() const;
};

// Airy: s1 = 0, s2 = -x, x = t^2, y = -t.
QuantumCurveSpec airy_quantum_curve();
// Catalan / Hermite: s1 = x, s2 = 1, x = 2(t^2+1)/(t^2-1), y = -(t+1)/(t-1).
QuantumCurveSpec catalan_quantum_curve();

struct WkbSeries {
    // dS_m/dx as rational functions of t, m = 0..M.
    std::vector<RationalFunction> dS;
    // Airy only: S_m = c_m x^{-3(m-1)/2}, indexed by m (entries 0, 1 unused).
    std::vector<BigRational> airy_c;
};

// Solve the hierarchy for S'_0..S'_M.
WkbSeries wkb_hierarchy(const QuantumCurveSpec& spec, int M);

struct HierarchyReport {
    // residual of the hbar^k equation, k = 0..dS.size()-1
    std::vector<RationalFunction> residuals;
    bool ok() const;
};

// Evaluate every hbar^k equation whose terms only involve the supplied S'_0..S'_M.
HierarchyReport check_hierarchy(const QuantumCurveSpec& spec, const std::vector<RationalFunction>& dS);

// d/dx of a function of t on the given curve.
RationalFunction d_dx(const QuantumCurveSpec& spec, const RationalFunction& f);

// Coefficient of x^{-3(m-1)/2} in log Ai(x), m >= 2, from intersection numbers.
BigRational airy_Sm_intersection_side(int m);
// Same coefficient, index shifted: S_{m+1}, m >= 1, from the partition sum.
BigRational airy_Sm_gamma_side(int m);

struct RainbowResult {
    BigRational lhs;
    BigRational rhs;
    bool equal() const { return lhs == rhs; }
};

RainbowResult rainbow_check(int m);

// sum over lambda |- m of (-1)^{l-1}(l-1)!/|Aut| prod (6k)!/((2k)!(3k)!)
BigRational gamma_partition_sum(int m);

struct FzCoefficients {
    std::vector<BigRational> from_log;          // a_1..a_j
    std::vector<BigRational> from_intersection; // a_1..a_j
    bool agree() const { return from_log == from_intersection; }
};

FzCoefficients fz_coefficients(int j_max);

struct PsiMismatch {
    int power; // of 1/x
    HbarLaurent expected;
    HbarLaurent got;
};

struct PsiReport {
    int K = 0;
    HSeries lhs;
    HSeries rhs;
    std::vector<PsiMismatch> mismatches;
    // hbar = 1: coefficient of x^{-2n-1} of Psi against (2n-1)!!
    std::vector<std::pair<BigRational, BigRational>> shadow;
    bool shadow_ok() const;
    bool ok() const { return mismatches.empty() && shadow_ok(); }
};

// x^{1/hbar} Psi^C as a series in 1/x, through x^{-K}, against the
// hypergeometric closed form.
PsiReport catalan_psi_check(int K);

// Coefficients of a series in x (ascending) or in 1/x (descending).
struct OdeSeries {
    bool descending = false;
    std::vector<BigRational> coeffs;
};

struct OdeReport {
    int checked = 0;
    std::vector<std::pair<int, BigRational>> nonzero; // (power, residual coefficient)
    bool ok() const { return nonzero.empty(); }
};

// Apply d^2 + s1 d + s2 (hbar = 1) with denominators cleared; check the
// residual vanishes through x^K (ascending) or x^{-K} (descending).
OdeReport verify_ode_series(const OdeSeries& series, const QuantumCurveSpec& spec, int K);

// Bivariate polynomial: coefficient of v^k stored at index k.
struct BiPoly {
    std::vector<UPoly> by_second;

    LaurentPoly to_laurent() const; // arity 2
    std::string str(const std::string& a, const std::string& b) const;
    bool operator==(const BiPoly& o) const { return by_second == o.by_second; }
};

struct SemiclassicalCurves {
    BiPoly affine;   // in (x, y)
    BiPoly infinity; // in (u, w), u = 1/x, y dx = du / w
};

SemiclassicalCurves semiclassical_and_infinity(const QuantumCurveSpec& spec);

struct DiscriminantData {
    std::vector<int> zeros;
    std::vector<int> poles;
    int base_genus = 0;
};

// Multiplicities of (s1^2 - 4 s2)(dx)^2 on P^1.
DiscriminantData discriminant_data(const QuantumCurveSpec& spec);

int geometric_genus(int g, const std::vector<int>& zeros, const std::vector<int>& poles);

struct SingularityClass {
    bool regular = true;
    BigRational irregular_class; // r - 1 when irregular
    std::string str() const;
    bool operator==(const SingularityClass& o) const
    {
        return regular == o.regular && (regular || irregular_class == o.irregular_class);
    }
};

// k, l: pole orders of s1, s2 at the point; nullopt for an identically zero coefficient.
SingularityClass singularity_class(std::optional<int> k, std::optional<int> l);

struct SingularPoint {
    std::string where; // "x=a", a factor "p(x)=0", or "infinity"
    std::optional<int> k; // pole orders; nullopt for a zero coefficient
    std::optional<int> l;
    SingularityClass cls;
};

std::vector<SingularPoint> singular_points(const QuantumCurveSpec& spec);

struct Table1Row {
    int row = 0;
    QuantumCurveSpec spec;
    SemiclassicalCurves curves;
    DiscriminantData discriminant;
    int genus = 0;
    std::vector<SingularPoint> singularities;
};

// Rows 1..5: Airy, Hermite, Gauss, and the two regular/irregular examples.
QuantumCurveSpec table1_spec(int row);
Table1Row table1_row(int row);

} // namespace tqc
