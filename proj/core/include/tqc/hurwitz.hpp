#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/trunc_series.hpp"
#include "tqc/univariate.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace tqc {

// Orbifold Hurwitz numbers H^{(r)}_{g,n}(mu) by cut-and-join.
class HurwitzTable {
public:
    BigRational get(int r, int g, const std::vector<int>& mu);

    // s = 2g-2+n+|mu|/r as a rational.
    static BigRational s_value(int r, int g, const std::vector<int>& mu);

    const std::map<std::tuple<int, int, std::vector<int>>, BigRational>& entries() const { return memo_; }
    void insert(int r, int g, const std::vector<int>& mu, const BigRational& v) { memo_[{r, g, mu}] = v; }
    void clear() { memo_.clear(); }

private:
    std::map<std::tuple<int, int, std::vector<int>>, BigRational> memo_;
    BigRational compute(int r, int g, const std::vector<int>& mu, int s);
};

HurwitzTable& default_hurwitz_table();
BigRational hurwitz(int r, int g, int n, const std::vector<int>& mu);

// Raw count of (sigma, tau_1..tau_s) in S_d: sigma of cycle type mu,
// tau_k transpositions, tau_s...tau_1 sigma = 1, transitive.
// Transfer-matrix walk over (product, orbit partition) states.
BigInt hurwitz_tuple_count(int g, const std::vector<int>& mu);

// Same count by listing every tuple; small d and s only.
BigInt hurwitz_tuple_count_naive(int g, const std::vector<int>& mu);

enum class OracleLabeling { one, aut, inv_aut };

struct OracleCalibration {
    OracleLabeling labeling = OracleLabeling::one;
    std::vector<OracleLabeling> fitting; // every candidate that matched
};

// Fit the labeling factor on H_{0,1}(1), H_{0,1}(2), H_{0,2}(1,1).
OracleCalibration calibrate_hurwitz_oracle();

constexpr int kOracleMaxDegree = 5;

// r = 1 only; count / (d! s!) times the calibrated labeling factor.
BigRational brute_oracle(int g, int n, const std::vector<int>& mu);

// Tree function z(x) with x = z e^{-z^r}, through x^K.
QSeries lambert_z_series(int r, int K);

struct SeriesResidual {
    int x_power = 0;
    int hbar_power = 0;
    BigRational value;
};

struct QcReport {
    int r = 0;
    int K = 0;
    int M = 0;
    int checked = 0;
    std::vector<SeriesResidual> nonzero;
    bool ok() const { return nonzero.empty(); }
};

// Psi^{(r)} as a series in x through x^K, exact in hbar through hbar^M.
HSeries hurwitz_wave_function(int r, int K, int M);

// P = hbar D - x^r e^{r hbar (D + (r-1)/2)}, D = x d/dx.
HSeries apply_P(const HSeries& psi, int r, int M);
// Q = hbar D^2/2 - (1/r + hbar/2) D - hbar d/dhbar.
HSeries apply_Q(const HSeries& psi, int r);

QcReport qc_series_check(int r, int K, int M);
QcReport q_operator_check(int r, int K, int M);

// [P,Q] x^k hbar^j - P x^k hbar^j, mod (x^{K+1}, hbar^{M+1}).
QcReport commutator_check(int r, int k, int j, int K, int M);

} // namespace tqc
