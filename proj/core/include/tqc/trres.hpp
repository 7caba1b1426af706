#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"
#include "tqc/univariate.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tqc {

// Genus-0 spectral curve in a normalization coordinate t, with the
// involution t -> -t and ramification points 0 and infinity.
struct SpectralCurveSpec {
    std::string id;
    RationalFunction x_of_t;
    RationalFunction y_of_t;

    // eta = y dx = f(t) dt; returns f.
    RationalFunction eta() const { return y_of_t * x_of_t.derivative(); }
};

SpectralCurveSpec airy_curve();    // x = 4/t^2, y = -2/t
SpectralCurveSpec catalan_curve(); // x = 2 + 4/(t^2-1), y = -(t+1)/(t-1)

// Scalar P(t) with K(t, t1) = P(t) (1/(t+t1) + 1/(t-t1)) dt1/dt.
// Throws unless P is a Laurent polynomial in t.
LaurentPoly kernel(const SpectralCurveSpec& spec);

// Coefficient of dt_1 ... dt_n.
struct Wform {
    int g = 0;
    int n = 0;
    LaurentPoly w;
};

class TrEngine {
public:
    explicit TrEngine(SpectralCurveSpec spec);

    const SpectralCurveSpec& spec() const { return spec_; }
    const LaurentPoly& kernel_prefactor() const { return kernel_; }

    // Stable W_{g,n}, 2g-2+n > 0.
    const LaurentPoly& W(int g, int n);
    Wform wform(int g, int n) { return Wform{g, n, W(g, n)}; }

    const std::map<std::pair<int, int>, LaurentPoly>& entries() const { return memo_; }
    void insert(int g, int n, LaurentPoly w) { memo_[{g, n}] = std::move(w); }

private:
    SpectralCurveSpec spec_;
    LaurentPoly kernel_;
    std::map<std::pair<int, int>, LaurentPoly> memo_;

    LaurentPoly compute(int g, int n);
};

TrEngine& airy_engine();
TrEngine& catalan_engine();

// F^A_{g,n}: integrate the Airy W from 0 in every variable.
LaurentPoly airy_free_energy(int g, int n);

// <tau_{d_1} ... tau_{d_n}>_g. Zero unless sum d = 3g-3+n.
BigRational intersection_number(int g, const std::vector<int>& d);

// All nonzero entries for (g, n), keyed by d sorted descending.
std::map<std::vector<int>, BigRational> intersection_numbers(int g, int n);

// Homogeneous polynomial (-1)^n / 2^{2g-2+n} sum <tau_d> prod |2d_i-1|!! (t_i/2)^{2d_i+1}.
LaurentPoly airy_polynomial_from_intersections(int g, int n);

} // namespace tqc
