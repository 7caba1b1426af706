#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"
#include "tqc/univariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace tqc {

// c_0 + c_1 x + ... + c_K x^K + O(x^{K+1}).
// Binary operations truncate to the smaller order of the operands.
template <class C>
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(order + 1, C(0))
    {
        if (order < 0)
            throw std::invalid_argument("TruncSeries order must be >= 0");
    }
    TruncSeries(int order, std::vector<C> coeffs) : TruncSeries(order)
    {
        for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
            c_[i] = coeffs[i];
    }
    static TruncSeries constant(int order, const C& c)
    {
        TruncSeries s(order);
        s.c_[0] = c;
        return s;
    }
    static TruncSeries variable(int order)
    {
        TruncSeries s(order);
        if (order >= 1)
            s.c_[1] = C(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int i) const { return c_.at(i); }
    C& operator[](int i) { return c_.at(i); }
    C coeff(int i) const { return (i >= 0 && i <= order()) ? c_[i] : C(0); }

    TruncSeries truncated(int order) const
    {
        TruncSeries r(std::min(order, this->order()));
        for (int i = 0; i <= r.order(); ++i)
            r.c_[i] = c_[i];
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o)
    {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries operator-() const
    {
        TruncSeries r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }
    TruncSeries& operator*=(const BigRational& s)
    {
        for (auto& x : c_)
            x *= s;
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const BigRational& s) { return a *= s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.c_[i] == C(0))
                continue;
            for (int j = 0; i + j <= r.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

    TruncSeries scaled_by_coeff(const C& s) const
    {
        TruncSeries r = *this;
        for (auto& x : r.c_)
            x = x * s;
        return r;
    }

    // Multiply by x^k, k >= 0, keeping the order.
    TruncSeries shifted(int k) const
    {
        TruncSeries r(order());
        for (int i = 0; i + k <= order(); ++i)
            r.c_[i + k] = c_[i];
        return r;
    }

    TruncSeries derivative() const
    {
        TruncSeries r(std::max(order() - 1, 0));
        for (int i = 1; i <= order(); ++i)
            r.c_[i - 1] = c_[i] * BigRational(i);
        return r;
    }

    TruncSeries integral() const
    {
        TruncSeries r(order() + 1);
        for (int i = 0; i <= order(); ++i)
            r.c_[i + 1] = c_[i] * BigRational(1, i + 1);
        return r;
    }

    // 1/f; needs an invertible rational constant term.
    TruncSeries inverse() const
    {
        const BigRational c0 = scalar_constant();
        if (c0 == 0)
            throw std::domain_error("TruncSeries inverse: zero constant term");
        BigRational inv0 = 1 / c0;
        TruncSeries r(order());
        r.c_[0] = C(inv0);
        for (int n = 1; n <= order(); ++n) {
            C s(0);
            for (int k = 1; k <= n; ++k)
                s += c_[k] * r.c_[n - k];
            r.c_[n] = -(s * inv0);
        }
        return r;
    }

    TruncSeries pow(int k) const
    {
        if (k < 0)
            return inverse().pow(-k);
        TruncSeries r = constant(order(), C(1)), b = *this;
        while (k > 0) {
            if (k & 1)
                r = r * b;
            k >>= 1;
            if (k)
                b = b * b;
        }
        return r;
    }

    // Needs constant term 0.
    TruncSeries exp() const
    {
        if (!(c_[0] == C(0)))
            throw std::domain_error("TruncSeries exp: nonzero constant term");
        TruncSeries r(order());
        r.c_[0] = C(1);
        for (int n = 1; n <= order(); ++n) {
            C s(0);
            for (int k = 1; k <= n; ++k)
                s += (c_[k] * r.c_[n - k]) * BigRational(k);
            r.c_[n] = s * BigRational(1, n);
        }
        return r;
    }

    // Needs constant term 1.
    TruncSeries log() const
    {
        if (!(c_[0] == C(1)))
            throw std::domain_error("TruncSeries log: constant term is not 1");
        TruncSeries r(order());
        for (int n = 1; n <= order(); ++n) {
            C s(0);
            for (int k = 1; k < n; ++k)
                s += (r.c_[k] * c_[n - k]) * BigRational(k);
            r.c_[n] = c_[n] - s * BigRational(1, n);
        }
        return r;
    }

    // this(g(x)); g needs zero constant term.
    TruncSeries compose(const TruncSeries& g) const
    {
        if (!(g.c_[0] == C(0)))
            throw std::domain_error("TruncSeries compose: inner series has nonzero constant term");
        const int K = std::min(order(), g.order());
        TruncSeries r = constant(K, C(0));
        for (int i = order(); i >= 0; --i) {
            r = r * g.truncated(K);
            r.c_[0] += c_[i];
        }
        return r.truncated(K);
    }

    // g with f(g(x)) = x; needs c_0 = 0 and c_1 a nonzero rational.
    TruncSeries reversion() const
    {
        if (!(c_[0] == C(0)))
            throw std::domain_error("reversion: nonzero constant term");
        if (order() < 1 || c_[1] == C(0))
            throw std::domain_error("reversion: zero linear coefficient");
        const BigRational inv1 = 1 / scalar_coeff(1);
        TruncSeries g(order());
        g.c_[1] = C(inv1);
        // Newton-free coefficient solve: fix g_n from [x^n] f(g) = 0.
        for (int n = 2; n <= order(); ++n) {
            TruncSeries fg = truncated(n).compose(g.truncated(n));
            g.c_[n] = -(fg.c_[n] * inv1);
        }
        return g;
    }

    std::vector<C>& data() { return c_; }
    const std::vector<C>& data() const { return c_; }

private:
    std::vector<C> c_;

    void shrink_to(int o)
    {
        if (o < order())
            c_.resize(o + 1);
    }

    BigRational scalar_constant() const { return scalar_coeff(0); }
    BigRational scalar_coeff(int i) const;
};

template <>
inline BigRational TruncSeries<BigRational>::scalar_coeff(int i) const
{
    return c_[i];
}

template <>
inline BigRational TruncSeries<HbarLaurent>::scalar_coeff(int i) const
{
    const auto& c = c_[i];
    if (!(c.is_zero() || (c.low() == 0 && c.high() == 0)))
        throw std::domain_error("coefficient is not a rational constant");
    return c[0];
}

using QSeries = TruncSeries<BigRational>;
using HSeries = TruncSeries<HbarLaurent>;

// Substitute the single variable of an arity-1 Laurent polynomial by a
// series whose constant term is invertible (for negative powers).
QSeries substitute_series(const LaurentPoly& p, const QSeries& s);

} // namespace tqc
