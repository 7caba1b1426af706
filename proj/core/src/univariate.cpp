#include "tqc/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tqc {

// ---------------------------------------------------------------- HbarLaurent

HbarLaurent::HbarLaurent(const BigRational& c)
{
    if (c != 0)
        c_.push_back(c);
}

HbarLaurent HbarLaurent::monomial(int e, const BigRational& c)
{
    HbarLaurent h(c);
    if (!h.is_zero())
        h.low_ = e;
    return h;
}

BigRational HbarLaurent::operator[](int e) const
{
    if (e < low_ || e > high() || c_.empty())
        return 0;
    return c_[e - low_];
}

void HbarLaurent::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
    std::size_t z = 0;
    while (z < c_.size() && c_[z] == 0)
        ++z;
    if (z > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
        low_ += static_cast<int>(z);
    }
    if (c_.empty())
        low_ = 0;
}

HbarLaurent& HbarLaurent::operator+=(const HbarLaurent& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<BigRational> r(hi - lo + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[low_ - lo + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[o.low_ - lo + i] += o.c_[i];
    low_ = lo;
    c_.swap(r);
    normalize();
    return *this;
}

HbarLaurent& HbarLaurent::operator-=(const HbarLaurent& o) { return *this += -o; }

HbarLaurent& HbarLaurent::operator*=(const BigRational& c)
{
    if (c == 0) {
        c_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

HbarLaurent HbarLaurent::operator-() const
{
    HbarLaurent r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

HbarLaurent operator*(const HbarLaurent& a, const HbarLaurent& b)
{
    HbarLaurent r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

HbarLaurent HbarLaurent::truncated_above(int e) const
{
    if (is_zero() || e >= high())
        return *this;
    HbarLaurent r;
    if (e < low_)
        return r;
    r.low_ = low_;
    r.c_.assign(c_.begin(), c_.begin() + (e - low_ + 1));
    r.normalize();
    return r;
}

HbarLaurent HbarLaurent::euler_derivative() const
{
    HbarLaurent r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] *= BigRational(low_ + static_cast<int>(i));
    r.normalize();
    return r;
}

BigRational HbarLaurent::evaluate(const BigRational& h) const
{
    BigRational s = 0;
    for (auto& [e, c] : terms()) {
        BigRational p = 1;
        BigRational base = e >= 0 ? h : 1 / h;
        for (int i = 0; i < std::abs(e); ++i)
            p *= base;
        s += c * p;
    }
    return s;
}

std::vector<std::pair<int, BigRational>> HbarLaurent::terms() const
{
    std::vector<std::pair<int, BigRational>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            out.emplace_back(low_ + static_cast<int>(i), c_[i]);
    return out;
}

std::string HbarLaurent::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms()) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        BigRational a = abs(c);
        if (e == 0)
            os << to_string(a);
        else {
            if (a != 1)
                os << to_string(a) << "*";
            os << "h";
            if (e != 1)
                os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

HbarLaurent pochhammer_hbar(const HbarLaurent& a, int n)
{
    if (n < 0)
        throw std::domain_error("pochhammer_hbar expects n >= 0");
    HbarLaurent r(1);
    for (int j = 0; j < n; ++j)
        r = r * (a + HbarLaurent(j));
    return r;
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const BigRational& c)
{
    if (c != 0)
        c_.push_back(c);
}

UPoly::UPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UPoly UPoly::monomial(int e, const BigRational& c)
{
    std::vector<BigRational> v(e + 1);
    v[e] = c;
    return UPoly(std::move(v));
}

void UPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigRational UPoly::operator[](int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[i];
}

int UPoly::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return 0;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    normalize();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly& UPoly::operator*=(const BigRational& c)
{
    for (auto& x : c_)
        x *= c;
    normalize();
    return *this;
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return UPoly();
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::pow(int k) const
{
    if (k < 0)
        throw std::domain_error("UPoly::pow expects k >= 0");
    UPoly r(1), b = *this;
    while (k > 0) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1)
        return UPoly();
    std::vector<BigRational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    return UPoly(std::move(r));
}

BigRational UPoly::evaluate(const BigRational& x) const
{
    BigRational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        s = s * x + *it;
    return s;
}

UPoly UPoly::compose(const UPoly& inner) const
{
    UPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * inner + UPoly(*it);
    return r;
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * BigRational(1 / leading());
}

UPoly UPoly::primitive() const
{
    if (is_zero())
        return *this;
    BigInt l = 1, g = 0;
    for (auto& c : c_)
        if (c != 0)
            l = ::lcm(l, c.get_den());
    for (auto& c : c_)
        if (c != 0)
            g = ::gcd(g, BigInt(c.get_num() * (l / c.get_den())));
    BigRational f = BigRational(l) / BigRational(g);
    if (leading() < 0)
        f = -f;
    return *this * f;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("UPoly division by zero");
    UPoly r = a;
    if (a.degree() < b.degree())
        return {UPoly(), r};
    std::vector<BigRational> q(a.degree() - b.degree() + 1);
    const BigRational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        BigRational f = r.leading() / lb;
        q[shift] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c_[shift + i] -= f * b.c_[i];
        r.normalize();
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<UPoly> UPoly::squarefree_decomposition() const
{
    std::vector<UPoly> out;
    if (degree() < 1)
        return out;
    UPoly f = monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UPoly ai = gcd(b, d);
        out.push_back(ai);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

std::string UPoly::str(const std::string& var) const
{
    return RationalFunction(*this).str(var);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const UPoly& num, const UPoly& den) : num_(num), den_(den)
{
    if (den.is_zero())
        throw std::domain_error("RationalFunction with zero denominator");
    reduce();
}

void RationalFunction::reduce()
{
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UPoly::divmod(num_, g).first;
        den_ = UPoly::divmod(den_, g).first;
    }
    BigRational l = den_.leading();
    if (l != 1) {
        num_ *= BigRational(1 / l);
        den_ *= BigRational(1 / l);
    }
}

RationalFunction RationalFunction::from_laurent(const LaurentPoly& p)
{
    if (p.arity() != 1)
        throw std::invalid_argument("from_laurent expects arity 1");
    if (p.is_zero())
        return RationalFunction();
    int lo = p.min_degree(0);
    int shift = lo < 0 ? -lo : 0;
    std::vector<BigRational> c(p.max_degree(0) + shift + 1);
    for (const auto& [k, v] : p.terms())
        c[LaurentPoly::exponent_at(k, 0) + shift] = v;
    return RationalFunction(UPoly(std::move(c)), UPoly::monomial(shift));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero())
        throw std::domain_error("RationalFunction division by zero");
    UPoly n = num_ * o.den_;
    UPoly d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    reduce();
    return *this;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::pow(int k) const
{
    if (k < 0)
        return RationalFunction(1) / pow(-k);
    return RationalFunction(num_.pow(k), den_.pow(k));
}

RationalFunction RationalFunction::derivative() const
{
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRational RationalFunction::evaluate(const BigRational& x) const
{
    BigRational d = den_.evaluate(x);
    if (d == 0)
        throw std::domain_error("RationalFunction evaluated at a pole");
    return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const
{
    // Horner on numerator and denominator separately.
    auto horner = [&](const UPoly& p) {
        RationalFunction r;
        for (int i = p.degree(); i >= 0; --i)
            r = r * inner + RationalFunction(p[i]);
        return r;
    };
    return horner(num_) / horner(den_);
}

bool RationalFunction::is_laurent() const
{
    return den_.degree() == den_.valuation();
}

LaurentPoly RationalFunction::to_laurent() const
{
    if (!is_laurent())
        throw std::domain_error("RationalFunction is not a Laurent polynomial");
    int shift = den_.degree();
    LaurentPoly r(1);
    for (int i = 0; i <= num_.degree(); ++i)
        if (num_[i] != 0)
            r += LaurentPoly::monomial(1, {i - shift}, num_[i] / den_.leading());
    return r;
}

std::string RationalFunction::str(const std::string& var) const
{
    auto poly = [&](const UPoly& p) {
        LaurentPoly lp(1);
        for (int i = 0; i <= p.degree(); ++i)
            if (p[i] != 0)
                lp += LaurentPoly::monomial(1, {i}, p[i]);
        return lp.str({var});
    };
    if (den_ == UPoly(1))
        return poly(num_);
    return "(" + poly(num_) + ")/(" + poly(den_) + ")";
}

} // namespace tqc

#include "tqc/trunc_series.hpp"

namespace tqc {

QSeries substitute_series(const LaurentPoly& p, const QSeries& s)
{
    if (p.arity() != 1)
        throw std::invalid_argument("substitute_series expects arity 1");
    QSeries r(s.order());
    if (p.is_zero())
        return r;
    const QSeries inv = p.min_degree(0) < 0 ? s.inverse() : QSeries(s.order());
    for (const auto& [k, c] : p.terms()) {
        int e = LaurentPoly::exponent_at(k, 0);
        r += (e >= 0 ? s.pow(e) : inv.pow(-e)) * c;
    }
    return r;
}

BigRational residue_at(const RationalFunction& f, const BigRational& a)
{
    // x = a + s; den(a + s) = s^m D(s) with D(0) != 0
    const UPoly shift(std::vector<BigRational>{a, 1});
    UPoly num = f.num().compose(shift);
    UPoly den = f.den().compose(shift);
    const int m = den.valuation();
    if (m == 0)
        return 0;
    std::vector<BigRational> d(den.coeffs().begin() + m, den.coeffs().end());
    // [s^{m-1}] num(s) / D(s) by series division
    std::vector<BigRational> q(m, BigRational(0));
    for (int k = 0; k < m; ++k) {
        BigRational acc = num[k];
        for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j)
            acc -= d[j] * q[k - j];
        q[k] = acc / d[0];
    }
    return q[m - 1];
}

} // namespace tqc
