#include "tqc/laurent_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tqc {

namespace {

constexpr int kBias = 128;
constexpr LaurentPoly::Key kZeroKey = 0x8080808080808080ULL;

inline int shift_of(int var) { return 8 * (7 - var); }

inline int byte_at(LaurentPoly::Key k, int var)
{
    return static_cast<int>((k >> shift_of(var)) & 0xFF) - kBias;
}

inline LaurentPoly::Key with_byte(LaurentPoly::Key k, int var, int e)
{
    const int s = shift_of(var);
    k &= ~(LaurentPoly::Key(0xFF) << s);
    return k | (LaurentPoly::Key(e + kBias) << s);
}

inline LaurentPoly::Key add_keys(LaurentPoly::Key a, LaurentPoly::Key b) { return a + b - kZeroKey; }

void check_exponent(int e)
{
    if (e > LaurentPoly::kMaxExponent || e < -LaurentPoly::kMaxExponent)
        throw std::overflow_error("LaurentPoly exponent out of range");
}

void sort_and_compact(std::vector<LaurentPoly::Term>& t)
{
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LaurentPoly::Term> out;
    out.reserve(t.size());
    for (auto& term : t) {
        if (!out.empty() && out.back().first == term.first)
            out.back().second += term.second;
        else
            out.push_back(std::move(term));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& x) { return x.second == 0; }), out.end());
    t.swap(out);
}

} // namespace

LaurentPoly::LaurentPoly(int arity) : arity_(arity)
{
    if (arity < 0 || arity > kMaxArity)
        throw std::invalid_argument("LaurentPoly arity out of range");
}

LaurentPoly LaurentPoly::from_sorted(int arity, std::vector<Term> terms)
{
    LaurentPoly p(arity);
    p.terms_ = std::move(terms);
    return p;
}

LaurentPoly LaurentPoly::constant(int arity, const BigRational& c)
{
    LaurentPoly p(arity);
    if (c != 0)
        p.terms_.emplace_back(kZeroKey, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const std::vector<int>& exps, const BigRational& c)
{
    LaurentPoly p(arity);
    if (c != 0)
        p.terms_.emplace_back(p.key_of(exps), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int arity, int var)
{
    std::vector<int> e(arity, 0);
    e.at(var) = 1;
    return monomial(arity, e);
}

std::vector<int> LaurentPoly::exponents(Key k) const
{
    std::vector<int> e(arity_);
    for (int i = 0; i < arity_; ++i)
        e[i] = byte_at(k, i);
    return e;
}

LaurentPoly::Key LaurentPoly::key_of(const std::vector<int>& exps) const
{
    if (static_cast<int>(exps.size()) != arity_)
        throw std::invalid_argument("exponent tuple has wrong length");
    Key k = kZeroKey;
    for (int i = 0; i < arity_; ++i) {
        check_exponent(exps[i]);
        k = with_byte(k, i, exps[i]);
    }
    return k;
}

int LaurentPoly::exponent_at(Key k, int var) { return byte_at(k, var); }

BigRational LaurentPoly::coefficient(const std::vector<int>& exps) const
{
    Key k = key_of(exps);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, Key key) { return t.first < key; });
    if (it != terms_.end() && it->first == k)
        return it->second;
    return 0;
}

BigRational LaurentPoly::constant_term() const { return coefficient(std::vector<int>(arity_, 0)); }

void LaurentPoly::check_arity(const LaurentPoly& o) const
{
    if (arity_ != o.arity_)
        throw std::invalid_argument("LaurentPoly arity mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_arity(o);
    if (o.terms_.empty())
        return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
            out.push_back(*b++);
        } else {
            BigRational s = a->second + b->second;
            if (s != 0)
                out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_.swap(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_arity(b);
    LaurentPoly r(a.arity_);
    if (a.is_zero() || b.is_zero())
        return r;
    for (int v = 0; v < a.arity_; ++v) {
        if (!a.involves(v) && !b.involves(v))
            continue;
        check_exponent(a.max_degree(v) + b.max_degree(v));
        check_exponent(a.min_degree(v) + b.min_degree(v));
    }
    if (a.size() == 1 || b.size() == 1) {
        const auto& m = a.size() == 1 ? a : b;
        const auto& p = a.size() == 1 ? b : a;
        const auto& [mk, mc] = m.terms_.front();
        r.terms_.reserve(p.size());
        for (const auto& [k, c] : p.terms_)
            r.terms_.emplace_back(add_keys(k, mk), c * mc);
        return r;
    }
    std::unordered_map<LaurentPoly::Key, BigRational> acc;
    acc.reserve(a.size() * b.size() / 2 + 16);
    BigRational prod;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            prod = ca * cb;
            acc[add_keys(ka, kb)] += prod;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0)
            r.terms_.emplace_back(k, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const
{
    if (k < 0) {
        if (terms_.size() != 1)
            throw std::domain_error("negative power of a non-monomial");
        auto e = exponents(terms_.front().first);
        for (auto& x : e)
            x *= k;
        BigRational c = 1 / terms_.front().second;
        BigRational ck = 1;
        for (int i = 0; i < -k; ++i)
            ck *= c;
        return monomial(arity_, e, ck);
    }
    LaurentPoly result = constant(arity_, 1), base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const std::vector<int>& exps) const
{
    return *this * monomial(arity_, exps);
}

LaurentPoly LaurentPoly::derivative(int var) const
{
    LaurentPoly r(arity_);
    for (const auto& [k, c] : terms_) {
        int e = byte_at(k, var);
        if (e == 0)
            continue;
        r.terms_.emplace_back(with_byte(k, var, e - 1), c * e);
    }
    // Lowering one byte keeps the relative order of keys.
    return r;
}

LaurentPoly LaurentPoly::antiderivative(int var) const
{
    LaurentPoly r(arity_);
    for (const auto& [k, c] : terms_) {
        int e = byte_at(k, var);
        if (e == -1)
            throw std::domain_error("antiderivative: t^-1 term present");
        check_exponent(e + 1);
        r.terms_.emplace_back(with_byte(k, var, e + 1), c / BigRational(e + 1));
    }
    return r;
}

int LaurentPoly::total_degree() const
{
    if (terms_.empty())
        return 0;
    int best = -1000000;
    for (const auto& t : terms_) {
        int d = 0;
        for (int i = 0; i < arity_; ++i)
            d += byte_at(t.first, i);
        best = std::max(best, d);
    }
    return best;
}

int LaurentPoly::min_total_degree() const
{
    if (terms_.empty())
        return 0;
    int best = 1000000;
    for (const auto& t : terms_) {
        int d = 0;
        for (int i = 0; i < arity_; ++i)
            d += byte_at(t.first, i);
        best = std::min(best, d);
    }
    return best;
}

int LaurentPoly::max_degree(int var) const
{
    if (terms_.empty())
        return 0;
    int best = -1000;
    for (const auto& t : terms_)
        best = std::max(best, byte_at(t.first, var));
    return best;
}

int LaurentPoly::min_degree(int var) const
{
    if (terms_.empty())
        return 0;
    int best = 1000;
    for (const auto& t : terms_)
        best = std::min(best, byte_at(t.first, var));
    return best;
}

bool LaurentPoly::involves(int var) const
{
    for (const auto& t : terms_)
        if (byte_at(t.first, var) != 0)
            return true;
    return false;
}

LaurentPoly LaurentPoly::homogeneous_part(int d) const
{
    LaurentPoly r(arity_);
    for (const auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < arity_; ++i)
            s += byte_at(t.first, i);
        if (s == d)
            r.terms_.push_back(t);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(int var, const BigRational& c) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, coef] : terms_) {
        int e = byte_at(k, var);
        if (e != 0 && c == 0) {
            if (e < 0)
                throw std::domain_error("substitute: negative power at zero");
            continue;
        }
        BigRational f = 1;
        BigRational base = e >= 0 ? c : 1 / c;
        for (int i = 0; i < std::abs(e); ++i)
            f *= base;
        out.emplace_back(with_byte(k, var, 0), coef * f);
    }
    sort_and_compact(out);
    return from_sorted(arity_, std::move(out));
}

LaurentPoly LaurentPoly::substitute(int var, const LaurentPoly& value) const
{
    check_arity(value);
    if (value.involves(var))
        throw std::invalid_argument("substitute: value involves the substituted variable");
    auto coeffs = coefficients_in(var);
    LaurentPoly r(arity_);
    for (auto& [e, c] : coeffs)
        r += c * value.pow(e);
    return r;
}

LaurentPoly LaurentPoly::remap(int new_arity, const std::vector<int>& map, const std::vector<int>& sign) const
{
    if (static_cast<int>(map.size()) != arity_)
        throw std::invalid_argument("remap: map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    std::vector<int> ne(new_arity);
    LaurentPoly tmp(new_arity);
    for (const auto& [k, c] : terms_) {
        std::fill(ne.begin(), ne.end(), 0);
        bool negate = false;
        for (int i = 0; i < arity_; ++i) {
            int e = byte_at(k, i);
            if (e == 0)
                continue;
            if (map[i] < 0 || map[i] >= new_arity)
                throw std::invalid_argument("remap: variable dropped but present");
            ne[map[i]] += e;
            if (!sign.empty() && sign[i] < 0 && (e % 2 != 0))
                negate = !negate;
        }
        out.emplace_back(tmp.key_of(ne), negate ? BigRational(-c) : c);
    }
    sort_and_compact(out);
    return from_sorted(new_arity, std::move(out));
}

LaurentPoly LaurentPoly::invert_variable(int var) const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.emplace_back(with_byte(k, var, -byte_at(k, var)), c);
    sort_and_compact(out);
    return from_sorted(arity_, std::move(out));
}

BigRational LaurentPoly::evaluate(const std::vector<BigRational>& point) const
{
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("evaluate: point has wrong length");
    BigRational s = 0;
    for (const auto& [k, c] : terms_) {
        BigRational v = c;
        for (int i = 0; i < arity_; ++i) {
            int e = byte_at(k, i);
            if (e == 0)
                continue;
            if (point[i] == 0) {
                if (e < 0)
                    throw std::domain_error("evaluate: negative power at zero");
                v = 0;
                break;
            }
            BigRational base = e > 0 ? point[i] : 1 / point[i];
            for (int j = 0; j < std::abs(e); ++j)
                v *= base;
        }
        s += v;
    }
    return s;
}

std::map<int, LaurentPoly> LaurentPoly::coefficients_in(int var) const
{
    std::map<int, std::vector<Term>> buckets;
    for (const auto& [k, c] : terms_)
        buckets[byte_at(k, var)].emplace_back(with_byte(k, var, 0), c);
    std::map<int, LaurentPoly> out;
    for (auto& [e, ts] : buckets) {
        std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.emplace(e, from_sorted(arity_, std::move(ts)));
    }
    return out;
}

LaurentPoly LaurentPoly::from_coefficients(int arity, int var, const std::map<int, LaurentPoly>& coeffs)
{
    std::vector<Term> out;
    for (const auto& [e, p] : coeffs) {
        check_exponent(e);
        for (const auto& [k, c] : p.terms_) {
            if (byte_at(k, var) != 0)
                throw std::invalid_argument("from_coefficients: coefficient involves the variable");
            out.emplace_back(with_byte(k, var, e), c);
        }
    }
    sort_and_compact(out);
    return from_sorted(arity, std::move(out));
}

LaurentPoly LaurentPoly::divide_linear(int a, int b, const BigRational& c) const
{
    if (a == b)
        throw std::invalid_argument("divide_linear: a == b");
    if (is_zero())
        return *this;
    auto coeffs = coefficients_in(a);
    const int lo = coeffs.begin()->first;
    const int hi = coeffs.rbegin()->first;
    if (hi == lo)
        throw std::runtime_error("divide_linear: nonzero remainder");

    std::vector<int> tb(arity_, 0);
    tb[b] = 1;
    const LaurentPoly ctb = monomial(arity_, tb, c);

    // N = sum_{k=lo}^{hi} n_k t_a^k; synthetic division by (t_a - c t_b)
    std::map<int, LaurentPoly> quot;
    LaurentPoly carry(arity_);
    for (int k = hi; k > lo; --k) {
        auto it = coeffs.find(k);
        LaurentPoly qk = carry;
        if (it != coeffs.end())
            qk += it->second;
        if (!qk.is_zero())
            quot.emplace(k - 1, qk);
        carry = qk * ctb;
    }
    LaurentPoly rem = carry + coeffs[lo];
    if (!rem.is_zero())
        throw std::runtime_error("divide_linear: nonzero remainder");
    return from_coefficients(arity_, a, quot);
}

LaurentPoly LaurentPoly::divide_monomial(const std::vector<int>& exps, const BigRational& c) const
{
    std::vector<int> neg(exps);
    for (auto& e : neg)
        e = -e;
    return *this * monomial(arity_, neg, 1 / c);
}

bool LaurentPoly::is_symmetric() const
{
    for (int i = 0; i + 1 < arity_; ++i) {
        std::vector<int> map(arity_);
        std::iota(map.begin(), map.end(), 0);
        std::swap(map[i], map[i + 1]);
        if (!(remap(arity_, map) == *this))
            return false;
    }
    return true;
}

std::vector<std::pair<std::vector<int>, BigRational>> LaurentPoly::graded_terms() const
{
    std::vector<std::pair<std::vector<int>, BigRational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.emplace_back(exponents(k), c);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        if (dx != dy)
            return dx < dy;
        return x.first < y.first;
    });
    return out;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : graded_terms()) {
        BigRational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = true;
        for (int x : e)
            if (x != 0)
                unit = false;
        if (a != 1 || unit)
            os << to_string(a);
        bool need_star = (a != 1 || unit);
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                os << "*";
            os << (i < static_cast<int>(names.size()) ? names[i] : "t" + std::to_string(i + 1));
            if (e[i] != 1)
                os << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly from_terms(int arity, const std::vector<std::pair<std::vector<int>, BigRational>>& terms)
{
    LaurentPoly r(arity);
    for (const auto& [e, c] : terms)
        r += LaurentPoly::monomial(arity, e, c);
    return r;
}

} // namespace tqc
