#include "tqc/trres.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace tqc {

namespace {

// v_a + s v_b with a < b and s = +-1.
struct Lin {
    int a, b, s;
    auto operator<=>(const Lin&) const = default;
};

using Den = std::map<Lin, int>;

struct Frac {
    LaurentPoly num;
    Den den;
};

// v_i + s v_j = eps * Lin
std::pair<Lin, int> make_form(int i, int j, int s)
{
    if (i == j)
        throw std::logic_error("degenerate linear form");
    if (i < j)
        return {Lin{i, j, s}, 1};
    return {Lin{j, i, s}, s};
}

LaurentPoly linear_poly(int arity, const Lin& L)
{
    return LaurentPoly::variable(arity, L.a) + LaurentPoly::variable(arity, L.b) * BigRational(L.s);
}

// Evaluate num/den at v_T = -s v_k. Forms through v_T become forms in
// the remaining variables, or monomials 2 v_k.
Frac eval_at(const LaurentPoly& num, const Den& den, int T, int k, int s)
{
    const int A = num.arity();
    std::vector<int> map(A), sign(A, 1);
    for (int i = 0; i < A; ++i)
        map[i] = i;
    map[T] = k;
    sign[T] = -s;
    Frac out{num.remap(A, map, sign), {}};

    int mono_k = 0;
    BigRational mono_c = 1;
    for (const auto& [c, m] : den) {
        if (c.b != T) {
            out.den[c] += m;
            continue;
        }
        const int ns = -c.s * s; // v_a + c.s v_T -> v_a + ns v_k
        if (c.a == k) {
            if (ns == -1)
                throw std::runtime_error("coincident poles in residue evaluation");
            mono_k += m;
            for (int i = 0; i < m; ++i)
                mono_c *= 2;
            continue;
        }
        auto [form, eps] = make_form(c.a, k, ns);
        out.den[form] += m;
        if (eps < 0 && (m % 2))
            out.num = -out.num;
    }
    if (mono_k > 0) {
        std::vector<int> e(A, 0);
        e[k] = mono_k;
        out.num = out.num.divide_monomial(e, mono_c);
    }
    return out;
}

// Res_{t=a} of num/den where den contains L = (k, T, s) with multiplicity 1 or 2.
std::vector<Frac> residue(const Frac& term, const Lin& L, int T)
{
    const int m = term.den.at(L);
    const int k = L.a, s = L.s;
    Den rest = term.den;
    rest.erase(L);

    std::vector<Frac> out;
    if (m == 1) {
        // 1/(v_k + s v_T) = s/(t - a)
        Frac f = eval_at(term.num, rest, T, k, s);
        if (s < 0)
            f.num = -f.num;
        out.push_back(std::move(f));
        return out;
    }
    if (m != 2)
        throw std::runtime_error("pole of order > 2 in residue computation");

    // d/dt (N/R) = N'/R - N sum_c m_c c.s / (R c)
    out.push_back(eval_at(term.num.derivative(T), rest, T, k, s));
    for (const auto& [c, mc] : rest) {
        if (c.b != T)
            continue;
        Den d = rest;
        d[c] += 1;
        LaurentPoly n = term.num * BigRational(-mc * c.s);
        out.push_back(eval_at(n, d, T, k, s));
    }
    return out;
}

Frac multiply(const Frac& x, const Frac& y)
{
    Frac r{x.num * y.num, x.den};
    for (const auto& [c, m] : y.den)
        r.den[c] += m;
    return r;
}

// Sum of fractions whose denominators must cancel.
LaurentPoly combine_exact(int arity, const std::vector<Frac>& fracs)
{
    std::map<Den, LaurentPoly> groups;
    for (const auto& f : fracs) {
        if (f.num.is_zero())
            continue;
        auto it = groups.find(f.den);
        if (it == groups.end())
            groups.emplace(f.den, f.num);
        else
            it->second += f.num;
    }
    Den common;
    for (const auto& [den, num] : groups) {
        if (num.is_zero())
            continue;
        for (const auto& [c, m] : den)
            common[c] = std::max(common[c], m);
    }
    LaurentPoly total(arity);
    for (const auto& [den, num] : groups) {
        if (num.is_zero())
            continue;
        LaurentPoly n = num;
        for (const auto& [c, m] : common) {
            auto it = den.find(c);
            int have = it == den.end() ? 0 : it->second;
            if (m > have)
                n = n * linear_poly(arity, c).pow(m - have);
        }
        total += n;
    }
    for (const auto& [c, m] : common)
        for (int i = 0; i < m; ++i)
            total = total.divide_linear(c.a, c.b, BigRational(-c.s));
    return total;
}

} // namespace

SpectralCurveSpec airy_curve()
{
    RationalFunction t = RationalFunction::x();
    return SpectralCurveSpec{"airy", RationalFunction(4) / t.pow(2), RationalFunction(-2) / t};
}

SpectralCurveSpec catalan_curve()
{
    RationalFunction t = RationalFunction::x();
    RationalFunction one(1);
    return SpectralCurveSpec{"catalan", RationalFunction(2) + RationalFunction(4) / (t.pow(2) - one),
                             -(t + one) / (t - one)};
}

LaurentPoly kernel(const SpectralCurveSpec& spec)
{
    RationalFunction f = spec.eta();
    RationalFunction fm = f.compose(-RationalFunction::x());
    RationalFunction sum = f + fm;
    if (sum.is_zero())
        throw std::domain_error("kernel: degenerate eta");
    RationalFunction p = RationalFunction(1) / (RationalFunction(2) * sum);
    if (!p.is_laurent())
        throw std::domain_error("kernel: prefactor is not a Laurent polynomial");
    return p.to_laurent();
}

TrEngine::TrEngine(SpectralCurveSpec spec) : spec_(std::move(spec)), kernel_(kernel(spec_)) {}

const LaurentPoly& TrEngine::W(int g, int n)
{
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
        throw std::domain_error("W_{g,n} requires 2g-2+n > 0");
    auto key = std::make_pair(g, n);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    LaurentPoly w = compute(g, n);
    return memo_.emplace(key, std::move(w)).first->second;
}

LaurentPoly TrEngine::compute(int g, int n)
{
    const int A = n + 1;
    const int T = n;

    // Bracket terms in (t_1..t_n, t).
    std::vector<Frac> bracket;

    if (g >= 1) {
        if (g - 1 == 0 && n + 1 == 2) {
            // W_{0,2}(t, -t) with dt d(-t)
            bracket.push_back(Frac{LaurentPoly::monomial(A, [&] {
                                       std::vector<int> e(A, 0);
                                       e[T] = -2;
                                       return e;
                                   }(), make_rational(-1, 4)),
                                   {}});
        } else {
            const LaurentPoly& w = W(g - 1, n + 1);
            std::vector<int> map(n + 1), sign(n + 1, 1);
            map[0] = T;
            map[1] = T;
            sign[1] = -1;
            for (int j = 2; j <= n; ++j)
                map[j] = j - 1;
            bracket.push_back(Frac{-w.remap(A, map, sign), {}});
        }
    }

    const int r = n - 1; // others t_2..t_n at indices 1..n-1
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<int> I, J;
            for (int k = 0; k < r; ++k)
                ((mask >> k) & 1u ? I : J).push_back(k + 1);
            const int n1 = static_cast<int>(I.size()) + 1, n2 = static_cast<int>(J.size()) + 1;
            if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1))
                continue;

            auto factor = [&](int gg, int nn, const std::vector<int>& idx, int tsign) -> Frac {
                if (gg == 0 && nn == 2) {
                    // 1/(tsign*t - t_k)^2
                    Frac f{LaurentPoly::constant(A, 1), {}};
                    f.den[Lin{idx[0], T, tsign > 0 ? -1 : 1}] = 2;
                    return f;
                }
                const LaurentPoly& w = W(gg, nn);
                std::vector<int> map(nn), sign(nn, 1);
                map[0] = T;
                sign[0] = tsign;
                for (int i = 1; i < nn; ++i)
                    map[i] = idx[i - 1];
                return Frac{w.remap(A, map, sign), {}};
            };
            Frac f1 = factor(g1, n1, I, +1);
            Frac f2 = factor(g2, n2, J, -1);
            Frac prod = multiply(f1, f2);
            prod.num = -prod.num; // d(-t)
            bracket.push_back(std::move(prod));
        }
    }

    const LaurentPoly P = kernel_.remap(A, {T});
    std::vector<Frac> integrand;
    for (const auto& b : bracket) {
        LaurentPoly pn = P * b.num;
        Frac plus{pn, b.den};
        plus.den[Lin{0, T, +1}] += 1; // 1/(t + t_1)
        Frac minus{-pn, b.den};
        minus.den[Lin{0, T, -1}] += 1; // 1/(t - t_1) = -1/(t_1 - t)
        integrand.push_back(std::move(plus));
        integrand.push_back(std::move(minus));
    }

    std::vector<Frac> residues;
    for (const auto& term : integrand) {
        for (const auto& [c, m] : term.den) {
            if (c.b != T)
                continue;
            auto res = residue(term, c, T);
            for (auto& x : res)
                residues.push_back(std::move(x));
        }
    }

    LaurentPoly total;
    try {
        total = combine_exact(A, residues);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error("W_{" + std::to_string(g) + "," + std::to_string(n) +
                                 "}: surviving pole at t_i = +-t_j (" + e.what() + ")");
    }
    if (total.involves(T))
        throw std::logic_error("integration variable survived the residue computation");
    std::vector<int> map(A);
    for (int i = 0; i < n; ++i)
        map[i] = i;
    map[T] = -1;
    return total.remap(n, map);
}

TrEngine& airy_engine()
{
    static TrEngine e(airy_curve());
    return e;
}

TrEngine& catalan_engine()
{
    static TrEngine e(catalan_curve());
    return e;
}

LaurentPoly airy_free_energy(int g, int n)
{
    LaurentPoly f = airy_engine().W(g, n);
    for (int i = 0; i < n; ++i) {
        if (f.min_degree(i) < 0)
            throw std::logic_error("Airy W has a pole at t = 0");
        f = f.antiderivative(i);
    }
    return f;
}

std::map<std::vector<int>, BigRational> intersection_numbers(int g, int n)
{
    static std::map<std::pair<int, int>, std::map<std::vector<int>, BigRational>> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    if (auto it = cache.find({g, n}); it != cache.end())
        return it->second;

    const int chi = 2 * g - 2 + n;
    LaurentPoly F = airy_free_energy(g, n);
    std::map<std::vector<int>, BigRational> out;
    for (const auto& [k, c] : F.terms()) {
        std::vector<int> e = F.exponents(k);
        std::vector<int> d(n);
        int sum_d = 0, sum_e = 0;
        BigInt dfac = 1;
        for (int i = 0; i < n; ++i) {
            if (e[i] % 2 == 0)
                throw std::runtime_error("Airy free energy has an even exponent");
            d[i] = (e[i] - 1) / 2;
            sum_d += d[i];
            sum_e += e[i];
            dfac *= double_factorial(2 * d[i] - 1);
        }
        if (sum_d != 3 * g - 3 + n)
            throw std::runtime_error("intersection number violates the dimension constraint");
        BigRational v = c * BigRational(BigInt(1) << (chi + sum_e)) / BigRational(dfac);
        if (n % 2)
            v = -v;
        std::sort(d.begin(), d.end(), std::greater<>());
        auto [it, inserted] = out.emplace(d, v);
        if (!inserted && it->second != v)
            throw std::runtime_error("Airy free energy is not symmetric");
    }
    cache.emplace(std::make_pair(g, n), out);
    return out;
}

BigRational intersection_number(int g, const std::vector<int>& d)
{
    const int n = static_cast<int>(d.size());
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
        throw std::domain_error("intersection numbers need 2g-2+n > 0");
    int sum = 0;
    for (int x : d) {
        if (x < 0)
            throw std::domain_error("negative psi exponent");
        sum += x;
    }
    if (sum != 3 * g - 3 + n)
        return 0;
    std::vector<int> key = d;
    std::sort(key.begin(), key.end(), std::greater<>());
    auto table = intersection_numbers(g, n);
    auto it = table.find(key);
    return it == table.end() ? BigRational(0) : it->second;
}

LaurentPoly airy_polynomial_from_intersections(int g, int n)
{
    const int chi = 2 * g - 2 + n;
    LaurentPoly F(n);
    // every d with sum 3g-3+n, all orderings
    std::vector<int> d(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            d[i] = left;
            BigRational v = intersection_number(g, d);
            if (v == 0)
                return;
            std::vector<int> e(n);
            int sum_e = 0;
            BigInt dfac = 1;
            for (int j = 0; j < n; ++j) {
                e[j] = 2 * d[j] + 1;
                sum_e += e[j];
                dfac *= double_factorial(2 * d[j] - 1);
            }
            BigRational c = v * BigRational(dfac) / BigRational(BigInt(1) << (chi + sum_e));
            if (n % 2)
                c = -c;
            F += LaurentPoly::monomial(n, e, c);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, 3 * g - 3 + n);
    return F;
}

} // namespace tqc
