#include "tqc/freeenergy.hpp"

#include "tqc/catalan.hpp"
#include "tqc/lattice.hpp"
#include "tqc/trres.hpp"

#include <functional>
#include <stdexcept>

namespace tqc {

namespace {

// (s^2-1)^k / s^2 in variable v.
LaurentPoly ramification_factor(int arity, int v, int k)
{
    LaurentPoly s = LaurentPoly::variable(arity, v);
    LaurentPoly one = LaurentPoly::constant(arity, 1);
    std::vector<int> e(arity, 0);
    e[v] = -2;
    return (s * s - one).pow(k) * LaurentPoly::monomial(arity, e);
}

// Place a poly of arity idx.size() into the given variables of an arity-A poly.
LaurentPoly embed(const LaurentPoly& p, int A, const std::vector<int>& idx)
{
    return p.remap(A, idx);
}

std::string gn(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

} // namespace

LaurentPoly f11()
{
    LaurentPoly t = LaurentPoly::variable(1, 0);
    LaurentPoly one = LaurentPoly::constant(1, 1);
    LaurentPoly tinv = LaurentPoly::monomial(1, {-1});
    return (t + one).pow(4) * LaurentPoly::monomial(1, {-2}, make_rational(-1, 384)) *
           (t - LaurentPoly::constant(1, 4) + tinv);
}

LaurentPoly f03()
{
    LaurentPoly r = LaurentPoly::constant(3, make_rational(-1, 16));
    for (int i = 0; i < 3; ++i)
        r = r * (LaurentPoly::variable(3, i) + LaurentPoly::constant(3, 1));
    return r * (LaurentPoly::constant(3, 1) + LaurentPoly::monomial(3, {-1, -1, -1}));
}

const LaurentPoly& FreeEnergyTable::get(int g, int n)
{
    if (g < 0 || n < 1 || 2 * g - 2 + n < 1)
        throw std::domain_error("F^C_{g,n} needs 2g-2+n >= 1");
    auto key = std::make_pair(g, n);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    LaurentPoly p;
    if (g == 1 && n == 1)
        p = f11();
    else if (g == 0 && n == 3)
        p = f03();
    else
        p = compute(g, n);
    return memo_.emplace(key, std::move(p)).first->second;
}

const LaurentPoly& FreeEnergyTable::d1(int g, int n)
{
    auto key = std::make_pair(g, n);
    if (auto it = d1_.find(key); it != d1_.end())
        return it->second;
    LaurentPoly d = get(g, n).derivative(0);
    return d1_.emplace(key, std::move(d)).first->second;
}

LaurentPoly FreeEnergyTable::compute(int g, int n)
{
    const int A = n;
    const LaurentPoly cubic1 = ramification_factor(A, 0, 3);
    const LaurentPoly square1 = ramification_factor(A, 0, 2);
    LaurentPoly rhs(A);

    // sum over j of the t_1 <-> t_j exchange terms
    if (n >= 2 && 2 * g - 2 + (n - 1) >= 1) {
        const LaurentPoly& Fsmall = get(g, n - 1);
        for (int j = 1; j < n; ++j) {
            std::vector<int> idx1, idxj;
            idx1.push_back(0);
            idxj.push_back(j);
            for (int k = 1; k < n; ++k) {
                if (k == j)
                    continue;
                idx1.push_back(k);
                idxj.push_back(k);
            }
            LaurentPoly G1 = embed(Fsmall, A, idx1).derivative(0);
            LaurentPoly Gj = embed(Fsmall, A, idxj).derivative(j);
            LaurentPoly diff = cubic1 * G1 - ramification_factor(A, j, 3) * Gj;
            LaurentPoly q;
            try {
                q = diff.divide_linear(0, j, 1).divide_linear(0, j, -1);
            } catch (const std::runtime_error&) {
                throw std::runtime_error("F^C" + gn(g, n) + ": inexact division by t_1^2 - t_j^2");
            }
            rhs -= q * LaurentPoly::variable(A, j) * make_rational(1, 16);
            rhs -= square1 * G1 * make_rational(1, 16);
        }
    }

    LaurentPoly quad(A);
    if (g >= 1 && 2 * (g - 1) - 2 + (n + 1) >= 1) {
        LaurentPoly D = get(g - 1, n + 1).derivative(0).derivative(1);
        std::vector<int> idx(n + 1);
        idx[0] = 0;
        idx[1] = 0;
        for (int k = 2; k <= n; ++k)
            idx[k] = k - 1;
        quad += embed(D, A, idx);
    }

    const int r = n - 1;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<int> I{0}, J{0};
            for (int k = 0; k < r; ++k)
                ((mask >> k) & 1u ? I : J).push_back(k + 1);
            const int n1 = static_cast<int>(I.size()), n2 = static_cast<int>(J.size());
            if (2 * g1 - 2 + n1 <= 0 || 2 * g2 - 2 + n2 <= 0)
                continue;
            quad += embed(d1(g1, n1), A, I) * embed(d1(g2, n2), A, J);
        }
    }
    rhs -= cubic1 * quad * make_rational(1, 32);

    LaurentPoly prim;
    try {
        prim = rhs.antiderivative(0);
    } catch (const std::domain_error&) {
        throw std::runtime_error("F^C" + gn(g, n) + ": nonzero t_1^{-1} coefficient");
    }
    LaurentPoly F = prim - prim.substitute(0, BigRational(-1));
    if (!F.is_symmetric())
        throw std::runtime_error("F^C" + gn(g, n) + ": result is not symmetric");
    return F;
}

FreeEnergyTable& default_free_energies()
{
    static FreeEnergyTable table;
    return table;
}

const LaurentPoly& fC(int g, int n) { return default_free_energies().get(g, n); }

PropertyReport check_properties(const FreeEnergyC& F)
{
    PropertyReport rep;
    const int g = F.g, n = F.n;
    const int chi = 2 * g - 2 + n;
    const LaurentPoly& p = F.poly;

    rep.degree = p.total_degree() == 3 * chi;
    if (!rep.degree)
        rep.failures.push_back("total degree " + std::to_string(p.total_degree()) + " != " + std::to_string(3 * chi));

    LaurentPoly inv = p;
    for (int i = 0; i < n; ++i)
        inv = inv.invert_variable(i);
    rep.reciprocity = inv == p;
    if (!rep.reciprocity) {
        LaurentPoly d = inv - p;
        rep.failures.push_back("reciprocity fails, e.g. term " + LaurentPoly::from_sorted(n, {d.terms().front()}).str());
    }

    rep.vanishing = true;
    for (int i = 0; i < n; ++i) {
        LaurentPoly v = p.substitute(i, BigRational(-1));
        if (!v.is_zero()) {
            rep.vanishing = false;
            rep.failures.push_back("F(t_" + std::to_string(i + 1) + " = -1) = " + v.str());
            break;
        }
    }

    BigRational diag = p.evaluate(std::vector<BigRational>(n, BigRational(1)));
    BigRational expected = harer_zagier_chi(g, n);
    if (n % 2)
        expected = -expected;
    rep.euler = diag == expected;
    if (!rep.euler)
        rep.failures.push_back("F(1,...,1) = " + to_string(diag) + ", expected " + to_string(expected));

    LaurentPoly top = p.homogeneous_part(3 * chi);
    LaurentPoly airy = airy_polynomial_from_intersections(g, n);
    rep.highest = top == airy;
    if (!rep.highest) {
        LaurentPoly d = top - airy;
        rep.failures.push_back("highest part differs by " + LaurentPoly::from_sorted(n, {d.terms().front()}).str() + " ...");
    }
    return rep;
}

ChartSeries ChartSeries::build(int K)
{
    ChartSeries c;
    c.K = K;
    c.z_of_x = z_series(std::max(K, 1)).truncated(K);
    QSeries one = QSeries::constant(K, 1);
    c.t_of_x = (c.z_of_x + one) * (c.z_of_x - one).inverse();
    QSeries q = QSeries::variable(K);
    c.t_of_q = -((one + q) * (one - q).inverse());
    return c;
}

LaurentPoly expand_in_chart(const LaurentPoly& F, const QSeries& s, int K)
{
    const int A = F.arity();
    const QSeries sK = s.truncated(K);
    std::map<int, QSeries> powers;
    auto power = [&](int e) -> const QSeries& {
        auto it = powers.find(e);
        if (it == powers.end())
            it = powers.emplace(e, sK.pow(e)).first;
        return it->second;
    };
    LaurentPoly cur = F;
    for (int v = 0; v < A; ++v) {
        LaurentPoly next(A);
        for (const auto& [e, coeff] : cur.coefficients_in(v)) {
            const QSeries& se = power(e);
            std::vector<int> ex(A, 0);
            for (int mu = 0; mu <= K; ++mu) {
                if (se[mu] == 0)
                    continue;
                ex[v] = mu;
                next += coeff * LaurentPoly::monomial(A, ex, se[mu]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

LaplaceReport laplace_match(int g, int n, int mu_max)
{
    LaplaceReport rep;
    const LaurentPoly& F = fC(g, n);
    ChartSeries chart = ChartSeries::build(mu_max);
    LaurentPoly X = expand_in_chart(F, chart.t_of_x, mu_max);

    std::vector<int> mu(n, 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            BigRational prod = 1;
            for (int m : mu)
                prod *= m;
            BigRational expected = catalan_general(g, n, mu) / prod;
            BigRational got = X.coefficient(mu);
            ++rep.checked;
            if (expected != got)
                rep.mismatches.push_back({mu, expected, got});
            return;
        }
        for (int m = 1; m <= mu_max; ++m) {
            mu[i] = m;
            rec(i + 1);
        }
    };
    rec(0);

    // no terms with some mu_i = 0: F vanishes at t_i = -1
    for (const auto& [k, c] : X.terms()) {
        auto e = X.exponents(k);
        for (int x : e)
            if (x == 0) {
                rep.mismatches.push_back({e, BigRational(0), c});
                break;
            }
    }
    return rep;
}

LaurentPoly principal_Sm(int m)
{
    if (m < 2)
        throw std::domain_error("principal_Sm needs m >= 2");
    LaurentPoly S(1);
    for (int g = 0; 2 * g - 2 <= m - 1; ++g) {
        int n = m - 1 - (2 * g - 2);
        if (n < 1)
            continue;
        const LaurentPoly& F = fC(g, n);
        LaurentPoly diag = F.remap(1, std::vector<int>(n, 0));
        S += diag * make_rational(BigInt(1), factorial(n));
    }
    return S;
}

QSeries principal_Sm_series(int m, int K)
{
    ChartSeries chart = ChartSeries::build(K);
    return substitute_series(principal_Sm(m), chart.t_of_x);
}

} // namespace tqc
