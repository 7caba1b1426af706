#include "tqc/wkb.hpp"

#include "tqc/catalan.hpp"
#include "tqc/freeenergy.hpp"
#include "tqc/trres.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tqc {

namespace {

RationalFunction t_var() { return RationalFunction::x(); }

RationalFunction recip_var() { return RationalFunction(UPoly(1), UPoly::x()); }

RationalFunction s1_on_branch(const QuantumCurveSpec& spec) { return spec.s1.compose(*spec.x_of_t); }
RationalFunction s2_on_branch(const QuantumCurveSpec& spec) { return spec.s2.compose(*spec.x_of_t); }

void require_parametrization(const QuantumCurveSpec& spec)
{
    if (!spec.has_parametrization())
        throw std::invalid_argument("quantum curve '" + spec.name + "' has no parametrization");
}

BigRational rpow(const BigRational& b, int e)
{
    BigRational r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

// (6k)!/((2k)!(3k)!)
BigRational gamma_ratio(int k)
{
    return make_rational(factorial(6 * k), factorial(2 * k) * factorial(3 * k));
}

// sum_{2g-2+n=k, n>0} (sign ? (-1)^n : 1)/n! sum_d <tau_d> prod |2d_i-1|!!
BigRational intersection_sum(int k, bool sign)
{
    BigRational total = 0;
    for (int g = 0; 2 * g - 2 < k; ++g) {
        const int n = k + 2 - 2 * g;
        if (n < 1)
            continue;
        BigRational part = 0;
        for (const auto& [d, v] : intersection_numbers(g, n)) {
            BigInt w = 1;
            for (int di : d)
                w *= double_factorial(std::abs(2 * di - 1));
            // n!/prod(mult!) orderings of a sorted tuple, divided by n!
            BigInt aut = 1;
            for (std::size_t i = 0; i < d.size();) {
                std::size_t j = i;
                while (j < d.size() && d[j] == d[i])
                    ++j;
                aut *= factorial(static_cast<long>(j - i));
                i = j;
            }
            part += v * BigRational(w) / BigRational(aut);
        }
        if (sign && n % 2)
            part = -part;
        total += part;
    }
    return total;
}

UPoly poly_lcm(const UPoly& a, const UPoly& b)
{
    return UPoly::divmod(a * b, UPoly::gcd(a, b)).first.monic();
}

// Common polynomial factor removed, integer primitive, top coefficient positive.
BiPoly normalize(std::vector<UPoly> c)
{
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
    if (c.empty())
        return BiPoly{};
    UPoly g;
    for (const auto& p : c)
        if (!p.is_zero())
            g = g.is_zero() ? p.monic() : UPoly::gcd(g, p);
    if (g.degree() > 0)
        for (auto& p : c)
            p = UPoly::divmod(p, g).first;

    BigInt den = 1, num = 0;
    for (const auto& p : c)
        for (const auto& q : p.coeffs()) {
            if (q == 0)
                continue;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
        }
    BigRational scale = make_rational(den, num);
    if (c.back().leading() < 0)
        scale = -scale;
    for (auto& p : c)
        p *= scale;
    return BiPoly{c};
}

// Clear denominators of c_0 + c_1 v + c_2 v^2 with rational-function coefficients.
BiPoly clear_denominators(const std::vector<RationalFunction>& c)
{
    UPoly L(1);
    for (const auto& r : c)
        L = poly_lcm(L, r.den());
    std::vector<UPoly> out;
    for (const auto& r : c)
        out.push_back(r.num() * UPoly::divmod(L, r.den()).first);
    return normalize(out);
}

// Order of vanishing at u = 0 (negative for a pole).
int valuation_at_zero(const RationalFunction& f) { return f.num().valuation() - f.den().valuation(); }

bool divides(const UPoly& d, const UPoly& p) { return UPoly::divmod(p, d).second.is_zero(); }

// Largest i with P^i | p.
int multiplicity(const UPoly& P, UPoly p)
{
    int i = 0;
    while (!p.is_zero() && divides(P, p)) {
        p = UPoly::divmod(p, P).first;
        ++i;
    }
    return i;
}

std::optional<int> pole_order(const RationalFunction& f, const UPoly& P)
{
    if (f.is_zero())
        return std::nullopt;
    return multiplicity(P, f.den()) - multiplicity(P, f.num());
}

std::vector<BigInt> positive_divisors(BigInt n)
{
    if (n < 0)
        n = -n;
    std::vector<BigInt> d;
    for (BigInt i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n)
                d.push_back(n / i);
        }
    return d;
}

// Rational roots of a squarefree polynomial, ascending.
std::vector<BigRational> rational_roots(const UPoly& p)
{
    std::vector<BigRational> roots;
    UPoly q = p.primitive();
    if (q.degree() < 1)
        return roots;
    int v = q.valuation();
    if (v > 0) {
        roots.push_back(0);
        q = UPoly::divmod(q, UPoly::monomial(v)).first;
    }
    if (q.degree() >= 1) {
        BigInt a0 = q[0].get_num(), an = q.leading().get_num();
        for (const auto& a : positive_divisors(a0))
            for (const auto& b : positive_divisors(an))
                for (int s : {1, -1}) {
                    BigRational r = make_rational(BigInt(s * a), b);
                    if (q.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

RationalFunction QuantumCurveSpec::semiclassical_residual() const
{
    require_parametrization(*this);
    const RationalFunction& y = *y_of_t;
    return y * y + s1_on_branch(*this) * y + s2_on_branch(*this);
}

QuantumCurveSpec airy_quantum_curve()
{
    QuantumCurveSpec s;
    s.name = "airy";
    s.s1 = RationalFunction(0);
    s.s2 = -RationalFunction::x();
    RationalFunction t = t_var();
    s.x_of_t = t * t;
    s.y_of_t = -t;
    return s;
}

QuantumCurveSpec catalan_quantum_curve()
{
    QuantumCurveSpec s;
    s.name = "catalan";
    s.s1 = RationalFunction::x();
    s.s2 = RationalFunction(1);
    RationalFunction t = t_var(), one(1);
    s.x_of_t = RationalFunction(2) * (t * t + one) / (t * t - one);
    s.y_of_t = -(t + one) / (t - one);
    return s;
}

RationalFunction d_dx(const QuantumCurveSpec& spec, const RationalFunction& f)
{
    require_parametrization(spec);
    return f.derivative() / spec.x_of_t->derivative();
}

WkbSeries wkb_hierarchy(const QuantumCurveSpec& spec, int M)
{
    require_parametrization(spec);
    if (M < 0)
        throw std::invalid_argument("wkb_hierarchy: M must be >= 0");
    WkbSeries out;
    const RationalFunction& y = *spec.y_of_t;
    out.dS.push_back(y);
    const RationalFunction denom = RationalFunction(2) * y + s1_on_branch(spec);
    if (denom.is_zero())
        throw std::domain_error("wkb_hierarchy: 2S'_0 + s1 vanishes identically");
    if (M >= 1)
        out.dS.push_back(-d_dx(spec, y) / denom);
    for (int m = 1; m + 1 <= M; ++m) {
        RationalFunction acc = d_dx(spec, out.dS[m]);
        for (int a = 1; a <= m; ++a)
            acc += out.dS[a] * out.dS[m + 1 - a];
        out.dS.push_back(-acc / denom);
    }

    if (spec.name == "airy") {
        // x = t^2: S'_m = k t^{-3(m-1)-2}, so S_m = k/(-3(m-1)/2) x^{-3(m-1)/2}
        out.airy_c.assign(M + 1, BigRational(0));
        for (int m = 2; m <= M; ++m) {
            const RationalFunction& d = out.dS[m];
            const int e = 3 * (m - 1) + 2;
            if (d.num().degree() != 0 || !(d.den() == UPoly::monomial(e)))
                throw std::runtime_error("Airy S'_" + std::to_string(m) + " is not a monomial in t");
            out.airy_c[m] = d.num()[0] / make_rational(-3 * (m - 1), 2);
        }
    }
    return out;
}

bool HierarchyReport::ok() const
{
    return std::all_of(residuals.begin(), residuals.end(), [](const RationalFunction& r) { return r.is_zero(); });
}

HierarchyReport check_hierarchy(const QuantumCurveSpec& spec, const std::vector<RationalFunction>& dS)
{
    require_parametrization(spec);
    HierarchyReport rep;
    if (dS.empty())
        return rep;
    const RationalFunction s1 = s1_on_branch(spec);
    rep.residuals.push_back(dS[0] * dS[0] + s1 * dS[0] + s2_on_branch(spec));
    if (dS.size() >= 2)
        rep.residuals.push_back(RationalFunction(2) * dS[0] * dS[1] + d_dx(spec, dS[0]) + s1 * dS[1]);
    for (std::size_t m = 1; m + 1 < dS.size(); ++m) {
        RationalFunction r = d_dx(spec, dS[m]) + s1 * dS[m + 1];
        for (std::size_t a = 0; a <= m + 1; ++a)
            r += dS[a] * dS[m + 1 - a];
        rep.residuals.push_back(r);
    }
    return rep;
}

BigRational airy_Sm_intersection_side(int m)
{
    if (m < 2)
        throw std::domain_error("airy_Sm_intersection_side needs m >= 2");
    return intersection_sum(m - 1, true) / rpow(2, m - 1);
}

BigRational gamma_partition_sum(int m)
{
    BigRational s = 0;
    for (const auto& lam : partitions_of(m)) {
        const int l = lam.length();
        BigRational term = make_rational(factorial(l - 1), aut_order(lam));
        for (int k : lam.parts)
            term *= gamma_ratio(k);
        s += (l - 1) % 2 ? BigRational(-term) : term;
    }
    return s;
}

BigRational airy_Sm_gamma_side(int m)
{
    if (m < 1)
        throw std::domain_error("airy_Sm_gamma_side needs m >= 1");
    BigRational v = rpow(make_rational(1, 576), m) * gamma_partition_sum(m);
    return m % 2 ? BigRational(-v) : v;
}

RainbowResult rainbow_check(int m)
{
    if (m < 1)
        throw std::domain_error("rainbow_check needs m >= 1");
    return RainbowResult{intersection_sum(m, false), rpow(make_rational(1, 288), m) * gamma_partition_sum(m)};
}

FzCoefficients fz_coefficients(int j_max)
{
    if (j_max < 1)
        throw std::domain_error("fz_coefficients needs j_max >= 1");
    FzCoefficients out;
    QSeries s(j_max);
    for (int k = 0; k <= j_max; ++k)
        s[k] = gamma_ratio(k);
    QSeries a = -s.log();
    for (int j = 1; j <= j_max; ++j) {
        out.from_log.push_back(a[j]);
        out.from_intersection.push_back(-rpow(288, j) * intersection_sum(j, false));
    }
    return out;
}

bool PsiReport::shadow_ok() const
{
    return std::all_of(shadow.begin(), shadow.end(), [](const auto& p) { return p.first == p.second; });
}

PsiReport catalan_psi_check(int K)
{
    if (K < 1)
        throw std::domain_error("catalan_psi_check needs K >= 1");
    PsiReport rep;
    rep.K = K;

    const QSeries z = z_series(K);
    const QSeries z2 = z * z;
    const QSeries one = QSeries::constant(K, 1);
    auto lift = [&](const QSeries& q, int hpow) {
        HSeries h(K);
        for (int i = 0; i <= K; ++i)
            h[i] = HbarLaurent::monomial(hpow, q[i]);
        return h;
    };

    // F_{0,1} without its -log x part, and F_{0,2}(x,x)/2
    HSeries E = lift(z2 * make_rational(-1, 2) + (one + z2).log(), -1);
    E += lift((one - z2).log() * make_rational(-1, 2), 0);
    // F_{g,n} with 2g-2+n = m starts at x^{-2m-2}
    ChartSeries chart = ChartSeries::build(K);
    for (int m = 1; 2 * m + 2 <= K; ++m)
        E += lift(substitute_series(principal_Sm(m + 1), chart.t_of_x), m);
    rep.lhs = E.exp();

    rep.rhs = HSeries(K);
    const HbarLaurent inv = HbarLaurent::monomial(-1);
    for (int n = 0; 2 * n <= K; ++n) {
        BigRational dfact = BigRational(factorial(n)) * rpow(2, n);
        rep.rhs[2 * n] = HbarLaurent::monomial(n) * pochhammer_hbar(inv, 2 * n) * BigRational(1 / dfact);
    }

    for (int i = 0; i <= K; ++i)
        if (!(rep.lhs[i] == rep.rhs[i]))
            rep.mismatches.push_back({i, rep.rhs[i], rep.lhs[i]});

    for (int n = 0; 2 * n <= K; ++n)
        rep.shadow.emplace_back(rep.lhs[2 * n].evaluate(1), BigRational(double_factorial(2 * n - 1)));
    return rep;
}

OdeReport verify_ode_series(const OdeSeries& series, const QuantumCurveSpec& spec, int K)
{
    // coefficients of psi'', psi', psi in the series variable
    std::vector<RationalFunction> ops;
    if (!series.descending) {
        ops = {RationalFunction(1), spec.s1, spec.s2};
    } else {
        // x = 1/v: d/dx = -v^2 d/dv, d^2/dx^2 = v^4 d^2/dv^2 + 2v^3 d/dv
        RationalFunction v = RationalFunction::x();
        RationalFunction s1 = spec.s1.compose(recip_var());
        RationalFunction s2 = spec.s2.compose(recip_var());
        ops = {v.pow(4), RationalFunction(2) * v.pow(3) - v * v * s1, s2};
    }
    UPoly L(1);
    for (const auto& r : ops)
        L = poly_lcm(L, r.den());
    std::vector<UPoly> P;
    for (const auto& r : ops)
        P.push_back(r.num() * UPoly::divmod(L, r.den()).first);

    const auto& psi = series.coeffs;
    const int N = static_cast<int>(psi.size()) - 1;
    auto coeff = [&](int i) { return i >= 0 && i <= N ? psi[i] : BigRational(0); };

    OdeReport rep;
    for (int k = 0; k <= K; ++k) {
        BigRational r = 0;
        for (int t = 0; t < 3; ++t) {
            const int order = 2 - t;
            const UPoly& p = P[t];
            if (p.is_zero())
                continue;
            if (k - p.valuation() + order > N)
                throw std::invalid_argument("verify_ode_series: series too short for the requested order");
            for (int j = 0; j <= p.degree() && j <= k; ++j) {
                if (p[j] == 0)
                    continue;
                const int i = k - j;
                BigRational f = 1;
                for (int q = 1; q <= order; ++q)
                    f *= i + q;
                r += p[j] * f * coeff(i + order);
            }
        }
        ++rep.checked;
        if (r != 0)
            rep.nonzero.emplace_back(k, r);
    }
    return rep;
}

LaurentPoly BiPoly::to_laurent() const
{
    LaurentPoly r(2);
    for (std::size_t k = 0; k < by_second.size(); ++k) {
        const auto& c = by_second[k].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0)
                r += LaurentPoly::monomial(2, {static_cast<int>(i), static_cast<int>(k)}, c[i]);
    }
    return r;
}

std::string BiPoly::str(const std::string& a, const std::string& b) const
{
    return to_laurent().str({a, b});
}

SemiclassicalCurves semiclassical_and_infinity(const QuantumCurveSpec& spec)
{
    SemiclassicalCurves out;
    out.affine = clear_denominators({spec.s2, spec.s1, RationalFunction(1)});
    // x = 1/u, y = -u^2/w; times w^2
    RationalFunction u = RationalFunction::x();
    out.infinity = clear_denominators(
        {u.pow(4), -(u * u) * spec.s1.compose(recip_var()), spec.s2.compose(recip_var())});
    return out;
}

DiscriminantData discriminant_data(const QuantumCurveSpec& spec)
{
    RationalFunction D = spec.s1 * spec.s1 - RationalFunction(4) * spec.s2;
    if (D.is_zero())
        throw std::domain_error("discriminant vanishes identically");
    DiscriminantData out;
    auto collect = [](const UPoly& p, std::vector<int>& into) {
        auto parts = p.squarefree_decomposition();
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int j = 0; j < parts[i].degree(); ++j)
                into.push_back(static_cast<int>(i + 1));
    };
    collect(D.num(), out.zeros);
    collect(D.den(), out.poles);
    // (dx)^2 = du^2/u^4 at u = 0
    const int at_inf = D.den().degree() - D.num().degree() - 4;
    if (at_inf > 0)
        out.zeros.push_back(at_inf);
    else if (at_inf < 0)
        out.poles.push_back(-at_inf);
    std::sort(out.zeros.rbegin(), out.zeros.rend());
    std::sort(out.poles.rbegin(), out.poles.rend());
    return out;
}

int geometric_genus(int g, const std::vector<int>& zeros, const std::vector<int>& poles)
{
    int balance = 0, delta = 0;
    for (int m : zeros) {
        balance += m;
        delta += m % 2;
    }
    for (int m : poles) {
        balance -= m;
        delta += m % 2;
    }
    if (balance != 4 * g - 4)
        throw std::invalid_argument("sum of zeros minus poles must equal 4g-4");
    return 2 * g - 1 + delta / 2;
}

std::string SingularityClass::str() const
{
    return regular ? "regular" : "irregular class " + to_string(irregular_class);
}

SingularityClass singularity_class(std::optional<int> k, std::optional<int> l)
{
    const bool reg = (!k || *k <= 1) && (!l || *l <= 2);
    SingularityClass c;
    if (reg)
        return c;
    BigRational r = k ? BigRational(*k) : BigRational(0);
    if (l)
        r = std::max(r, make_rational(*l, 2));
    c.regular = false;
    c.irregular_class = r - 1;
    return c;
}

std::vector<SingularPoint> singular_points(const QuantumCurveSpec& spec)
{
    std::vector<SingularPoint> out;
    const RationalFunction& s1 = spec.s1;
    const RationalFunction& s2 = spec.s2;

    UPoly sq(1);
    for (const auto& f : (s1.den() * s2.den()).squarefree_decomposition())
        sq = sq * f;

    // split into pieces on which every multiplicity is constant
    std::vector<UPoly> pieces;
    for (const auto& r : rational_roots(sq)) {
        UPoly lin(std::vector<BigRational>{-r, 1});
        pieces.push_back(lin);
        sq = UPoly::divmod(sq, lin).first;
    }
    if (sq.degree() > 0) {
        std::vector<UPoly> rest{sq.monic()};
        for (const UPoly* src : {&s1.num(), &s1.den(), &s2.num(), &s2.den()}) {
            if (src->is_zero())
                continue;
            for (const auto& a : src->squarefree_decomposition()) {
                std::vector<UPoly> next;
                for (const auto& p : rest) {
                    UPoly g = UPoly::gcd(p, a);
                    if (g.degree() > 0 && g.degree() < p.degree()) {
                        next.push_back(g);
                        next.push_back(UPoly::divmod(p, g).first.monic());
                    } else {
                        next.push_back(p);
                    }
                }
                rest = std::move(next);
            }
        }
        pieces.insert(pieces.end(), rest.begin(), rest.end());
    }

    for (const auto& p : pieces) {
        SingularPoint sp;
        if (p.degree() == 1)
            sp.where = "x=" + to_string(BigRational(-p[0] / p[1]));
        else
            sp.where = p.primitive().str("x") + "=0";
        sp.k = pole_order(s1, p);
        sp.l = pole_order(s2, p);
        sp.cls = singularity_class(sp.k, sp.l);
        out.push_back(sp);
    }

    // x = 1/u: d^2/du^2 + (2/u - s1(1/u)/u^2) d/du + s2(1/u)/u^4
    RationalFunction u = RationalFunction::x();
    RationalFunction b = RationalFunction(2) / u - spec.s1.compose(recip_var()) / u.pow(2);
    RationalFunction c = spec.s2.compose(recip_var()) / u.pow(4);
    SingularPoint inf;
    inf.where = "infinity";
    if (!b.is_zero())
        inf.k = -valuation_at_zero(b);
    if (!c.is_zero())
        inf.l = -valuation_at_zero(c);
    if ((inf.k && *inf.k >= 1) || (inf.l && *inf.l >= 1)) {
        inf.cls = singularity_class(inf.k, inf.l);
        out.push_back(inf);
    }
    return out;
}

QuantumCurveSpec table1_spec(int row)
{
    RationalFunction x = RationalFunction::x(), one(1);
    QuantumCurveSpec s;
    switch (row) {
    case 1:
        return airy_quantum_curve();
    case 2:
        s = catalan_quantum_curve();
        s.name = "hermite";
        return s;
    case 3:
        s.name = "gauss";
        s.s1 = (RationalFunction(2) * x - one) / (x * (x - one));
        s.s2 = one / (RationalFunction(4) * x * (x - one));
        return s;
    case 4:
        s.name = "row4";
        s.s1 = one;
        s.s2 = one / (x + one);
        return s;
    case 5:
        s.name = "row5";
        s.s1 = RationalFunction(2) * x * x / (x * x - one);
        s.s2 = -one / (x * x - one);
        return s;
    default:
        throw std::out_of_range("quantum curve table has rows 1..5");
    }
}

Table1Row table1_row(int row)
{
    Table1Row r;
    r.row = row;
    r.spec = table1_spec(row);
    r.curves = semiclassical_and_infinity(r.spec);
    r.discriminant = discriminant_data(r.spec);
    r.genus = geometric_genus(r.discriminant.base_genus, r.discriminant.zeros, r.discriminant.poles);
    r.singularities = singular_points(r.spec);
    return r;
}

} // namespace tqc
