#include "tqc/lattice.hpp"

#include "tqc/freeenergy.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tqc {

BigRational harer_zagier_chi(int g, int n)
{
    if (g < 0 || n < 0)
        throw std::domain_error("chi(M_{g,n}) needs g, n >= 0");
    if (g == 0) {
        if (n < 3)
            throw std::domain_error("chi(M_{0,n}) needs n >= 3");
        BigRational v(factorial(n - 3));
        return (n - 3) % 2 ? BigRational(-v) : v;
    }
    if (n < 1)
        throw std::domain_error("chi(M_{g,n}) is implemented for n >= 1");
    BigRational zeta = -bernoulli(2 * g) / BigRational(2 * g);
    BigRational v = BigRational(factorial(2 * g - 3 + n)) / BigRational(factorial(2 * g - 2)) * zeta;
    return (n - 1) % 2 ? BigRational(-v) : v;
}

std::map<std::vector<int>, BigRational> base_from_F(int g, int n, int p_max)
{
    const LaurentPoly& F = fC(g, n);
    ChartSeries chart = ChartSeries::build(p_max);
    LaurentPoly Q = expand_in_chart(F, chart.t_of_q, p_max);
    std::map<std::vector<int>, BigRational> out;
    for (const auto& [k, c] : Q.terms()) {
        auto p = Q.exponents(k);
        int sum = 0;
        for (int x : p) {
            if (x == 0)
                throw std::runtime_error("q-expansion of F^C has a q_i^0 term");
            sum += x;
        }
        if (sum % 2)
            throw std::runtime_error("q-expansion of F^C has an odd-parity coefficient");
        out.emplace(std::move(p), c);
    }
    return out;
}

BigRational LatticeTable::get(int g, const std::vector<int>& p) { return lookup(g, p, true); }

BigRational LatticeTable::get_ordered(int g, const std::vector<int>& p) { return lookup(g, p, false); }

BigRational LatticeTable::base_value(int g, const std::vector<int>& p)
{
    const int n = static_cast<int>(p.size());
    const int need = *std::max_element(p.begin(), p.end());
    auto& slot = base_[{g, n}];
    if (slot.first < need) {
        int pm = std::max(need, 2 * slot.first);
        slot = {pm, base_from_F(g, n, pm)};
    }
    auto it = slot.second.find(p);
    return it == slot.second.end() ? BigRational(0) : it->second;
}

BigRational LatticeTable::lookup(int g, const std::vector<int>& p, bool canonical)
{
    const int n = static_cast<int>(p.size());
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0)
        return 0;
    int sum = 0;
    for (int x : p) {
        if (x <= 0)
            return 0;
        sum += x;
    }
    if (sum % 2)
        return 0;
    std::vector<int> key = p;
    if (canonical)
        std::sort(key.begin(), key.end(), std::greater<>());
    if ((g == 1 && n == 1) || (g == 0 && n == 3))
        return base_value(g, key);
    auto& memo = canonical ? memo_ : ordered_memo_;
    auto mk = std::make_pair(g, key);
    if (auto it = memo.find(mk); it != memo.end())
        return it->second;
    BigRational v = compute(g, key, canonical);
    memo.emplace(std::move(mk), v);
    return v;
}

BigRational LatticeTable::compute(int g, const std::vector<int>& p, bool canonical)
{
    const int n = static_cast<int>(p.size());
    const int p1 = p[0];
    BigRational sum = 0;

    for (int j = 1; j < n; ++j) {
        std::vector<int> rest;
        for (int k = 1; k < n; ++k)
            if (k != j)
                rest.push_back(p[k]);
        auto part = [&](int top) {
            BigRational s = 0;
            for (int q = 1; q < top; ++q) {
                std::vector<int> arg{q};
                arg.insert(arg.end(), rest.begin(), rest.end());
                BigRational v = lookup(g, arg, canonical);
                if (v != 0)
                    s += BigRational(q * (top - q)) * v;
            }
            return s;
        };
        const int pj = p[j];
        sum += part(p1 + pj);
        if (p1 > pj)
            sum += part(p1 - pj);
        if (pj > p1)
            sum -= part(pj - p1);
    }

    std::vector<int> rest(p.begin() + 1, p.end());
    const int r = n - 1;
    for (int q1 = 1; q1 < p1; ++q1) {
        for (int q2 = 1; q1 + q2 < p1; ++q2) {
            const int w = q1 * q2 * (p1 - q1 - q2);
            BigRational inner = 0;
            std::vector<int> arg{q1, q2};
            arg.insert(arg.end(), rest.begin(), rest.end());
            inner += lookup(g - 1, arg, canonical);
            for (int g1 = 0; g1 <= g; ++g1) {
                for (unsigned mask = 0; mask < (1u << r); ++mask) {
                    std::vector<int> I{q1}, J{q2};
                    for (int k = 0; k < r; ++k)
                        ((mask >> k) & 1u ? I : J).push_back(rest[k]);
                    const int n1 = static_cast<int>(I.size()), n2 = static_cast<int>(J.size());
                    if (2 * g1 - 2 + n1 <= 0 || 2 * (g - g1) - 2 + n2 <= 0)
                        continue;
                    BigRational a = lookup(g1, I, canonical);
                    if (a == 0)
                        continue;
                    inner += a * lookup(g - g1, J, canonical);
                }
            }
            sum += BigRational(w) * inner;
        }
    }
    return sum / BigRational(2 * p1);
}

LatticeTable& default_lattice_table()
{
    static LatticeTable table;
    return table;
}

BigRational lattice_N(int g, int n, const std::vector<int>& p)
{
    if (static_cast<int>(p.size()) != n)
        throw std::invalid_argument("p must have n entries");
    return default_lattice_table().get(g, p);
}

EulerReport euler_consistency(int g, int n)
{
    EulerReport r;
    r.diagonal = fC(g, n).evaluate(std::vector<BigRational>(n, BigRational(1)));
    r.expected = harer_zagier_chi(g, n);
    if (n % 2)
        r.expected = -r.expected;
    return r;
}

} // namespace tqc
