#include "tqc/catalan.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tqc {

GnmKey GnmKey::canonical(int g, std::vector<int> mu)
{
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return GnmKey{g, std::move(mu)};
}

BigRational CatalanTable::get(int g, const std::vector<int>& mu)
{
    if (mu.empty())
        throw std::invalid_argument("C_{g,n} needs n >= 1");
    return lookup(g, mu, true);
}

BigRational CatalanTable::get_ordered(int g, const std::vector<int>& mu)
{
    if (mu.empty())
        throw std::invalid_argument("C_{g,n} needs n >= 1");
    return lookup(g, mu, false);
}

BigRational CatalanTable::lookup(int g, const std::vector<int>& mu, bool canonical)
{
    if (g < 0)
        return 0;
    for (int m : mu)
        if (m < 0)
            return 0;
    if (g == 0 && mu.size() == 1 && mu[0] == 0)
        return 1;
    int total = 0;
    for (int m : mu) {
        if (m == 0)
            return 0;
        total += m;
    }
    if (total % 2 != 0)
        return 0;

    GnmKey key = canonical ? GnmKey::canonical(g, mu) : GnmKey{g, mu};
    auto& memo = canonical ? memo_ : ordered_memo_;
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    BigRational v = compute(g, key.mu, canonical);
    memo.emplace(std::move(key), v);
    return v;
}

BigRational CatalanTable::compute(int g, const std::vector<int>& mu, bool canonical)
{
    const int n = static_cast<int>(mu.size());
    const int m1 = mu[0];
    std::vector<int> rest(mu.begin() + 1, mu.end());
    BigRational sum = 0;

    // edge joining vertex 1 to vertex j
    for (int j = 1; j < n; ++j) {
        std::vector<int> nu;
        nu.reserve(n - 1);
        nu.push_back(m1 + mu[j] - 2);
        for (int k = 1; k < n; ++k)
            if (k != j)
                nu.push_back(mu[k]);
        BigRational c = lookup(g, nu, canonical);
        if (c != 0)
            sum += BigRational(mu[j]) * c;
    }

    // loop at vertex 1
    const int r = static_cast<int>(rest.size());
    for (int a = 0; a <= m1 - 2; ++a) {
        const int b = m1 - 2 - a;
        std::vector<int> nu{a, b};
        nu.insert(nu.end(), rest.begin(), rest.end());
        sum += lookup(g - 1, nu, canonical);

        for (int g1 = 0; g1 <= g; ++g1) {
            for (unsigned mask = 0; mask < (1u << r); ++mask) {
                std::vector<int> left{a}, right{b};
                for (int k = 0; k < r; ++k)
                    ((mask >> k) & 1u ? left : right).push_back(rest[k]);
                BigRational c1 = lookup(g1, left, canonical);
                if (c1 == 0)
                    continue;
                BigRational c2 = lookup(g - g1, right, canonical);
                if (c2 != 0)
                    sum += c1 * c2;
            }
        }
    }
    return sum;
}

BigRational catalan_closed(int m)
{
    if (m < 0)
        throw std::domain_error("catalan_closed expects m >= 0");
    return make_rational(binomial(2 * m, m), BigInt(m + 1));
}

BigRational c02_closed(int mu1, int mu2)
{
    if (mu1 < 1 || mu2 < 1)
        throw std::domain_error("c02_closed expects positive arguments");
    if ((mu1 + mu2) % 2 != 0)
        return 0;
    BigInt num = BigInt(2) * ((mu1 + 1) / 2) * ((mu2 + 1) / 2) * binomial(mu1, mu1 / 2) * binomial(mu2, mu2 / 2);
    return make_rational(num, BigInt(mu1 + mu2));
}

CatalanTable& default_catalan_table()
{
    static CatalanTable table;
    return table;
}

BigRational catalan_general(int g, int n, const std::vector<int>& mu)
{
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("mu must have n entries");
    static std::mutex mu_lock;
    std::lock_guard<std::mutex> lock(mu_lock);
    return default_catalan_table().get(g, mu);
}

QSeries z_series(int K)
{
    if (K < 1)
        throw std::domain_error("z_series expects K >= 1");
    QSeries z(K);
    for (int m = 0; 2 * m + 1 <= K; ++m)
        z[2 * m + 1] = catalan_closed(m);
    return z;
}

} // namespace tqc
