#include "tqc/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tqc {

BigRational HurwitzTable::s_value(int r, int g, const std::vector<int>& mu)
{
    const int n = static_cast<int>(mu.size());
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    return BigRational(2 * g - 2 + n) + make_rational(d, r);
}

BigRational HurwitzTable::get(int r, int g, const std::vector<int>& mu)
{
    if (r < 1)
        throw std::domain_error("hurwitz needs r >= 1");
    if (g < 0 || mu.empty())
        return 0;
    for (int m : mu)
        if (m < 1)
            throw std::domain_error("hurwitz needs mu_i >= 1");
    const int n = static_cast<int>(mu.size());
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    if (d % r)
        return 0;
    const int s = 2 * g - 2 + n + d / r;
    if (s < 0)
        return 0;
    if (s == 0)
        return (g == 0 && n == 1 && mu[0] == r) ? make_rational(1, r) : BigRational(0);

    std::vector<int> key = mu;
    std::sort(key.begin(), key.end(), std::greater<>());
    auto mk = std::make_tuple(r, g, key);
    if (auto it = memo_.find(mk); it != memo_.end())
        return it->second;
    BigRational v = compute(r, g, key, s);
    memo_.emplace(std::move(mk), v);
    return v;
}

BigRational HurwitzTable::compute(int r, int g, const std::vector<int>& mu, int s)
{
    const int n = static_cast<int>(mu.size());
    BigRational sum = 0;

    // join
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> nu{mu[i] + mu[j]};
            for (int k = 0; k < n; ++k)
                if (k != i && k != j)
                    nu.push_back(mu[k]);
            BigRational h = get(r, g, nu);
            if (h != 0)
                sum += BigRational(mu[i] + mu[j]) * h;
        }

    // cut
    for (int i = 0; i < n; ++i) {
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (k != i)
                rest.push_back(mu[k]);
        const int m = static_cast<int>(rest.size());
        for (int a = 1; a < mu[i]; ++a) {
            const int b = mu[i] - a;
            std::vector<int> both{a, b};
            both.insert(both.end(), rest.begin(), rest.end());
            BigRational inner = get(r, g - 1, both);
            for (int g1 = 0; g1 <= g; ++g1)
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::vector<int> I{a}, J{b};
                    for (int k = 0; k < m; ++k)
                        ((mask >> k) & 1u ? I : J).push_back(rest[k]);
                    BigRational h1 = get(r, g1, I);
                    if (h1 == 0)
                        continue;
                    inner += h1 * get(r, g - g1, J);
                }
            sum += make_rational(a * b, 2) * inner;
        }
    }
    return sum / BigRational(s);
}

namespace {

std::mutex& table_mutex()
{
    static std::mutex m;
    return m;
}

using Perm = std::array<std::uint8_t, kOracleMaxDegree>;

std::vector<int> cycle_type(const Perm& p, int d)
{
    std::vector<int> type;
    std::array<bool, kOracleMaxDegree> seen{};
    for (int i = 0; i < d; ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

std::vector<Perm> perms_of_type(const std::vector<int>& mu, int d)
{
    std::vector<int> want = mu;
    std::sort(want.begin(), want.end(), std::greater<>());
    std::vector<Perm> out;
    Perm p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do {
        if (cycle_type(p, d) == want)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));
    return out;
}

std::vector<std::pair<int, int>> transpositions(int d)
{
    std::vector<std::pair<int, int>> t;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            t.emplace_back(a, b);
    return t;
}

int simple_s(int g, const std::vector<int>& mu)
{
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    return 2 * g - 2 + static_cast<int>(mu.size()) + d;
}

void check_oracle_input(int g, const std::vector<int>& mu)
{
    if (mu.empty())
        throw std::invalid_argument("oracle needs n >= 1");
    for (int m : mu)
        if (m < 1)
            throw std::invalid_argument("oracle needs mu_i >= 1");
    if (std::accumulate(mu.begin(), mu.end(), 0) > kOracleMaxDegree)
        throw std::invalid_argument("oracle supports d <= " + std::to_string(kOracleMaxDegree));
    if (g < 0)
        throw std::invalid_argument("oracle needs g >= 0");
}

// product permutation and block labels (block = its minimum element)
struct State {
    Perm p{};
    Perm block{};
    bool operator==(const State&) const = default;
};

struct StateHash {
    std::size_t operator()(const State& s) const
    {
        std::size_t h = 0;
        for (int i = 0; i < kOracleMaxDegree; ++i)
            h = h * 131 + s.p[i] * 7 + s.block[i];
        return h;
    }
};

} // namespace

HurwitzTable& default_hurwitz_table()
{
    static HurwitzTable table;
    return table;
}

BigRational hurwitz(int r, int g, int n, const std::vector<int>& mu)
{
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("mu must have n entries");
    std::lock_guard<std::mutex> lock(table_mutex());
    return default_hurwitz_table().get(r, g, mu);
}

BigInt hurwitz_tuple_count(int g, const std::vector<int>& mu)
{
    check_oracle_input(g, mu);
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    const int s = simple_s(g, mu);
    if (s < 0)
        return 0;

    std::unordered_map<State, BigInt, StateHash> cur;
    for (const auto& sigma : perms_of_type(mu, d)) {
        State st;
        st.p = sigma;
        for (int i = 0; i < d; ++i) {
            int m = i;
            for (int j = sigma[i]; j != i; j = sigma[j])
                m = std::min(m, j);
            st.block[i] = static_cast<std::uint8_t>(m);
        }
        cur[st] += 1;
    }
    const auto taus = transpositions(d);
    for (int step = 0; step < s; ++step) {
        std::unordered_map<State, BigInt, StateHash> next;
        for (const auto& [st, c] : cur)
            for (auto [a, b] : taus) {
                State ns = st;
                for (int i = 0; i < d; ++i) {
                    int v = st.p[i];
                    ns.p[i] = static_cast<std::uint8_t>(v == a ? b : v == b ? a : v);
                }
                const std::uint8_t ba = st.block[a], bb = st.block[b];
                if (ba != bb) {
                    const std::uint8_t lo = std::min(ba, bb), hi = std::max(ba, bb);
                    for (int i = 0; i < d; ++i)
                        if (ns.block[i] == hi)
                            ns.block[i] = lo;
                }
                next[ns] += c;
            }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [st, c] : cur) {
        bool ok = true;
        for (int i = 0; i < d; ++i)
            if (st.p[i] != i || st.block[i] != 0)
                ok = false;
        if (ok)
            total += c;
    }
    return total;
}

BigInt hurwitz_tuple_count_naive(int g, const std::vector<int>& mu)
{
    check_oracle_input(g, mu);
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    const int s = simple_s(g, mu);
    if (s < 0)
        return 0;
    const auto taus = transpositions(d);
    BigInt total = 0;
    std::vector<int> choice(s, 0);
    for (const auto& sigma : perms_of_type(mu, d)) {
        std::function<void(int, const Perm&)> rec = [&](int k, const Perm& p) {
            if (k == s) {
                for (int i = 0; i < d; ++i)
                    if (p[i] != i)
                        return;
                // transitivity of <sigma, tau_1, ..., tau_s>
                std::vector<int> parent(d);
                std::iota(parent.begin(), parent.end(), 0);
                std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
                for (int i = 0; i < d; ++i)
                    parent[find(i)] = find(sigma[i]);
                for (int c : choice)
                    parent[find(taus[c].first)] = find(taus[c].second);
                for (int i = 0; i < d; ++i)
                    if (find(i) != find(0))
                        return;
                total += 1;
                return;
            }
            for (std::size_t c = 0; c < taus.size(); ++c) {
                choice[k] = static_cast<int>(c);
                auto [a, b] = taus[c];
                Perm q = p;
                for (int i = 0; i < d; ++i)
                    q[i] = static_cast<std::uint8_t>(p[i] == a ? b : p[i] == b ? a : p[i]);
                rec(k + 1, q);
            }
        };
        rec(0, sigma);
    }
    return total;
}

namespace {

BigRational labeling_factor(OracleLabeling l, const std::vector<int>& mu)
{
    Partition p{mu};
    std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
    BigRational a(aut_order(p));
    switch (l) {
    case OracleLabeling::one:
        return 1;
    case OracleLabeling::aut:
        return a;
    case OracleLabeling::inv_aut:
        return 1 / a;
    }
    return 1;
}

BigRational oracle_value(OracleLabeling l, int g, const std::vector<int>& mu)
{
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    const int s = simple_s(g, mu);
    if (s < 0)
        return 0;
    // branch points unlabeled: topological types
    BigRational v = BigRational(hurwitz_tuple_count(g, mu)) / BigRational(factorial(d) * factorial(s));
    return v * labeling_factor(l, mu);
}

} // namespace

OracleCalibration calibrate_hurwitz_oracle()
{
    const std::vector<std::pair<int, std::vector<int>>> targets{{0, {1}}, {0, {2}}, {0, {1, 1}}};
    OracleCalibration cal;
    for (auto l : {OracleLabeling::one, OracleLabeling::aut, OracleLabeling::inv_aut}) {
        bool fits = true;
        for (const auto& [g, mu] : targets)
            if (oracle_value(l, g, mu) != hurwitz(1, g, static_cast<int>(mu.size()), mu))
                fits = false;
        if (fits)
            cal.fitting.push_back(l);
    }
    if (cal.fitting.size() != 1)
        throw std::runtime_error("oracle calibration is not unique");
    cal.labeling = cal.fitting.front();
    return cal;
}

BigRational brute_oracle(int g, int n, const std::vector<int>& mu)
{
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("mu must have n entries");
    static const OracleCalibration cal = calibrate_hurwitz_oracle();
    return oracle_value(cal.labeling, g, mu);
}

QSeries lambert_z_series(int r, int K)
{
    if (r < 1 || K < 1)
        throw std::domain_error("lambert_z_series needs r, K >= 1");
    QSeries z = QSeries::variable(K);
    QSeries x = z * (-z.pow(r)).exp();
    return x.reversion();
}

namespace {

HSeries lift(const QSeries& q, int hpow)
{
    HSeries h(q.order());
    for (int i = 0; i <= q.order(); ++i)
        h[i] = HbarLaurent::monomial(hpow, q[i]);
    return h;
}

// sum_{i <= N} (a hbar)^i / i!
HbarLaurent exp_hbar(const BigRational& a, int N)
{
    HbarLaurent r;
    BigRational c = 1;
    for (int i = 0; i <= N; ++i) {
        r += HbarLaurent::monomial(i, c);
        c *= a / BigRational(i + 1);
    }
    return r;
}

void collect(QcReport& rep, const HSeries& R, int M)
{
    for (int k = 0; k <= R.order(); ++k) {
        const HbarLaurent c = R[k].truncated_above(M);
        const int floor = -((k + rep.r - 1) / rep.r) - 1;
        rep.checked += M - floor + 1;
        for (const auto& [e, v] : c.terms())
            rep.nonzero.push_back({k, e, v});
    }
}

} // namespace

HSeries hurwitz_wave_function(int r, int K, int M)
{
    if (r < 1 || K < 1 || M < 0)
        throw std::domain_error("hurwitz_wave_function needs r, K >= 1 and M >= 0");
    const QSeries z = lambert_z_series(r, K);
    const QSeries zr = z.pow(r);
    const QSeries one = QSeries::constant(K, 1);

    HSeries E = lift(zr * make_rational(1, r) - zr * zr * make_rational(1, 2), -1);
    E += lift(((one - zr * BigRational(r)).log() + zr) * make_rational(-1, 2), 0);

    std::lock_guard<std::mutex> lock(table_mutex());
    HurwitzTable& H = default_hurwitz_table();
    const int m_max = M + K / r;
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= K && n <= m + 2; ++n) {
            if ((m + 2 - n) % 2)
                continue;
            const int g = (m + 2 - n) / 2;
            // F_{g,n}(x,...,x)/n! = sum over partitions H(lambda)/prod(mult!) x^|lambda|
            QSeries f(K);
            bool any = false;
            for (int d = n; d <= K; ++d) {
                if (d % r)
                    continue;
                for (const auto& lam : partitions_of(d, n)) {
                    if (lam.length() != n)
                        continue;
                    BigRational h = H.get(r, g, lam.parts);
                    if (h == 0)
                        continue;
                    f[d] += h / BigRational(aut_order(lam));
                    any = true;
                }
            }
            if (any)
                E += lift(f, m);
        }
    return E.exp();
}

HSeries apply_P(const HSeries& psi, int r, int M)
{
    const int K = psi.order();
    HSeries out(K);
    for (int k = 0; k <= K; ++k) {
        const HbarLaurent& c = psi[k];
        if (c.is_zero())
            continue;
        out[k] += c * HbarLaurent::monomial(1, k);
        if (k + r <= K) {
            const int N = std::max(0, M - c.low());
            BigRational a = BigRational(r) * (BigRational(k) + make_rational(r - 1, 2));
            out[k + r] -= c * exp_hbar(a, N);
        }
    }
    for (int k = 0; k <= K; ++k)
        out[k] = out[k].truncated_above(M);
    return out;
}

HSeries apply_Q(const HSeries& psi, int r)
{
    const int K = psi.order();
    HSeries out(K);
    for (int k = 0; k <= K; ++k) {
        const HbarLaurent& c = psi[k];
        if (c.is_zero())
            continue;
        out[k] = c * HbarLaurent::monomial(1, make_rational(k * k - k, 2)) - c * make_rational(k, r) -
                 c.euler_derivative();
    }
    return out;
}

QcReport qc_series_check(int r, int K, int M)
{
    QcReport rep{r, K, M, 0, {}};
    collect(rep, apply_P(hurwitz_wave_function(r, K, M), r, M), M);
    return rep;
}

QcReport q_operator_check(int r, int K, int M)
{
    QcReport rep{r, K, M, 0, {}};
    collect(rep, apply_Q(hurwitz_wave_function(r, K, M), r), M);
    return rep;
}

QcReport commutator_check(int r, int k, int j, int K, int M)
{
    if (k < 0 || k > K)
        throw std::domain_error("commutator_check needs 0 <= k <= K");
    HSeries m(K);
    m[k] = HbarLaurent::monomial(j);
    HSeries Pm = apply_P(m, r, M);
    HSeries R = apply_P(apply_Q(m, r), r, M) - apply_Q(Pm, r) - Pm;
    QcReport rep{r, K, M, 0, {}};
    collect(rep, R, M);
    return rep;
}

} // namespace tqc
