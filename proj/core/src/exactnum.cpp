#include "tqc/exactnum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tqc {

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational make_rational(long num, long den)
{
    return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigRational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return BigRational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

BigInt factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt double_factorial(long k)
{
    if (k < -1 || k % 2 == 0)
        throw std::domain_error("double_factorial expects an odd k >= -1");
    if (k == -1)
        return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigRational bernoulli(long n)
{
    if (n < 0)
        throw std::domain_error("bernoulli index must be non-negative");

    static std::mutex mu;
    static std::vector<BigRational> table{BigRational(1)};
    std::lock_guard<std::mutex> lock(mu);

    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        BigRational s = 0;
        for (long k = 0; k < m; ++k)
            s += BigRational(binomial(m + 1, k)) * table[k];
        BigRational b = -s / BigRational(m + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table[n];
}

int Partition::size() const
{
    int s = 0;
    for (int p : parts)
        s += p;
    return s;
}

namespace {

void gen_partitions(int rest, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        out.push_back(Partition{cur});
        return;
    }
    if (static_cast<int>(cur.size()) == max_len)
        return;
    for (int p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rest - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int m, int max_len)
{
    if (m < 0)
        throw std::domain_error("partitions_of expects m >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(m, m, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int m) { return partitions_of(m, m); }

std::int64_t partition_count(int m)
{
    // Euler's pentagonal recurrence.
    std::vector<std::int64_t> p(m + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= m; ++k) {
        std::int64_t s = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > k)
                break;
            int sign = (j % 2) ? 1 : -1;
            s += sign * p[k - g1];
            if (g2 <= k)
                s += sign * p[k - g2];
        }
        p[k] = s;
    }
    return p[m];
}

BigInt aut_order(const Partition& lambda)
{
    std::map<int, long> mult;
    for (int p : lambda.parts)
        ++mult[p];
    BigInt r = 1;
    for (auto& [part, m] : mult)
        r *= factorial(m);
    return r;
}

BigInt dim_irrep(const Partition& lambda)
{
    const auto& la = lambda.parts;
    int n = lambda.size();
    if (n == 0)
        return 1;
    // conjugate partition for leg lengths
    std::vector<int> conj(la.empty() ? 0 : la[0], 0);
    for (int p : la)
        for (int j = 0; j < p; ++j)
            ++conj[j];
    BigInt hooks = 1;
    for (std::size_t i = 0; i < la.size(); ++i)
        for (int j = 0; j < la[i]; ++j)
            hooks *= (la[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
    return factorial(n) / hooks;
}

} // namespace tqc
