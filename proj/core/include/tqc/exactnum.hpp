#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tqc {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Canonical p/q (q > 0, reduced).
BigRational make_rational(const BigInt& num, const BigInt& den = 1);
BigRational make_rational(long num, long den = 1);

// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);
BigRational parse_rational(const std::string& s);

BigInt factorial(long n);
BigInt binomial(long n, long k);

// k odd, k >= -1.
BigInt double_factorial(long k);

// n >= 0. Odd n > 1 return 0.
BigRational bernoulli(long n);

struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int size() const;
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

// Reverse-lexicographic: (m), (m-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(int m);

// Partitions of m with at most max_len parts.
std::vector<Partition> partitions_of(int m, int max_len);

std::int64_t partition_count(int m);

BigInt aut_order(const Partition& lambda);

// Hook length formula; dim of the empty partition is 1.
BigInt dim_irrep(const Partition& lambda);

} // namespace tqc
