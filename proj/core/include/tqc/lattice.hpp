#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace tqc {

// Orbifold Euler characteristic of M_{g,n}.
BigRational harer_zagier_chi(int g, int n);

// N_{g,n}(p) for all p with 0 <= p_i <= p_max, read off the q-expansion of
// F^C_{g,n}. Keys are the full (unsorted) tuples.
std::map<std::vector<int>, BigRational> base_from_F(int g, int n, int p_max);

class LatticeTable {
public:
    BigRational get(int g, const std::vector<int>& p);

    // Same recursion, distinguished entry p_1 as given.
    BigRational get_ordered(int g, const std::vector<int>& p);

    const std::map<std::pair<int, std::vector<int>>, BigRational>& entries() const { return memo_; }
    void insert(int g, const std::vector<int>& p, const BigRational& v) { memo_[{g, p}] = v; }

private:
    std::map<std::pair<int, std::vector<int>>, BigRational> memo_;
    std::map<std::pair<int, std::vector<int>>, BigRational> ordered_memo_;
    std::map<std::pair<int, int>, std::pair<int, std::map<std::vector<int>, BigRational>>> base_;

    BigRational lookup(int g, const std::vector<int>& p, bool canonical);
    BigRational compute(int g, const std::vector<int>& p, bool canonical);
    BigRational base_value(int g, const std::vector<int>& p);
};

LatticeTable& default_lattice_table();
BigRational lattice_N(int g, int n, const std::vector<int>& p);

struct EulerReport {
    BigRational diagonal;  // F^C(1,...,1)
    BigRational expected;  // (-1)^n chi(M_{g,n})
    bool ok() const { return diagonal == expected; }
};

EulerReport euler_consistency(int g, int n);

} // namespace tqc
