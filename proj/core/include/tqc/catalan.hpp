#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/trunc_series.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace tqc {

struct GnmKey {
    int g = 0;
    std::vector<int> mu;

    int n() const { return static_cast<int>(mu.size()); }
    // mu sorted descending.
    static GnmKey canonical(int g, std::vector<int> mu);
    auto operator<=>(const GnmKey&) const = default;
};

// Generalized Catalan numbers C_{g,n}(mu), memoized.
class CatalanTable {
public:
    BigRational get(int g, const std::vector<int>& mu);

    // Recursion with mu_1 taken as given, no key canonicalization.
    BigRational get_ordered(int g, const std::vector<int>& mu);

    std::size_t size() const { return memo_.size(); }
    const std::map<GnmKey, BigRational>& entries() const { return memo_; }
    void insert(const GnmKey& key, const BigRational& value) { memo_[key] = value; }
    void clear() { memo_.clear(); }

private:
    std::map<GnmKey, BigRational> memo_;
    std::map<GnmKey, BigRational> ordered_memo_;

    BigRational compute(int g, const std::vector<int>& mu, bool canonical);
    BigRational lookup(int g, const std::vector<int>& mu, bool canonical);
};

// C_{0,1}(2m), the m-th Catalan number.
BigRational catalan_closed(int m);

// C_{0,2}(mu1, mu2); zero when mu1 + mu2 is odd.
BigRational c02_closed(int mu1, int mu2);

// Uses a process-wide table.
BigRational catalan_general(int g, int n, const std::vector<int>& mu);
CatalanTable& default_catalan_table();

// z(x) = sum_m C_{0,1}(2m) x^{-2m-1} as a series in y = 1/x through y^K.
QSeries z_series(int K);

} // namespace tqc
