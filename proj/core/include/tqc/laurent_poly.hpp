#pragma once

#include "tqc/exactnum.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tqc {

// Sparse Laurent polynomial over Q in variables t_0..t_{arity-1}.
//
// Exponent tuples are packed one biased byte per variable into a 64-bit
// key, variable 0 in the most significant byte, so key order is
// lexicographic order on exponent tuples.
class LaurentPoly {
public:
    using Key = std::uint64_t;
    using Term = std::pair<Key, BigRational>;

    static constexpr int kMaxArity = 8;
    static constexpr int kMaxExponent = 120;

    LaurentPoly() = default;
    explicit LaurentPoly(int arity);

    static LaurentPoly constant(int arity, const BigRational& c);
    static LaurentPoly monomial(int arity, const std::vector<int>& exps, const BigRational& c = 1);
    static LaurentPoly variable(int arity, int var);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::vector<int> exponents(Key k) const;
    Key key_of(const std::vector<int>& exps) const;
    static int exponent_at(Key k, int var);

    BigRational coefficient(const std::vector<int>& exps) const;
    BigRational constant_term() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigRational& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
    friend LaurentPoly operator*(const BigRational& c, LaurentPoly a) { return a *= c; }
    bool operator==(const LaurentPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

    // Non-negative k, or any k for a monomial.
    LaurentPoly pow(int k) const;

    // Multiply by t^exps.
    LaurentPoly shifted(const std::vector<int>& exps) const;

    LaurentPoly derivative(int var) const;
    // Termwise primitive; throws if a t_var^{-1} term is present.
    LaurentPoly antiderivative(int var) const;

    int total_degree() const;
    int min_total_degree() const;
    int max_degree(int var) const;
    int min_degree(int var) const;
    bool involves(int var) const;

    // Part of total degree exactly d.
    LaurentPoly homogeneous_part(int d) const;

    // Variable var := c. Arity unchanged; var no longer occurs.
    LaurentPoly substitute(int var, const BigRational& c) const;
    // Variable var := value, where value does not involve var.
    // Negative powers of var require value to be a monomial.
    LaurentPoly substitute(int var, const LaurentPoly& value) const;

    // Old variable i becomes sign[i] * t_{map[i]} in a polynomial of the
    // given arity. Several old variables may land on the same new one.
    LaurentPoly remap(int new_arity, const std::vector<int>& map, const std::vector<int>& sign = {}) const;

    // t_var -> 1/t_var
    LaurentPoly invert_variable(int var) const;

    BigRational evaluate(const std::vector<BigRational>& point) const;

    // Coefficients of powers of t_var; each has t_var removed.
    std::map<int, LaurentPoly> coefficients_in(int var) const;
    static LaurentPoly from_coefficients(int arity, int var, const std::map<int, LaurentPoly>& coeffs);

    // Exact quotient by (t_a - c * t_b); throws std::runtime_error on a
    // nonzero remainder.
    LaurentPoly divide_linear(int a, int b, const BigRational& c) const;

    // Exact quotient by a monomial.
    LaurentPoly divide_monomial(const std::vector<int>& exps, const BigRational& c) const;

    bool is_symmetric() const;

    // Terms ordered by total degree, then lexicographically.
    std::vector<std::pair<std::vector<int>, BigRational>> graded_terms() const;

    std::string str(const std::vector<std::string>& names = {}) const;

    // Internal: build from sorted, zero-free terms.
    static LaurentPoly from_sorted(int arity, std::vector<Term> terms);

private:
    int arity_ = 0;
    std::vector<Term> terms_;

    void check_arity(const LaurentPoly& o) const;
};

LaurentPoly from_terms(int arity, const std::vector<std::pair<std::vector<int>, BigRational>>& terms);

} // namespace tqc
