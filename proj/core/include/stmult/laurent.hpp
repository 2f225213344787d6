#pragma once

#include "stmult/bigint.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stmult {

// Exact Laurent polynomial with arbitrary-precision integer coefficients.
// Sparse; exponents may be negative. This is the type of every theorem
// numerator and of exact quotients; it carries no truncation horizon.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(long long exp, Int coeff = 1);
    static LaurentPoly one() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, Int>& terms() const { return terms_; }

    Int coeff(long long exp) const;
    long long min_exp() const; // throws on the zero polynomial
    long long max_exp() const;
    Int sum_coeffs() const;    // value at t = 1

    void add_term(long long exp, const Int& coeff);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly pow(long long e) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    std::map<long long, Int> terms_; // exponent -> nonzero coefficient
};

// Truncated Laurent series: coefficients are known exactly for every
// exponent <= trunc; below shift they are exactly zero. Stored dense as
// coeffs[i] = coefficient of t^(shift+i). Canonical form trims leading
// zeros; the zero series has shift = trunc + 1 and no stored coefficients.
//
// Two series are equal iff they carry the same trunc marker and agree at
// every exponent <= trunc. Comparing across different horizons is
// deliberately not an equality.
class LaurentSeries {
public:
    LaurentSeries() : shift_(1), trunc_(0) {}
    LaurentSeries(long long shift, long long trunc, std::vector<Int> coeffs);

    static LaurentSeries zero(long long trunc);
    static LaurentSeries from_poly(const LaurentPoly& p, long long trunc);

    long long shift() const { return shift_; }
    long long trunc() const { return trunc_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Exact coefficient of t^a. Throws for a > trunc (the value there is
    // unknown, never silently zero); returns 0 below the shift.
    Int coefficient_at(long long a) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    // Canonical JSON: {"shift":s,"trunc":r,"coeffs":[...]} with plain
    // decimal integers of any size.
    std::string to_json() const;

    std::string to_string() const;

private:
    void canonicalize();

    long long shift_;
    long long trunc_;
    std::vector<Int> coeffs_;
};

// Parses the canonical JSON rendering back into a series, exactly (no
// 64-bit limits). Unknown keys are ignored; malformed input throws.
LaurentSeries laurent_from_json(const std::string& text);

// Power-series expansion of numer / prod_d (1 - t^d), exact to trunc.
// Every d must be positive.
LaurentSeries expand_rational(const LaurentPoly& numer, const std::vector<long long>& denom_exps,
                              long long trunc);

// Exact long division of numer by prod_d (1 - t^d). Returns the quotient
// and whether the division was exact; on an inexact division the partial
// quotient is returned with the flag false (no throw — inexactness is an
// answer here, not an error).
std::pair<LaurentPoly, bool> exact_poly_quotient(const LaurentPoly& numer,
                                                 const std::vector<long long>& denom_exps);

// Truncated two-variable series in (t, s); s-degree bounded by max_s,
// t-exponents may be negative.
class BiSeries {
public:
    BiSeries(long long trunc_t, int max_s);

    long long trunc_t() const { return trunc_t_; }
    int max_s() const { return max_s_; }
    const std::map<std::pair<long long, int>, Int>& coeffs() const { return coeffs_; }

    void add(long long t_exp, int s_exp, const Int& c);
    Int coefficient_at(long long t_exp, int s_exp) const;

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    long long trunc_t_;
    int max_s_;
    std::map<std::pair<long long, int>, Int> coeffs_; // nonzero only
};

// Assemble s-graded slices into a BiSeries (all slices must share one
// truncation), and extract the s^0 slice back.
BiSeries bi_collect(const std::map<int, LaurentSeries>& slices, int max_s);
LaurentSeries bi_eval_s0(const BiSeries& f);
LaurentSeries bi_slice(const BiSeries& f, int s_exp);

} // namespace stmult
