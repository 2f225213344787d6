#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <stmult/bigint.hpp>
#include <stmult/laurent.hpp>
#include <stmult/params.hpp>
#include <stmult/partition.hpp>
#include <stmult/specialize.hpp>

#include <functional>
#include <vector>

namespace testsupport {

using stmult::GroupParams;
using stmult::Int;
using stmult::LaurentPoly;
using stmult::Partition;
using stmult::SpecPoints;

inline GroupParams params_for_q(int n, long long q) {
    for (long long p = 2; p <= q; ++p) {
        if (!stmult::is_prime(p)) continue;
        long long pw = p;
        int r = 1;
        while (pw < q) {
            pw *= p;
            r++;
        }
        if (pw == q) return GroupParams(n, p, r);
    }
    throw std::invalid_argument("q is not a prime power");
}

// Schur evaluation by direct semistandard-tableau enumeration: sum over
// SSYT of the shape with entries in 1..#points of t^(sum of the entries'
// exponents). Independent of the Jacobi-Trudi determinant.
inline LaurentPoly schur_by_tableaux(const Partition& shape, const SpecPoints& pts) {
    LaurentPoly out;
    if (shape.empty()) return LaurentPoly::one();
    int rows = shape.length();
    int n = pts.size();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.part(i)), 0);
    std::function<void(int, int, long long)> fill = [&](int i, int j, long long exp) {
        if (i == rows) {
            out.add_term(exp, 1);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= shape.part(i)) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
        if (i > 0) lo = std::max(lo, t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
        for (int v = lo; v <= n; ++v) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            fill(ni, nj, exp + pts.exponents[static_cast<std::size_t>(v - 1)]);
        }
    };
    fill(0, 0, 0);
    return out;
}

// Weyl dimension formula for gl_n: prod_{i<j} (mu_i - mu_j + j - i)/(j - i).
inline Int weyl_dim(const Partition& mu, int n) {
    Int num = 1, den = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            num *= mu.part(i - 1) - mu.part(j - 1) + j - i;
            den *= j - i;
        }
    return num / den;
}

// Number of multisets from `parts` summing to `total` (direct enumeration).
inline long long count_part_multisets(long long total, const std::vector<long long>& parts,
                                      std::size_t from = 0) {
    if (total == 0) return 1;
    if (total < 0 || from == parts.size()) return 0;
    return count_part_multisets(total - parts[from], parts, from) +
           count_part_multisets(total, parts, from + 1);
}

} // namespace testsupport
