#pragma once

#include "stmult/laurent.hpp"
#include "stmult/params.hpp"
#include "stmult/partition.hpp"

#include <vector>

namespace stmult {

// A geometric specialization point list: variable x_i evaluates to
// t^(exponents[i]). The two families the closed forms use are
// descending = (-1, -q, ..., -q^(n-1)) and ascending = (1, q, ..., q^(n-1));
// arbitrary exponent lists are accepted so tests can probe other points.
struct SpecPoints {
    std::vector<long long> exponents;

    static SpecPoints descending(const GroupParams& params);
    static SpecPoints ascending(const GroupParams& params);
    // First `count` points of the descending family (for the formulas that
    // drop the top variable).
    static SpecPoints descending_prefix(const GroupParams& params, int count);

    int size() const { return static_cast<int>(exponents.size()); }
};

// e_m at the points. Zero for m beyond the number of points, e_0 = 1. The
// partition-indexed operations below refuse such arguments instead; this
// scalar helper is for the formulas whose statements genuinely involve a
// vanishing e_m.
LaurentPoly elementary_sym(int m, const SpecPoints& pts);

// prod_j e_{nu_j} at the points; requires nu_1 <= number of points.
LaurentPoly elementary_spec(const Partition& nu, const SpecPoints& pts);

// Sum of t^(sum sigma(mu)_i d_i) over the distinct rearrangements sigma(mu)
// of mu padded to the number of points; requires l(mu) <= number of points.
LaurentPoly monomial_spec(const Partition& mu, const SpecPoints& pts);

// Schur polynomial s_mu at the points, by the dual Jacobi-Trudi determinant
// det(e_{mu'_i - i + j}) of size mu_1; requires l(mu) <= number of points.
LaurentPoly schur_spec(const Partition& mu, const SpecPoints& pts);

} // namespace stmult
