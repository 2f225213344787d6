#pragma once

#include "stmult/params.hpp"
#include "stmult/partition.hpp"

#include <vector>

namespace stmult {

// A weight is a tuple of exactly n integers; dominant means weakly
// decreasing. Negative entries are allowed (the weight lattice of GL_n).
using Weight = std::vector<long long>;

bool is_dominant(const Weight& w);
long long weight_sum(const Weight& w);

// rho = (n-1, n-2, ..., 1, 0)
Weight rho_weight(int n);

// (1^m, 0^(n-m))
Weight omega_weight(int n, int m);

// Partition -> weight padded with zeros to n entries (throws if too long),
// and back (entries must be nonnegative and weakly decreasing).
Weight weight_from_partition(const Partition& mu, int n);
Partition partition_from_weight(const Weight& w);

// Membership in X_r: 0 <= w_n < q and w_i - w_(i+1) < q for all i.
bool q_restricted(const Weight& w, const GroupParams& params);

// (q-1)rho + w0.w  (entry reversal of w added to (q-1)rho)
Weight steinberg_shift(const Weight& w, const GroupParams& params);

// -w0.w (negate and reverse)
Weight dual_weight(const Weight& w);

// Adds the unique multiple of (q-1)omega_n putting the last entry in
// [0, q-2]; Det^(q-1) is trivial so this does not change the simple module.
Weight normalize_det_twist(const Weight& w, const GroupParams& params);

// Tensor rule for a symmetric power: all w + (a_1..a_n) with a_i >= 0,
// sum a_i = a and w_i + a_i <= w_(i-1) for i >= 2 (horizontal strips).
// Results are automatically dominant; no duplicates.
std::vector<Weight> pieri_row(const Weight& w, long long a);

// Tensor rule for an exterior power: all dominant w + eps_{i_1} + ... +
// eps_{i_m} with i_1 < ... < i_m; non-dominant candidates are discarded.
std::vector<Weight> pieri_column(const Weight& w, int m);

std::string weight_to_string(const Weight& w);

} // namespace stmult
