#pragma once

#include "stmult/bigint.hpp"
#include "stmult/params.hpp"
#include "stmult/partition.hpp"
#include "stmult/weight.hpp"

#include <vector>

namespace stmult {

// dim St = q^(n(n-1)/2), equal to prod_{i<n}(q^n - q^i) / prod_{i<=n}(q^i - 1).
Int steinberg_dim(const GroupParams& params);

// dim P(mu^0 + k omega_n) = dim St * |W^mu|. Requires p > n and
// mu_1 - mu_n <= p - 1 (entries beyond the length read as zero).
Int pim_dim(const GroupParams& params, const Weight& mu);
Int pim_dim(const GroupParams& params, const Partition& mu);

struct PimEntry {
    Weight weight; // q-restricted highest weight of the projective cover
    Int mult;
    Int dim;
};

// St (x) wedge^nu(V) (x) Det^k as a direct sum of projective
// indecomposables, one entry per q-restricted highest weight, sorted
// lexicographically. With dual=true, decomposes St (x) wedge^nu(V)^* (x)
// Det^k instead.
struct PimDecomposition {
    std::vector<PimEntry> entries;
    Int total_dim() const;
};

PimDecomposition pim_decompose(const GroupParams& params, const Partition& nu, long long k,
                               bool dual = false);

} // namespace stmult
