#pragma once

#include "stmult/laurent.hpp"
#include "stmult/params.hpp"
#include "stmult/partition.hpp"

namespace stmult {

// One multiplicity query dim Hom(St, S^a(V) (x) wedge^nu(V) (x) Det^k),
// answered by counting instead of by a closed form. det_power is reduced
// into [0, q-2] on construction.
struct OracleQuery {
    GroupParams params;
    long long sym_degree;  // a
    Partition wedge_parts; // nu (possibly empty)
    long long det_power;   // k, reduced

    OracleQuery(GroupParams params, long long a, Partition nu, long long k);
};

// Counts solutions of the linear inequality system extracted from the
// characteristic-zero weight bookkeeping: pairs of a column-index tuple
// (one strictly increasing tuple per part of nu) and a dominant lambda of
// the forced size. Valid on the domain the system was derived on: either a
// single wedge part (any k, with a dedicated path for k == 0 mod q-1), or
// several parts with k >= 1 and k + l(nu) <= q - 1.
long long lattice_count(const OracleQuery& query);

// The universal oracle: runs the tensor-product decomposition honestly, one
// symmetric-power row rule then one column rule per part of nu, pruning
// non-dominant weights, and reads off the multiplicity of the target weight
// (q-1)rho + q lambda, summed over dominant lambda of the forced size.
// No hypothesis on k or nu beyond nu_1 <= n.
//
// lambda entries are scanned down to lambda_last_min (default 0; see the
// derivation in the implementation for why 0 loses nothing — the widened
// scan exists to test exactly that).
long long pieri_count(const OracleQuery& query, long long lambda_last_min = 0);

// Series whose coefficient at every degree a <= trunc is pieri_count.
LaurentSeries wedge_series_by_pieri(const GroupParams& params, const Partition& nu, long long k,
                                    long long trunc);

// The graded multiplicity of St in S^*(V) (x) L(mu) (x) Det^k, computed
// without any Schur-polynomial evaluation: subtract the smaller simple
// constituents of wedge^{mu'}(V) (Kostka-weighted) recursively along the
// dominance order, with all wedge series taken from pieri_count. Requires
// 1 <= |mu| <= p-1 and k + mu_1 <= q-1.
LaurentSeries simple_series_by_recursion(const GroupParams& params, const Partition& mu, long long k,
                                         long long trunc);

} // namespace stmult
