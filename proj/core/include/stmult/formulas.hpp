#pragma once

#include "stmult/laurent.hpp"
#include "stmult/params.hpp"
#include "stmult/partition.hpp"
#include "stmult/pim.hpp"
#include "stmult/weight.hpp"

#include <string>

namespace stmult {

// The tensor factor F in Hom(St, S^a(V) (x) F (x) Det^k). Each kind carries
// the payload named in the factory.
struct TensorFactor {
    enum class Kind {
        none,          // no extra factor
        wedge,         // wedge^m(V)
        wedge_dual,    // wedge^m(V)^*
        wedge_nu,      // wedge^nu(V) = wedge^{nu_1} (x) ... (x) wedge^{nu_l}
        wedge_nu_dual, // wedge^nu(V)^*
        simple,        // L(mu), |mu| <= p-1
        simple_dual,   // L(mu)^*
        power_det,     // V^{(x) l}
    };

    Kind kind = Kind::none;
    int degree = 0;  // m for wedge kinds, l for power_det
    Partition shape; // nu or mu

    static TensorFactor none() { return {}; }
    static TensorFactor wedge(int m) { return {Kind::wedge, m, {}}; }
    static TensorFactor wedge_dual(int m) { return {Kind::wedge_dual, m, {}}; }
    static TensorFactor wedge_nu(Partition nu) { return {Kind::wedge_nu, 0, std::move(nu)}; }
    static TensorFactor wedge_nu_dual(Partition nu) { return {Kind::wedge_nu_dual, 0, std::move(nu)}; }
    static TensorFactor simple(Partition mu) { return {Kind::simple, 0, std::move(mu)}; }
    static TensorFactor simple_dual(Partition mu) { return {Kind::simple_dual, 0, std::move(mu)}; }
    static TensorFactor power_det(int l) { return {Kind::power_det, l, {}}; }

    std::string describe() const;
};

struct SteinbergSeries {
    LaurentSeries series;
    std::string formula; // which closed form was dispatched
};

// The graded multiplicity of St in S^*(V) (x) F (x) Det^k, as the exact
// expansion of the matching closed form. k is reduced mod q-1 first; the
// hypothesis of the dispatched form is then checked strictly and a
// PreconditionError names it on failure.
SteinbergSeries steinberg_series(const GroupParams& params, const TensorFactor& factor, long long k,
                                 long long trunc);

// Bi-graded multiplicity of St in S^*(V) (x) wedge^*(V) (x) Det^k, for
// 0 <= k <= q-2; the s-degree tracks the exterior power and is at most n.
BiSeries steinberg_bigraded(const GroupParams& params, long long k, long long trunc);

// A simple module whose graded composition multiplicity in S^*(V) has a
// closed form here.
struct CompTarget {
    enum class Kind {
        wedge_weight,  // highest weight built from a wedge weight and a det twist, any p
        monomial_desc, // L((q-1)rho - mu + k omega_n), p > n, mu_1 <= k
        monomial_asc,  // L((q-1)rho + w0.mu + k omega_n), p > n, mu_1 + k < q-1
    };
    Kind kind = Kind::monomial_desc;
    int m = 0; // wedge_weight only
    Partition mu;
    long long k = 0;

    static CompTarget wedge_weight(int m, long long k) { return {Kind::wedge_weight, m, {}, k}; }
    static CompTarget monomial_desc(Partition mu, long long k) {
        return {Kind::monomial_desc, 0, std::move(mu), k};
    }
    static CompTarget monomial_asc(Partition mu, long long k) {
        return {Kind::monomial_asc, 0, std::move(mu), k};
    }
};

struct CompSeries {
    LaurentSeries series;
    Weight target; // normalized (q-restricted) highest weight of the target simple
    std::string formula;
};

CompSeries composition_series(const GroupParams& params, const CompTarget& target, long long trunc);

// Hilbert series of the invariant ring: 1 / prod_i (1 - t^(q^n - q^i)).
LaurentSeries dickson_series(const GroupParams& params, long long trunc);

struct CoinvariantResult {
    LaurentPoly poly;  // exact graded multiplicity in the coinvariant algebra
    Int value_at_one;  // sum of coefficients = dim of the projective cover
    Weight target;
};

// Graded composition multiplicity of the monomial-kind targets in the
// coinvariant algebra: the series numerator times prod(1 - t^(q^n - q^i)),
// divided exactly by prod(1 - t^(q^i - 1)). The division being exact is a
// theorem; an inexact division signals an implementation bug and throws.
CoinvariantResult coinvariant_multiplicity(const GroupParams& params, const CompTarget& target);

// Conjectured graded multiplicity of L(mu) (x) Det^k in the socle of
// S^*(V). For mu = () and k = 0 this reduces to the proven invariant-ring
// series; every other instance is a conjecture and is labeled as such by
// the CLI.
LaurentSeries socle_conjecture_series(const GroupParams& params, const Partition& mu, long long k,
                                      long long trunc);

} // namespace stmult
