#include "stmult/pim.hpp"

#include "stmult/errors.hpp"
#include "stmult/kostka.hpp"

#include <algorithm>
#include <cassert>

namespace stmult {

Int steinberg_dim(const GroupParams& params) {
    Int q = params.q;
    Int r = 1;
    for (int i = 0; i < params.n * (params.n - 1) / 2; ++i) r *= q;
    return r;
}

Int pim_dim(const GroupParams& params, const Weight& mu) {
    if (!params.coxeter_ok())
        throw PreconditionError("pim_dim requires p > n (Coxeter number)");
    if (mu.empty() || static_cast<int>(mu.size()) > params.n)
        throw PreconditionError("pim_dim: weight does not fit into n entries");
    Weight padded = mu;
    padded.resize(static_cast<std::size_t>(params.n), 0);
    if (!is_dominant(padded))
        throw PreconditionError("pim_dim: weight must be dominant");
    if (padded.front() - padded.back() > params.p - 1)
        throw PreconditionError("pim_dim requires mu_1 - mu_n <= p - 1");
    return steinberg_dim(params) * orbit_count(padded);
}

Int pim_dim(const GroupParams& params, const Partition& mu) {
    return pim_dim(params, weight_from_partition(mu, params.n));
}

Int PimDecomposition::total_dim() const {
    Int s = 0;
    for (const auto& e : entries) s += e.mult * e.dim;
    return s;
}

PimDecomposition pim_decompose(const GroupParams& params, const Partition& nu, long long k,
                               bool dual) {
    if (!params.coxeter_ok())
        throw PreconditionError("pim_decompose requires p > n (Coxeter number)");
    if (nu.part(0) > params.n)
        throw PreconditionError("pim_decompose requires nu_1 <= n");
    Partition conj = nu.conjugate();
    // conj read with n entries (zero padded) for the spread hypothesis
    if (conj.part(0) - conj.part(params.n - 1) > params.p - 1)
        throw PreconditionError("pim_decompose requires nu'_1 - nu'_n <= p - 1");
    long long kr = params.det_reduce(k);

    PimDecomposition out;
    for (const Partition& tau : partitions_of(nu.size(), params.n)) {
        if (!dominance_leq(tau, conj)) continue;
        Int mult = elem_to_monomial_coeff(nu, tau);
        if (mult == 0) continue;
        Weight tw = weight_from_partition(tau, params.n);
        Weight w;
        if (dual) {
            // (q-1)rho - tau + k omega_n
            Weight rho = rho_weight(params.n);
            w.resize(static_cast<std::size_t>(params.n));
            for (int i = 0; i < params.n; ++i)
                w[static_cast<std::size_t>(i)] =
                    (params.q - 1) * rho[static_cast<std::size_t>(i)] - tw[static_cast<std::size_t>(i)] + kr;
        } else {
            w = steinberg_shift(tw, params);
            for (long long& x : w) x += kr;
        }
        w = normalize_det_twist(w, params);
        assert(q_restricted(w, params));
        Weight mu_for_dim = tw;
        for (long long& x : mu_for_dim) x += kr; // constant shift keeps the orbit size
        out.entries.push_back({std::move(w), std::move(mult), pim_dim(params, mu_for_dim)});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const PimEntry& a, const PimEntry& b) { return a.weight < b.weight; });
    return out;
}

} // namespace stmult
