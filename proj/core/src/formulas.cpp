#include "stmult/formulas.hpp"

#include "stmult/errors.hpp"
#include "stmult/specialize.hpp"

#include <cassert>
#include <sstream>

namespace stmult {

namespace {

// {q^i - 1 : i = 1..n}, the symmetric-algebra denominator exponents
std::vector<long long> sym_denoms(const GroupParams& params) {
    std::vector<long long> d;
    long long pw = params.q;
    for (int i = 1; i <= params.n; ++i) {
        d.push_back(pw - 1);
        pw = checked_mul(pw, params.q);
    }
    return d;
}

// {q^n - q^i : i = 0..n-1}, the invariant-ring degrees
std::vector<long long> dickson_denoms(const GroupParams& params) {
    long long qn = checked_pow(params.q, params.n);
    std::vector<long long> d;
    long long pw = 1;
    for (int i = 0; i < params.n; ++i) {
        d.push_back(qn - pw);
        pw = checked_mul(pw, params.q);
    }
    return d;
}

LaurentPoly prefactor(const GroupParams& params, long long multiple_of_geom) {
    long long e = checked_add(-params.n, checked_mul(multiple_of_geom, params.q_geom_sum()));
    return LaurentPoly::monomial(e);
}

long long qn_minus_1(const GroupParams& params) { return checked_pow(params.q, params.n) - 1; }

// representative of k in [1, q-1] (0 and q-1 name the same det twist)
long long det_rep(const GroupParams& params, long long k_red) {
    return k_red == 0 ? params.q - 1 : k_red;
}

// (1 - t^(q^n-1)) e_m(n-1 descending points) + t^(q^n-1) e_m(n descending
// points), the k == 0 (mod q-1) combination
LaurentPoly wedge_zero_twist_numer(const GroupParams& params, int m) {
    LaurentPoly low = elementary_sym(m, SpecPoints::descending_prefix(params, params.n - 1));
    LaurentPoly high = elementary_sym(m, SpecPoints::descending(params));
    LaurentPoly tq = LaurentPoly::monomial(qn_minus_1(params));
    return low - tq * low + tq * high;
}

} // namespace

std::string TensorFactor::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::none: os << "none"; break;
    case Kind::wedge: os << "wedge(m=" << degree << ")"; break;
    case Kind::wedge_dual: os << "wedge-dual(m=" << degree << ")"; break;
    case Kind::wedge_nu: os << "wedgenu(nu=" << shape.to_string() << ")"; break;
    case Kind::wedge_nu_dual: os << "wedgenu-dual(nu=" << shape.to_string() << ")"; break;
    case Kind::simple: os << "simple(mu=" << shape.to_string() << ")"; break;
    case Kind::simple_dual: os << "simple-dual(mu=" << shape.to_string() << ")"; break;
    case Kind::power_det: os << "powerdet(ell=" << degree << ")"; break;
    }
    return os.str();
}

SteinbergSeries steinberg_series(const GroupParams& params, const TensorFactor& factor, long long k,
                                 long long trunc) {
    const long long q = params.q;
    const int n = params.n;
    const long long k_red = params.det_reduce(k);
    const std::vector<long long> denoms = sym_denoms(params);
    const SpecPoints desc = SpecPoints::descending(params);

    LaurentPoly num;
    std::string label;

    switch (factor.kind) {
    case TensorFactor::Kind::none:
    case TensorFactor::Kind::wedge: {
        int m = factor.kind == TensorFactor::Kind::none ? 0 : factor.degree;
        if (m < 0 || m > n) throw PreconditionError("wedge factor requires 0 <= m <= n");
        if (k_red == 0) {
            num = prefactor(params, 1) * wedge_zero_twist_numer(params, m);
            label = "wedge-det-zero";
        } else {
            num = prefactor(params, q - k_red) * elementary_sym(m, desc);
            label = "wedge-det-twist";
        }
        break;
    }
    case TensorFactor::Kind::wedge_dual: {
        int m = factor.degree;
        if (m < 0 || m > n) throw PreconditionError("dual wedge factor requires 0 <= m <= n");
        long long kk = det_rep(params, k_red);
        if (kk == 1) {
            num = prefactor(params, 1) * wedge_zero_twist_numer(params, n - m);
            label = "wedge-dual-low";
        } else {
            num = prefactor(params, q + 1 - kk) * elementary_sym(n - m, desc);
            label = "wedge-dual";
        }
        break;
    }
    case TensorFactor::Kind::wedge_nu: {
        const Partition& nu = factor.shape;
        if (nu.part(0) > n) throw PreconditionError("wedge^nu factor requires nu_1 <= n");
        if (k_red < 1 || k_red + nu.length() > q - 1)
            throw PreconditionError(
                "wedge^nu series requires k >= 1 and k + l(nu) <= q - 1 (k reduced mod q-1)");
        num = prefactor(params, q - k_red) * elementary_spec(nu, desc);
        label = "wedge-product";
        break;
    }
    case TensorFactor::Kind::wedge_nu_dual: {
        const Partition& nu = factor.shape;
        if (nu.empty()) throw PreconditionError("dual wedge^nu series requires a nonempty nu");
        if (nu.part(0) > n) throw PreconditionError("wedge^nu factor requires nu_1 <= n");
        long long kk = det_rep(params, k_red);
        if (nu.length() >= kk)
            throw PreconditionError(
                "dual wedge^nu series requires l(nu) < k <= q - 1 (k reduced mod q-1)");
        num = prefactor(params, q - kk) * elementary_spec(nu, SpecPoints::ascending(params));
        label = "wedge-product-dual";
        break;
    }
    case TensorFactor::Kind::simple: {
        const Partition& mu = factor.shape;
        if (mu.length() > n) throw PreconditionError("simple factor requires l(mu) <= n");
        if (mu.size() < 1 || mu.size() > params.p - 1)
            throw PreconditionError("simple factor requires 1 <= |mu| <= p - 1");
        long long kk = det_rep(params, k_red);
        if (kk + mu.part(0) > q - 1)
            throw PreconditionError("simple-module series requires k + mu_1 <= q - 1");
        num = prefactor(params, q - kk) * schur_spec(mu, desc);
        label = "simple-descending";
        break;
    }
    case TensorFactor::Kind::simple_dual: {
        const Partition& mu = factor.shape;
        if (mu.length() > n) throw PreconditionError("simple factor requires l(mu) <= n");
        if (mu.size() < 1 || mu.size() > params.p - 1)
            throw PreconditionError("simple factor requires 1 <= |mu| <= p - 1");
        long long kk = det_rep(params, k_red);
        if (mu.part(0) >= kk)
            throw PreconditionError("dual simple-module series requires mu_1 < k <= q - 1");
        num = prefactor(params, q - kk) * schur_spec(mu, SpecPoints::ascending(params));
        label = "simple-ascending";
        break;
    }
    case TensorFactor::Kind::power_det: {
        int l = factor.degree;
        if (l < 0) throw PreconditionError("power factor requires l >= 0");
        long long kk = det_rep(params, k_red);
        LaurentPoly low = elementary_sym(1, SpecPoints::descending_prefix(params, n - 1));
        LaurentPoly top = LaurentPoly::monomial(-checked_pow(q, n - 1));
        LaurentPoly first, second;
        for (long long c = 0; c <= l; ++c) {
            LaurentPoly term = low.pow(l - c) * top.pow(c);
            Int b = binomial(l, c);
            LaurentPoly scaled;
            for (const auto& [e, v] : term.terms()) scaled.add_term(e, v * b);
            if (c <= q - 1 - kk) first += scaled;
            if (c >= q - kk) second += scaled;
        }
        num = prefactor(params, q - kk) * first + prefactor(params, 2 * q - 1 - kk) * second;
        label = "power-det";
        break;
    }
    }

    return {expand_rational(num, denoms, trunc), label};
}

BiSeries steinberg_bigraded(const GroupParams& params, long long k, long long trunc) {
    const long long q = params.q;
    const int n = params.n;
    const long long k_red = params.det_reduce(k);

    // numerator as a polynomial in s with Laurent-polynomial coefficients
    std::vector<LaurentPoly> num(static_cast<std::size_t>(n) + 1);
    if (k_red == 0) {
        // t^(-n) (s t^(q^n-1) + t^(q^(n-1))) prod_{i=0}^{n-2} (s + t^(q^i))
        num[0] = LaurentPoly::monomial(checked_pow(q, n - 1) - n);
        num[1] = LaurentPoly::monomial(qn_minus_1(params) - n);
        for (int i = 0; i <= n - 2; ++i) {
            LaurentPoly tq = LaurentPoly::monomial(checked_pow(q, i));
            for (int s = static_cast<int>(num.size()) - 1; s >= 0; --s) {
                LaurentPoly shifted = (s > 0) ? num[static_cast<std::size_t>(s - 1)] : LaurentPoly();
                num[static_cast<std::size_t>(s)] =
                    num[static_cast<std::size_t>(s)] * tq + shifted;
            }
        }
    } else {
        // t^(-n + (q-1-k) g) prod_{i=0}^{n-1} (s + t^(q^i))
        num[0] = prefactor(params, q - 1 - k_red);
        for (int i = 0; i <= n - 1; ++i) {
            LaurentPoly tq = LaurentPoly::monomial(checked_pow(q, i));
            for (int s = static_cast<int>(num.size()) - 1; s >= 0; --s) {
                LaurentPoly shifted = (s > 0) ? num[static_cast<std::size_t>(s - 1)] : LaurentPoly();
                num[static_cast<std::size_t>(s)] =
                    num[static_cast<std::size_t>(s)] * tq + shifted;
            }
        }
    }

    const std::vector<long long> denoms = sym_denoms(params);
    std::map<int, LaurentSeries> slices;
    for (int s = 0; s <= n; ++s)
        slices.emplace(s, expand_rational(num[static_cast<std::size_t>(s)], denoms, trunc));
    return bi_collect(slices, n);
}

CompSeries composition_series(const GroupParams& params, const CompTarget& target, long long trunc) {
    const long long q = params.q;
    const int n = params.n;
    const std::vector<long long> denoms = sym_denoms(params);

    switch (target.kind) {
    case CompTarget::Kind::wedge_weight: {
        int m = target.m;
        if (m < 1 || m > n - 1)
            throw PreconditionError("wedge-weight composition target requires 1 <= m <= n - 1");
        long long kk = det_rep(params, params.det_reduce(target.k));
        LaurentPoly num;
        std::string label;
        if (kk <= q - 2) {
            num = prefactor(params, q - kk) * elementary_sym(m, SpecPoints::descending(params));
            label = "comp-wedge-weight";
        } else {
            num = prefactor(params, 1) * wedge_zero_twist_numer(params, m);
            if (q == 2) num -= prefactor(params, 1);
            label = "comp-wedge-weight-zero";
        }
        Weight gamma(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            gamma[static_cast<std::size_t>(i - 1)] = (q - 1) * (n - i) - kk - (i <= m ? 1 : 0);
        gamma = normalize_det_twist(gamma, params);
        assert(q_restricted(gamma, params));
        return {expand_rational(num, denoms, trunc), std::move(gamma), std::move(label)};
    }
    case CompTarget::Kind::monomial_desc:
    case CompTarget::Kind::monomial_asc: {
        const bool desc = target.kind == CompTarget::Kind::monomial_desc;
        const Partition& mu = target.mu;
        if (!params.coxeter_ok())
            throw PreconditionError("monomial composition targets require p > n (Coxeter number)");
        if (mu.length() > n)
            throw PreconditionError("monomial composition targets require l(mu) <= n");
        if (mu.part(0) - mu.part(n - 1) > params.p - 1)
            throw PreconditionError("monomial composition targets require mu_1 - mu_n <= p - 1");
        long long kr = params.det_reduce(target.k);
        if (desc && mu.part(0) > kr)
            throw PreconditionError("descending monomial target requires mu_1 <= k");
        if (!desc && mu.part(0) + kr >= q - 1)
            throw PreconditionError("ascending monomial target requires mu_1 + k < q - 1");
        SpecPoints pts = desc ? SpecPoints::descending(params) : SpecPoints::ascending(params);
        LaurentPoly num = prefactor(params, kr + 1) * monomial_spec(mu, pts);
        Weight w = weight_from_partition(mu, n);
        Weight rho = rho_weight(n);
        Weight tgt(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            long long base = (q - 1) * rho[static_cast<std::size_t>(i)] + kr;
            tgt[static_cast<std::size_t>(i)] =
                desc ? base - w[static_cast<std::size_t>(i)]
                     : base + w[static_cast<std::size_t>(n - 1 - i)];
        }
        tgt = normalize_det_twist(tgt, params);
        assert(q_restricted(tgt, params));
        return {expand_rational(num, denoms, trunc), std::move(tgt),
                desc ? "comp-monomial-descending" : "comp-monomial-ascending"};
    }
    }
    throw std::logic_error("unreachable");
}

LaurentSeries dickson_series(const GroupParams& params, long long trunc) {
    return expand_rational(LaurentPoly::one(), dickson_denoms(params), trunc);
}

CoinvariantResult coinvariant_multiplicity(const GroupParams& params, const CompTarget& target) {
    if (target.kind == CompTarget::Kind::wedge_weight)
        throw PreconditionError("coinvariant closed form covers the monomial-kind targets only");
    // reuse the composition dispatch for validation and the target weight
    CompSeries probe = composition_series(params, target, 0);

    const bool desc = target.kind == CompTarget::Kind::monomial_desc;
    long long kr = params.det_reduce(target.k);
    SpecPoints pts = desc ? SpecPoints::descending(params) : SpecPoints::ascending(params);
    LaurentPoly num = prefactor(params, kr + 1) * monomial_spec(target.mu, pts);
    for (long long d : dickson_denoms(params)) {
        LaurentPoly factor = LaurentPoly::one();
        factor.add_term(d, -1);
        num *= factor;
    }
    auto [quot, exact] = exact_poly_quotient(num, sym_denoms(params));
    if (!exact)
        throw std::logic_error("coinvariant multiplicity did not divide exactly; "
                               "the quotient is a polynomial by construction, this is a bug");
    Int at_one = quot.sum_coeffs();
    return {std::move(quot), std::move(at_one), std::move(probe.target)};
}

LaurentSeries socle_conjecture_series(const GroupParams& params, const Partition& mu, long long k,
                                      long long trunc) {
    if (mu.length() > params.n)
        throw PreconditionError("socle series requires l(mu) <= n");
    if (!mu.empty() && mu.size() > params.p - 1)
        throw PreconditionError("socle series requires 1 <= |mu| <= p - 1 (or mu empty)");
    long long kr = params.det_reduce(k);
    if (kr > params.q - 2 - mu.part(0))
        throw PreconditionError("socle series requires 0 <= k <= q - 2 - mu_1");
    LaurentPoly num = LaurentPoly::monomial(checked_mul(kr, params.q_geom_sum())) *
                      schur_spec(mu, SpecPoints::ascending(params));
    return expand_rational(num, dickson_denoms(params), trunc);
}

} // namespace stmult
