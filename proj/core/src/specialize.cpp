#include "stmult/specialize.hpp"

#include "stmult/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stmult {

SpecPoints SpecPoints::descending(const GroupParams& params) {
    return descending_prefix(params, params.n);
}

SpecPoints SpecPoints::descending_prefix(const GroupParams& params, int count) {
    SpecPoints pts;
    long long pw = 1;
    for (int i = 0; i < count; ++i) {
        pts.exponents.push_back(-pw);
        pw = checked_mul(pw, params.q);
    }
    return pts;
}

SpecPoints SpecPoints::ascending(const GroupParams& params) {
    SpecPoints pts = descending(params);
    for (long long& e : pts.exponents) e = -e;
    return pts;
}

LaurentPoly elementary_sym(int m, const SpecPoints& pts) {
    if (m < 0) throw std::invalid_argument("elementary_sym: negative degree");
    if (m > pts.size()) return {};
    // e_k DP over the points
    std::vector<LaurentPoly> e(static_cast<std::size_t>(m) + 1);
    e[0] = LaurentPoly::one();
    for (int i = 0; i < pts.size(); ++i) {
        LaurentPoly xi = LaurentPoly::monomial(pts.exponents[i]);
        for (int k = std::min(m, i + 1); k >= 1; --k) e[k] += e[k - 1] * xi;
    }
    return e[m];
}

LaurentPoly elementary_spec(const Partition& nu, const SpecPoints& pts) {
    if (nu.part(0) > pts.size())
        throw PreconditionError("elementary_spec requires nu_1 <= number of variables (e_m vanishes beyond it)");
    LaurentPoly out = LaurentPoly::one();
    for (int part : nu.parts()) out *= elementary_sym(part, pts);
    return out;
}

LaurentPoly monomial_spec(const Partition& mu, const SpecPoints& pts) {
    if (mu.length() > pts.size())
        throw PreconditionError("monomial_spec requires l(mu) <= number of variables");
    std::vector<long long> arr(static_cast<std::size_t>(pts.size()), 0);
    for (int i = 0; i < mu.length(); ++i) arr[static_cast<std::size_t>(i)] = mu.part(i);
    std::sort(arr.begin(), arr.end());
    LaurentPoly out;
    do {
        long long e = 0;
        for (int i = 0; i < pts.size(); ++i)
            e = checked_add(e, checked_mul(arr[static_cast<std::size_t>(i)], pts.exponents[i]));
        out.add_term(e, 1);
    } while (std::next_permutation(arr.begin(), arr.end()));
    return out;
}

namespace {

// Determinant by Laplace expansion along the first remaining row, memoised
// on the set of unused columns. Sizes here are at most mu_1, so this is
// plenty.
LaurentPoly det_memo(const std::vector<std::vector<LaurentPoly>>& m, int row, unsigned cols,
                     std::vector<std::pair<bool, LaurentPoly>>& memo) {
    int size = static_cast<int>(m.size());
    if (row == size) return LaurentPoly::one();
    auto& slot = memo[cols];
    if (slot.first) return slot.second;
    LaurentPoly acc;
    int sign = 1;
    for (int j = 0; j < size; ++j) {
        if (!(cols & (1u << j))) continue;
        LaurentPoly sub = det_memo(m, row + 1, cols & ~(1u << j), memo);
        sub *= m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        if (sign < 0) {
            LaurentPoly neg;
            neg -= sub;
            acc += neg;
        } else {
            acc += sub;
        }
        sign = -sign;
    }
    slot = {true, acc};
    return acc;
}

} // namespace

LaurentPoly schur_spec(const Partition& mu, const SpecPoints& pts) {
    if (mu.length() > pts.size())
        throw PreconditionError("schur_spec requires l(mu) <= number of variables");
    if (mu.empty()) return LaurentPoly::one();
    Partition conj = mu.conjugate();
    int size = mu.part(0);
    if (size > 31) throw std::invalid_argument("schur_spec: partition too wide");
    std::vector<std::vector<LaurentPoly>> m(static_cast<std::size_t>(size),
                                            std::vector<LaurentPoly>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            int deg = conj.part(i) - (i + 1) + (j + 1);
            if (deg >= 0)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = elementary_sym(deg, pts);
        }
    std::vector<std::pair<bool, LaurentPoly>> memo(1u << size, {false, LaurentPoly()});
    return det_memo(m, 0, (1u << size) - 1u, memo);
}

} // namespace stmult
