#include "stmult/weight.hpp"

#include "stmult/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stmult {

bool is_dominant(const Weight& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

long long weight_sum(const Weight& w) {
    long long s = 0;
    for (long long x : w) s += x;
    return s;
}

Weight rho_weight(int n) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
    return w;
}

Weight omega_weight(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("omega_weight: m out of [0, n]");
    Weight w(n, 0);
    for (int i = 0; i < m; ++i) w[i] = 1;
    return w;
}

Weight weight_from_partition(const Partition& mu, int n) {
    if (mu.length() > n)
        throw std::invalid_argument("partition does not fit into " + std::to_string(n) + " entries");
    Weight w(n, 0);
    for (int i = 0; i < mu.length(); ++i) w[i] = mu.part(i);
    return w;
}

Partition partition_from_weight(const Weight& w) {
    std::vector<int> parts;
    parts.reserve(w.size());
    for (long long x : w) {
        if (x < 0) throw std::invalid_argument("weight with negative entries is not a partition");
        parts.push_back(static_cast<int>(x));
    }
    return Partition(std::move(parts));
}

bool q_restricted(const Weight& w, const GroupParams& params) {
    if (w.empty()) return false;
    if (w.back() < 0 || w.back() >= params.q) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] - w[i] < 0 || w[i - 1] - w[i] >= params.q) return false;
    return true;
}

Weight steinberg_shift(const Weight& w, const GroupParams& params) {
    if (static_cast<int>(w.size()) != params.n)
        throw std::invalid_argument("weight length does not match n");
    Weight out(w.rbegin(), w.rend());
    Weight rho = rho_weight(params.n);
    for (int i = 0; i < params.n; ++i) out[i] += (params.q - 1) * rho[i];
    return out;
}

Weight dual_weight(const Weight& w) {
    Weight out(w.rbegin(), w.rend());
    for (long long& x : out) x = -x;
    return out;
}

Weight normalize_det_twist(const Weight& w, const GroupParams& params) {
    if (w.empty()) return w;
    long long m = params.q - 1;
    long long last = w.back();
    long long rem = ((last % m) + m) % m; // in [0, q-2]
    long long c = (rem - last) / m;
    Weight out = w;
    for (long long& x : out) x += c * m;
    return out;
}

std::vector<Weight> pieri_row(const Weight& w, long long a) {
    if (!is_dominant(w)) throw std::invalid_argument("pieri_row: weight not dominant");
    if (a < 0) throw std::invalid_argument("pieri_row: negative degree");
    int n = static_cast<int>(w.size());
    std::vector<Weight> out;
    // choose a_2..a_n within the strip gaps; a_1 takes the remainder
    std::vector<long long> add(n, 0);
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i == n) {
            add[0] = a - used;
            Weight v = w;
            for (int j = 0; j < n; ++j) v[j] += add[j];
            out.push_back(std::move(v));
            return;
        }
        long long gap = w[i - 1] - w[i];
        for (long long x = 0; x <= std::min(gap, a - used); ++x) {
            add[i] = x;
            rec(i + 1, used + x);
        }
        add[i] = 0;
    };
    if (n == 1) {
        Weight v = w;
        v[0] += a;
        return {v};
    }
    rec(1, 0);
    return out;
}

std::vector<Weight> pieri_column(const Weight& w, int m) {
    if (!is_dominant(w)) throw std::invalid_argument("pieri_column: weight not dominant");
    int n = static_cast<int>(w.size());
    if (m < 0 || m > n) throw std::invalid_argument("pieri_column: m out of [0, n]");
    std::vector<Weight> out;
    std::vector<int> rows;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(rows.size()) == m) {
            Weight v = w;
            for (int i : rows) v[i] += 1;
            if (is_dominant(v)) out.push_back(std::move(v));
            return;
        }
        int need = m - static_cast<int>(rows.size());
        for (int i = next; i + need <= n; ++i) {
            rows.push_back(i);
            rec(i + 1);
            rows.pop_back();
        }
    };
    rec(0);
    return out;
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

} // namespace stmult
