#include "stmult/kostka.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace stmult {

namespace {

// Count chains of shapes 0 = c^0 <= c^1 <= ... <= c^m = shape where each
// step adds a horizontal strip of content[v] boxes.
long long count_strip_chains(const std::vector<int>& shape, const std::vector<int>& content) {
    int rows = static_cast<int>(shape.size());
    std::vector<int> cur(rows, 0);
    long long total = 0;
    std::function<void(int)> place = [&](int v) {
        if (v == static_cast<int>(content.size())) {
            if (std::equal(cur.begin(), cur.end(), shape.begin())) total++;
            return;
        }
        // add content[v] boxes: row i may grow to at most min(shape_i, previous
        // row's old length); rows processed top to bottom
        std::vector<int> old = cur;
        std::function<void(int, int)> rec = [&](int row, int remaining) {
            if (row == rows) {
                if (remaining == 0) place(v + 1);
                return;
            }
            int hi = shape[row];
            if (row > 0) hi = std::min(hi, old[row - 1]); // strict columns
            int lo = old[row];
            for (int x = lo; x <= hi && x - lo <= remaining; ++x) {
                cur[row] = x;
                rec(row + 1, remaining - (x - lo));
            }
            cur[row] = lo;
        };
        rec(0, content[v]);
    };
    place(0);
    return total;
}

} // namespace

long long kostka_number(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size()) return 0;
    if (shape.empty()) return 1;
    if (!dominance_leq(content, shape)) return 0;
    return count_strip_chains(shape.parts(), content.parts());
}

Int elem_to_monomial_coeff(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) return 0;
    if (nu.empty()) return 1;
    int vars = std::max({static_cast<int>(nu.size()), mu.length(), 1});

    // product of e_{nu_j} as a genuine polynomial over `vars` variables
    using Mono = std::vector<int>;
    std::map<Mono, Int> poly;
    poly[Mono(vars, 0)] = 1;
    for (int part : nu.parts()) {
        std::map<Mono, Int> next;
        std::vector<int> idx;
        std::function<void(int, const Mono&, const Int&)> choose = [&](int from, const Mono& base,
                                                                       const Int& coeff) {
            if (static_cast<int>(idx.size()) == part) {
                Mono m = base;
                for (int i : idx) m[i] += 1;
                next[m] += coeff;
                return;
            }
            int need = part - static_cast<int>(idx.size());
            for (int i = from; i + need <= vars; ++i) {
                idx.push_back(i);
                choose(i + 1, base, coeff);
                idx.pop_back();
            }
        };
        for (const auto& [m, c] : poly) choose(0, m, c);
        poly.swap(next);
    }

    Mono target(vars, 0);
    for (int i = 0; i < mu.length(); ++i) target[i] = mu.part(i);
    auto it = poly.find(target);
    return it == poly.end() ? Int(0) : it->second;
}

} // namespace stmult
