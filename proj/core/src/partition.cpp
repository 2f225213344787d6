#include "stmult/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stmult {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    long long s = 0;
    for (int x : parts_) s += x;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int x : parts_)
        for (int j = 0; j < x; ++j) conj[j]++;
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("dominance order is only defined for equal-size partitions");
    long long pm = 0, pn = 0;
    int len = std::max(mu.length(), nu.length());
    for (int j = 0; j < len; ++j) {
        pm += mu.part(j);
        pn += nu.part(j);
        if (pm > pn) return false;
    }
    return true;
}

Int orbit_count(const Partition& mu, int n) {
    if (mu.length() > n)
        throw std::invalid_argument("orbit_count: partition has more than n parts");
    std::vector<long long> entries(n, 0);
    for (int i = 0; i < mu.length(); ++i) entries[i] = mu.part(i);
    return orbit_count(entries);
}

Int orbit_count(const std::vector<long long>& entries) {
    std::map<long long, int> mult;
    for (long long v : entries) mult[v]++;
    Int r = factorial(static_cast<long long>(entries.size()));
    for (const auto& [v, m] : mult) r /= factorial(m);
    return r;
}

namespace {

void gen_partitions(long long remaining, int max_part, int max_len,
                    std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int x = static_cast<int>(std::min<long long>(max_part, remaining)); x >= 1; --x) {
        cur.push_back(x);
        gen_partitions(remaining - x, x, max_len - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(long long d, int max_len) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    gen_partitions(d, d > 0 ? static_cast<int>(d) : 0, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_of(long long d) {
    return partitions_of(d, d > 0 ? static_cast<int>(d) : 0);
}

} // namespace stmult
