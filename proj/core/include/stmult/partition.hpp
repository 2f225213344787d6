#pragma once

#include "stmult/bigint.hpp"

#include <compare>
#include <string>
#include <vector>

namespace stmult {

// Integer partition: weakly decreasing positive parts, no trailing zeros
// stored. The universal index type for tensor factors, weights and
// multiplicity targets.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts); // strips trailing zeros, validates

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;
    bool empty() const { return parts_.empty(); }

    // i-th part, 0-based, zero beyond the length.
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }

    Partition conjugate() const;

    std::string to_string() const; // "(2,1)"; "()" when empty

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

// Partial sums comparison: true iff sum(mu_1..mu_j) <= sum(nu_1..nu_j) for
// all j. Only defined between partitions of the same size.
bool dominance_leq(const Partition& mu, const Partition& nu);

// |W^mu|: the number of distinct rearrangements of mu padded with zeros to n
// entries, i.e. n! / prod_v (multiplicity of value v)!.
Int orbit_count(const Partition& mu, int n);
Int orbit_count(const std::vector<long long>& entries);

// All partitions of d (optionally with at most max_len parts), in a fixed
// deterministic order.
std::vector<Partition> partitions_of(long long d);
std::vector<Partition> partitions_of(long long d, int max_len);

} // namespace stmult
