#include <doctest.h>

#include <stmult/partition.hpp>
#include <stmult/weight.hpp>

#include <random>

using namespace stmult;

TEST_CASE("conjugate examples") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
}

TEST_CASE("conjugate is an involution") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(0, 8), val(1, 20);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> parts(static_cast<std::size_t>(len(rng)));
        for (int& x : parts) x = val(rng);
        std::sort(parts.rbegin(), parts.rend());
        Partition mu(parts);
        CHECK(mu.conjugate().conjugate() == mu);
        CHECK(mu.conjugate().size() == mu.size());
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1}); // trailing zeros stripped
    CHECK(Partition{3, 1}.length() == 2);
    CHECK(Partition{3, 1}.part(5) == 0);
}

TEST_CASE("dominance examples") {
    CHECK(dominance_leq(Partition{2, 1, 1}, Partition{3, 1}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{2, 2}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_THROWS_AS(dominance_leq(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on each size up to 8") {
    for (long long d = 0; d <= 8; ++d) {
        auto all = partitions_of(d);
        for (const auto& a : all) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : all) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("orbit counts") {
    CHECK(orbit_count(Partition{2, 1}, 3) == 6);
    CHECK(orbit_count(Partition{1, 1}, 2) == 1);
    CHECK(orbit_count(Partition{2, 2}, 4) == 6);
    CHECK_THROWS_AS(orbit_count(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6, 2).size() == 4); // (6),(5,1),(4,2),(3,3)
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(-1).empty());
}

TEST_CASE("partition weight round trip") {
    Weight w = weight_from_partition(Partition{3, 1}, 4);
    CHECK(w == Weight{3, 1, 0, 0});
    CHECK(partition_from_weight(w) == Partition{3, 1});
    CHECK_THROWS_AS(weight_from_partition(Partition{1, 1, 1}, 2), std::invalid_argument);
}
