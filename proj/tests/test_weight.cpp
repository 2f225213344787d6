#include <doctest.h>

#include <stmult/params.hpp>
#include <stmult/weight.hpp>

#include <algorithm>

using namespace stmult;

TEST_CASE("group parameters") {
    GroupParams P(2, 3, 2);
    CHECK(P.q == 9);
    CHECK(P.coxeter_ok());
    CHECK_FALSE(GroupParams(3, 2, 1).coxeter_ok());
    CHECK(P.det_reduce(8) == 0);
    CHECK(P.det_reduce(-1) == 7);
    CHECK(P.q_geom_sum() == 10);
    CHECK_THROWS(GroupParams(2, 4, 1)); // 4 not prime
    CHECK_THROWS(GroupParams(0, 2, 1));
    CHECK_THROWS(GroupParams(2, 2, 0));
}

TEST_CASE("weight transforms") {
    GroupParams P(2, 3, 1);
    CHECK(steinberg_shift({1, 0}, P) == Weight{2, 1});
    CHECK(dual_weight({3, 1, 0}) == Weight{0, -1, -3});
    CHECK(normalize_det_twist({0, -1}, P) == Weight{2, 1});
    CHECK(normalize_det_twist({5, 4}, P) == Weight{3, 2});
    CHECK(normalize_det_twist({1, 0}, P) == Weight{1, 0});
}

TEST_CASE("q-restricted predicate") {
    GroupParams P(3, 2, 1);
    CHECK(q_restricted({1, 1, 0}, P));
    CHECK(q_restricted({2, 1, 0}, P));        // the Steinberg weight (q-1)rho
    CHECK_FALSE(q_restricted({3, 1, 0}, P));  // gap 2 >= q
    CHECK_FALSE(q_restricted({1, 1, 2}, P));  // not dominant
    CHECK_FALSE(q_restricted({1, 0, -1}, P)); // negative last entry
}

TEST_CASE("row rule examples") {
    auto rows = pieri_row({1, 0}, 2);
    std::sort(rows.begin(), rows.end());
    CHECK(rows == std::vector<Weight>{{2, 1}, {3, 0}});
    CHECK(pieri_row({4, 2}, 0) == std::vector<Weight>{{4, 2}});
    CHECK(pieri_row({0, 0}, 3) == std::vector<Weight>{{3, 0}});
    for (const auto& w : pieri_row({5, 3, 1}, 4)) CHECK(is_dominant(w));
}

TEST_CASE("column rule examples") {
    auto cols = pieri_column({2, 1}, 1);
    std::sort(cols.begin(), cols.end());
    CHECK(cols == std::vector<Weight>{{2, 2}, {3, 1}});
    CHECK(pieri_column({1, 1}, 1) == std::vector<Weight>{{2, 1}});
    CHECK(pieri_column({4, 2}, 0) == std::vector<Weight>{{4, 2}});
    CHECK(pieri_column({3, 3, 1}, 3) == std::vector<Weight>{{4, 4, 2}});
    // every output differs from the input by a 0/1 vector with m ones
    for (int m = 0; m <= 3; ++m)
        for (const auto& w : pieri_column({4, 2, 2}, m)) {
            CHECK(is_dominant(w));
            long long ones = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                long long diff = w[i] - Weight{4, 2, 2}[i];
                CHECK((diff == 0 || diff == 1));
                ones += diff;
            }
            CHECK(ones == m);
        }
}

TEST_CASE("row rule strip count matches composition count") {
    // cardinality equals the number of compositions passing the gap test
    Weight lam{5, 3, 2, 2};
    long long a = 6;
    auto rows = pieri_row(lam, a);
    long long count = 0;
    for (long long a2 = 0; a2 <= lam[0] - lam[1]; ++a2)
        for (long long a3 = 0; a3 <= lam[1] - lam[2]; ++a3)
            for (long long a4 = 0; a4 <= lam[2] - lam[3]; ++a4)
                if (a2 + a3 + a4 <= a) count++;
    CHECK(static_cast<long long>(rows.size()) == count);
    // no duplicates
    std::vector<Weight> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}
