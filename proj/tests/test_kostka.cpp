#include <doctest.h>

#include "test_support.hpp"

#include <stmult/kostka.hpp>
#include <stmult/partition.hpp>

using namespace stmult;
using testsupport::weyl_dim;

TEST_CASE("kostka examples") {
    CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka_number(Partition{2, 2}, Partition{2, 2}) == 1);
    CHECK(kostka_number(Partition{1, 1}, Partition{2}) == 0);
    CHECK(kostka_number(Partition{}, Partition{}) == 1);
    CHECK(kostka_number(Partition{3}, Partition{1, 1}) == 0); // size mismatch
}

TEST_CASE("kostka diagonal and dominance support") {
    for (long long d = 1; d <= 7; ++d)
        for (const auto& mu : partitions_of(d)) {
            CHECK(kostka_number(mu, mu) == 1);
            for (const auto& nu : partitions_of(d)) {
                bool nonzero = kostka_number(mu, nu) > 0;
                CHECK(nonzero == dominance_leq(nu, mu));
            }
        }
}

// dim of the degree-|gamma| irreducible with highest weight gamma equals the
// tableau count sum_mu K_{gamma,mu} |W^mu|; cross-check against the Weyl
// dimension formula.
TEST_CASE("kostka vs Weyl dimension") {
    for (int n = 1; n <= 4; ++n)
        for (long long d = 1; d <= 6; ++d)
            for (const auto& gamma : partitions_of(d, n)) {
                Int dim = 0;
                for (const auto& mu : partitions_of(d, n))
                    dim += Int(kostka_number(gamma, mu)) * orbit_count(mu, n);
                CHECK(dim == weyl_dim(gamma, n));
            }
}

TEST_CASE("e-to-m coefficients, examples") {
    CHECK(elem_to_monomial_coeff(Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(elem_to_monomial_coeff(Partition{2, 1}, Partition{1, 1, 1}) == 3);
    CHECK(elem_to_monomial_coeff(Partition{1}, Partition{1}) == 1);
    CHECK(elem_to_monomial_coeff(Partition{2}, Partition{2}) == 0); // (2) not <= (1,1)
    CHECK(elem_to_monomial_coeff(Partition{}, Partition{}) == 1);
}

TEST_CASE("e-to-m agrees with the Kostka double sum") {
    for (long long d = 0; d <= 6; ++d)
        for (const auto& nu : partitions_of(d))
            for (const auto& mu : partitions_of(d)) {
                Int direct = elem_to_monomial_coeff(nu, mu);
                Int viakostka = 0;
                for (const auto& gamma : partitions_of(d))
                    viakostka += Int(kostka_number(gamma.conjugate(), nu)) *
                                 Int(kostka_number(gamma, mu));
                CHECK(direct == viakostka);
                if (mu == nu.conjugate()) CHECK(direct == 1);
                if (direct != 0 && !nu.empty()) CHECK(dominance_leq(mu, nu.conjugate()));
            }
}
