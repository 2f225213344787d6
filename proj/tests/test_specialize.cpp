#include <doctest.h>

#include "test_support.hpp"

#include <stmult/errors.hpp>
#include <stmult/kostka.hpp>
#include <stmult/specialize.hpp>

using namespace stmult;
using testsupport::params_for_q;
using testsupport::schur_by_tableaux;

namespace {

LaurentPoly mono(std::initializer_list<std::pair<long long, int>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

} // namespace

TEST_CASE("specialization point families") {
    GroupParams P(3, 3, 1);
    CHECK(SpecPoints::descending(P).exponents == std::vector<long long>{-1, -3, -9});
    CHECK(SpecPoints::ascending(P).exponents == std::vector<long long>{1, 3, 9});
    CHECK(SpecPoints::descending_prefix(P, 2).exponents == std::vector<long long>{-1, -3});
}

TEST_CASE("elementary specialization examples") {
    CHECK(elementary_spec(Partition{1}, SpecPoints::descending(GroupParams(2, 3, 1))) ==
          mono({{-1, 1}, {-3, 1}}));
    CHECK(elementary_spec(Partition{2}, SpecPoints::descending(GroupParams(3, 3, 1))) ==
          mono({{-4, 1}, {-10, 1}, {-12, 1}}));
    // e_n is the single full product
    GroupParams P(3, 2, 1);
    SpecPoints pts{{2, 5, 11}};
    CHECK(elementary_spec(Partition{3}, pts) == mono({{18, 1}}));
    CHECK(elementary_spec(Partition{}, pts) == LaurentPoly::one());
    CHECK_THROWS_AS(elementary_spec(Partition{4}, pts), PreconditionError);
    CHECK(elementary_sym(4, pts).is_zero()); // the scalar helper vanishes instead
}

TEST_CASE("monomial specialization examples") {
    SpecPoints pts{{1, 2}};
    CHECK(monomial_spec(Partition{2, 1}, pts) == mono({{4, 1}, {5, 1}}));
    CHECK(monomial_spec(Partition{1, 1}, pts) == mono({{3, 1}}));
    CHECK(monomial_spec(Partition{}, pts) == LaurentPoly::one());
    CHECK_THROWS_AS(monomial_spec(Partition{1, 1, 1}, pts), PreconditionError);
}

TEST_CASE("schur specialization examples") {
    SpecPoints pts{{4, 7}};
    CHECK(schur_spec(Partition{1, 1}, pts) == elementary_spec(Partition{2}, pts));
    CHECK(schur_spec(Partition{2}, pts) == mono({{8, 1}, {11, 1}, {14, 1}}));
    // shape (2,1) at exponents (1,2,3): frozen from the tableau enumeration
    SpecPoints pts3{{1, 2, 3}};
    CHECK(schur_spec(Partition{2, 1}, pts3) ==
          mono({{4, 1}, {5, 2}, {6, 2}, {7, 2}, {8, 1}}));
    CHECK(schur_spec(Partition{2, 1}, pts3) == schur_by_tableaux(Partition{2, 1}, pts3));
}

TEST_CASE("Jacobi-Trudi agrees with tableau enumeration") {
    std::vector<SpecPoints> families;
    for (long long q : {2, 3, 5}) {
        for (int n = 1; n <= 4; ++n) {
            families.push_back(SpecPoints::descending(params_for_q(n, q)));
            families.push_back(SpecPoints::ascending(params_for_q(n, q)));
        }
    }
    families.push_back(SpecPoints{{0, 0, 0}});
    families.push_back(SpecPoints{{2, -1, 5, 2}});
    for (const auto& pts : families)
        for (long long d = 0; d <= 5; ++d)
            for (const auto& mu : partitions_of(d, pts.size()))
                CHECK(schur_spec(mu, pts) == schur_by_tableaux(mu, pts));
}

TEST_CASE("e_mu' expands into Schur polynomials with conjugate Kostka weights") {
    for (long long q : {2, 3, 4, 5})
        for (int n = 1; n <= 4; ++n) {
            GroupParams P = params_for_q(n, q);
            for (const SpecPoints& pts : {SpecPoints::descending(P), SpecPoints::ascending(P)})
                for (long long d = 1; d <= 6; ++d)
                    for (const auto& mu : partitions_of(d, n)) {
                        LaurentPoly lhs = elementary_spec(mu.conjugate(), pts);
                        LaurentPoly rhs;
                        for (const auto& gamma : partitions_of(d, n)) {
                            if (!dominance_leq(gamma, mu)) continue;
                            long long kost = kostka_number(gamma.conjugate(), mu.conjugate());
                            for (long long i = 0; i < kost; ++i) rhs += schur_spec(gamma, pts);
                        }
                        CHECK(lhs == rhs);
                    }
        }
}

TEST_CASE("schur expands into monomials with Kostka weights") {
    for (long long q : {2, 3, 5})
        for (int n = 1; n <= 4; ++n) {
            GroupParams P = params_for_q(n, q);
            for (const SpecPoints& pts : {SpecPoints::descending(P), SpecPoints::ascending(P)})
                for (long long d = 1; d <= 5; ++d)
                    for (const auto& mu : partitions_of(d, n)) {
                        LaurentPoly lhs = schur_spec(mu, pts);
                        LaurentPoly rhs;
                        for (const auto& tau : partitions_of(d, n)) {
                            long long kost = kostka_number(mu, tau);
                            for (long long i = 0; i < kost; ++i) rhs += monomial_spec(tau, pts);
                        }
                        CHECK(lhs == rhs);
                    }
        }
}

TEST_CASE("all-zero exponents recover plain counting") {
    SpecPoints zero{{0, 0, 0, 0}};
    int n = 4;
    for (long long d = 0; d <= 5; ++d)
        for (const auto& mu : partitions_of(d, n)) {
            CHECK(monomial_spec(mu, zero).coeff(0) == orbit_count(mu, n));
            Int ssyt = 0;
            for (const auto& tau : partitions_of(d, n))
                ssyt += Int(kostka_number(mu, tau)) * orbit_count(tau, n);
            CHECK(schur_spec(mu, zero).coeff(0) == ssyt);
        }
    Partition nu{3, 1, 1};
    Int expect = 1;
    for (int part : nu.parts()) expect *= binomial(n, part);
    CHECK(elementary_spec(nu, zero).coeff(0) == expect);
}
