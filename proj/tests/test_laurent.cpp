#include <doctest.h>

#include "test_support.hpp"

#include <stmult/laurent.hpp>

#include <random>

using namespace stmult;

namespace {

LaurentSeries poly_series(std::initializer_list<std::pair<long long, int>> terms, long long trunc) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return LaurentSeries::from_poly(p, trunc);
}

LaurentSeries random_series(std::mt19937& rng, long long trunc) {
    std::uniform_int_distribution<long long> exp(-4, trunc);
    std::uniform_int_distribution<int> coeff(-5, 5), nterms(0, 6);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), coeff(rng));
    return LaurentSeries::from_poly(p, trunc);
}

} // namespace

TEST_CASE("series arithmetic examples") {
    auto a = poly_series({{0, 1}, {1, 1}}, 10); // 1 + t
    auto b = poly_series({{0, 1}, {1, -1}}, 10);
    CHECK(a * b == poly_series({{0, 1}, {2, -1}}, 10)); // 1 - t^2 (trunc combines via shifts)
    CHECK((a - a).is_zero());
    CHECK(poly_series({{-1, 1}}, 5) * poly_series({{3, 1}}, 9) ==
          poly_series({{2, 1}}, 8)); // t^-1 * t^3 = t^2, trunc = min(5+3, 9-1)
}

TEST_CASE("product truncation accounts for shifts") {
    auto a = poly_series({{2, 1}}, 4);
    auto b = poly_series({{3, 1}}, 7);
    auto prod = a * b;
    CHECK(prod.trunc() == std::min<long long>(4 + 3, 7 + 2));
    CHECK(prod.coefficient_at(5) == 1);
}

TEST_CASE("equality requires matching truncation") {
    auto a = poly_series({{1, 1}}, 5);
    auto b = poly_series({{1, 1}}, 6);
    CHECK(a != b);
    CHECK(a == poly_series({{1, 1}}, 5));
}

TEST_CASE("coefficient_at contract") {
    auto f = expand_rational(LaurentPoly::monomial(1), {1, 3}, 5);
    // coefficients count multisets from {1,3} summing to a-1
    std::vector<long long> want{0, 1, 1, 1, 2, 2};
    for (long long a = 0; a <= 5; ++a) {
        CHECK(f.coefficient_at(a) == want[static_cast<std::size_t>(a)]);
        CHECK(f.coefficient_at(a) ==
              (a == 0 ? 0 : testsupport::count_part_multisets(a - 1, {1, 3})));
    }
    CHECK(f.coefficient_at(-10) == 0); // below the shift the series is exactly 0
    CHECK_THROWS_AS(f.coefficient_at(7), std::out_of_range);
    CHECK(poly_series({{0, 1}}, 3).coefficient_at(0) == 1);
}

TEST_CASE("expand_rational edge cases") {
    CHECK(expand_rational(LaurentPoly::one(), {}, 3) == poly_series({{0, 1}}, 3));
    LaurentPoly cancel; // 1 - t^2
    cancel.add_term(0, 1);
    cancel.add_term(2, -1);
    CHECK(expand_rational(cancel, {2}, 10) == poly_series({{0, 1}}, 10));
    CHECK_THROWS_AS(expand_rational(LaurentPoly::one(), {0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand_rational(LaurentPoly::one(), {-2}, 3), std::invalid_argument);
}

TEST_CASE("expansion times denominator returns the numerator") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dpick(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly numer;
        std::uniform_int_distribution<long long> exp(-3, 8);
        std::uniform_int_distribution<int> coeff(-4, 4), nterms(0, 5), nden(0, 3);
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) numer.add_term(exp(rng), coeff(rng));
        std::vector<long long> denoms;
        int nd = nden(rng);
        for (int i = 0; i < nd; ++i) denoms.push_back(dpick(rng));
        long long trunc = 25;
        LaurentSeries f = expand_rational(numer, denoms, trunc);
        LaurentPoly denom_poly = LaurentPoly::one();
        for (long long d : denoms) {
            LaurentPoly factor = LaurentPoly::one();
            factor.add_term(d, -1);
            denom_poly *= factor;
        }
        LaurentSeries lhs = f * LaurentSeries::from_poly(denom_poly, trunc);
        LaurentSeries rhs = LaurentSeries::from_poly(numer, lhs.trunc());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nonnegative numerators expand nonnegatively") {
    LaurentPoly numer;
    numer.add_term(0, 2);
    numer.add_term(5, 3);
    auto f = expand_rational(numer, {1, 2, 7}, 40);
    for (long long a = f.shift(); a <= f.trunc(); ++a) CHECK(f.coefficient_at(a) >= 0);
}

TEST_CASE("mul is commutative and associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_series(rng, 30), b = random_series(rng, 30), c = random_series(rng, 30);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("exact polynomial quotient") {
    LaurentPoly n1; // 1 - t^4
    n1.add_term(0, 1);
    n1.add_term(4, -1);
    auto [q1, ok1] = exact_poly_quotient(n1, {2});
    CHECK(ok1);
    LaurentPoly want1;
    want1.add_term(0, 1);
    want1.add_term(2, 1);
    CHECK(q1 == want1);

    LaurentPoly n2; // 1 - t^3 not divisible by 1 - t^2
    n2.add_term(0, 1);
    n2.add_term(3, -1);
    CHECK_FALSE(exact_poly_quotient(n2, {2}).second);

    // (1-t)(1-t^2)(1+t+t^2) / ((1-t)(1-t^2)) = 1+t+t^2
    LaurentPoly prod = LaurentPoly::one(), expect;
    for (long long d : {1LL, 2LL}) {
        LaurentPoly f = LaurentPoly::one();
        f.add_term(d, -1);
        prod *= f;
    }
    expect.add_term(0, 1);
    expect.add_term(1, 1);
    expect.add_term(2, 1);
    prod *= expect;
    auto [q3, ok3] = exact_poly_quotient(prod, {1, 2});
    CHECK(ok3);
    CHECK(q3 == expect);
}

TEST_CASE("exact quotient times denominator is an identity") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> dpick(1, 5);
    std::uniform_int_distribution<int> coeff(-3, 3), nterms(1, 5), nden(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        // build numer = cofactor * prod(1 - t^d) so the division is exact
        LaurentPoly cof;
        std::uniform_int_distribution<long long> exp(-5, 10);
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) cof.add_term(exp(rng), coeff(rng));
        std::vector<long long> denoms;
        int nd = nden(rng);
        LaurentPoly denom_poly = LaurentPoly::one();
        for (int i = 0; i < nd; ++i) {
            denoms.push_back(dpick(rng));
            LaurentPoly f = LaurentPoly::one();
            f.add_term(denoms.back(), -1);
            denom_poly *= f;
        }
        LaurentPoly numer = cof * denom_poly;
        auto [quot, exact] = exact_poly_quotient(numer, denoms);
        CHECK(exact);
        CHECK(quot * denom_poly == numer);
    }
}

TEST_CASE("canonical json round trip") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_series(rng, 20);
        CHECK(laurent_from_json(f.to_json()) == f);
    }
    // coefficients beyond 64 bits survive
    Int big = 1;
    for (int i = 0; i < 9; ++i) big *= 1000000000; // 10^81
    LaurentPoly p;
    p.add_term(-2, big);
    p.add_term(1, -big - 7);
    auto f = LaurentSeries::from_poly(p, 3);
    CHECK(laurent_from_json(f.to_json()) == f);
    // unknown keys are ignored, missing keys rejected
    CHECK(laurent_from_json(R"({"shift":1,"trunc":2,"coeffs":[5,6],"theorem":"x","conjecture":false})")
              .coefficient_at(2) == 6);
    CHECK_THROWS_AS(laurent_from_json(R"({"shift":1,"coeffs":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(laurent_from_json("not json"), std::invalid_argument);
}

TEST_CASE("bi-series collect and slice round trip") {
    std::map<int, LaurentSeries> slices;
    slices.emplace(0, poly_series({{0, 1}, {3, 2}}, 9));
    slices.emplace(2, poly_series({{-1, 4}}, 9));
    BiSeries big = bi_collect(slices, 3);
    CHECK(bi_eval_s0(big) == slices.at(0));
    CHECK(bi_slice(big, 2) == slices.at(2));
    CHECK(bi_slice(big, 1).is_zero());
    CHECK(big.coefficient_at(3, 0) == 2);
    CHECK(big.coefficient_at(5, 1) == 0);
    CHECK_THROWS_AS(big.coefficient_at(10, 0), std::out_of_range);

    std::map<int, LaurentSeries> single;
    single.emplace(1, poly_series({{2, 5}}, 4));
    BiSeries one = bi_collect(single, 1);
    for (const auto& [key, c] : one.coeffs()) CHECK(key.second == 1);

    CHECK(bi_collect({}, 2).coeffs().empty());

    std::map<int, LaurentSeries> bad;
    bad.emplace(0, poly_series({{0, 1}}, 4));
    bad.emplace(1, poly_series({{0, 1}}, 5));
    CHECK_THROWS_AS(bi_collect(bad, 2), std::invalid_argument);
}
