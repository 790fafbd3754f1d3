// Tiling counts: the determinant route, cross-checked against the exhaustive
// enumerator, against the closed-form theorems, and against the near-regular
// shortcut formulas.

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace lozenge;
namespace orc = lozenge::oracle;

TEST_CASE("boxed plane partition anchors") {
    REQUIRE(macmahon(1, 1, 1) == 2);
    REQUIRE(macmahon(2, 2, 2) == 20);
    REQUIRE(macmahon(3, 3, 3) == 980);
    REQUIRE(macmahon(0, 5, 7) == 1);
    REQUIRE(macmahon(2, 3, 2) == macmahon(3, 2, 2)); // symmetric in the sides
    REQUIRE_THROWS_AS(macmahon(-1, 2, 2), ParameterOutOfRange);
}

TEST_CASE("determinant slot counts match the enumerator") {
    for (long N = 1; N <= 4; ++N)
        for (long M = 0; N + M <= 6; ++M)
            for (long l = 0; l <= N + M - 1; ++l)
                REQUIRE(count_fixed_rhombus(N, M, l) == orc::count_with_axis_rhombus(N, M, l));
}

TEST_CASE("slot parameter validation") {
    REQUIRE_THROWS_AS(count_fixed_rhombus(2, 2, 4), ParameterOutOfRange);
    REQUIRE_THROWS_AS(count_fixed_rhombus(2, 2, -1), ParameterOutOfRange);
    REQUIRE_THROWS_AS(count_fixed_rhombus(0, 2, 0), ParameterOutOfRange);
}

TEST_CASE("slot counts sum to N times the total") {
    for (long N = 1; N <= 5; ++N)
        for (long M = 0; N + M <= 8; ++M) {
            Integer acc = 0;
            for (long l = 0; l <= N + M - 1; ++l) acc += count_fixed_rhombus(N, M, l);
            REQUIRE(acc == Integer(N) * macmahon(N, M, N));
        }
}

TEST_CASE("slot counts are mirror symmetric") {
    for (auto [N, M] : std::vector<std::pair<long, long>>{{4, 4}, {5, 3}, {3, 5}, {6, 2}})
        for (long l = 0; l <= N + M - 1; ++l)
            REQUIRE(count_fixed_rhombus(N, M, l) == count_fixed_rhombus(N, M, N + M - 1 - l));
}

TEST_CASE("even-even central closed form") {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            REQUIRE(closed_count_ee_central(n, m) == count_fixed_rhombus(2 * n, 2 * m, n + m));
    REQUIRE_THROWS_AS(closed_count_ee_central(0, 1), ParameterOutOfRange);
}

TEST_CASE("even-even second-slot closed form") {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            REQUIRE(closed_count_ee_second(n, m) == count_fixed_rhombus(2 * n, 2 * m, n + m + 1));
}

TEST_CASE("odd-odd central closed form") {
    for (long n = 0; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            REQUIRE(closed_count_oo_central(n, m) == count_fixed_rhombus(2 * n + 1, 2 * m - 1, n + m));
    REQUIRE_THROWS_AS(closed_count_oo_central(-1, 1), ParameterOutOfRange);
}

TEST_CASE("odd-odd second-slot closed form") {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            REQUIRE(closed_count_oo_second(n, m) == count_fixed_rhombus(2 * n + 1, 2 * m - 1, n + m + 1));
}

TEST_CASE("mixed-parity closed forms") {
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m) {
            REQUIRE(closed_count_eo_above(n, m) == count_fixed_rhombus(2 * n, 2 * m - 1, n + m));
            REQUIRE(closed_count_oe_above(n, m) == count_fixed_rhombus(2 * n - 1, 2 * m, n + m));
        }
}

TEST_CASE("dispatch picks the right closed form") {
    REQUIRE(closed_form_for(4, 4, 4) == closed_count_ee_central(2, 2));
    REQUIRE(closed_form_for(4, 4, 3) == closed_count_ee_central(2, 2)); // mirror slot
    REQUIRE(closed_form_for(4, 4, 5) == closed_count_ee_second(2, 2));
    REQUIRE(closed_form_for(4, 4, 2) == closed_count_ee_second(2, 2)); // mirror slot
    REQUIRE(closed_form_for(5, 3, 4) == closed_count_oo_central(2, 2));
    REQUIRE(closed_form_for(5, 3, 5) == closed_count_oo_second(2, 2));
    REQUIRE(closed_form_for(4, 3, 4) == closed_count_eo_above(2, 2));
    REQUIRE(closed_form_for(3, 4, 2) == closed_count_oe_above(2, 2)); // mirror of 4
    REQUIRE(closed_form_for(1, 1, 1) == closed_count_oo_central(0, 1));
    REQUIRE_THROWS_AS(closed_form_for(4, 2, 0), UnsupportedEvaluationPoint);
    REQUIRE_THROWS_AS(closed_form_for(4, 4, 8), ParameterOutOfRange);
}

TEST_CASE("dispatch agrees with the determinant wherever it answers") {
    long supported = 0;
    for (long N = 1; N <= 6; ++N)
        for (long M = 0; N + M <= 10; ++M)
            for (long l = 0; l <= N + M - 1; ++l) {
                Integer via_closed;
                try {
                    via_closed = closed_form_for(N, M, l);
                } catch (const UnsupportedEvaluationPoint&) {
                    continue;
                }
                ++supported;
                REQUIRE(via_closed == count_fixed_rhombus(N, M, l));
            }
    REQUIRE(supported > 20); // the sweep must actually exercise the theorems
}

TEST_CASE("near-regular shortcuts match the closed forms") {
    for (long n = 1; n <= 5; ++n) {
        REQUIRE(propp_even(n) == closed_count_ee_central(n, n));
        REQUIRE(propp_even1(n) == closed_count_ee_central(n, n + 1));
        REQUIRE(propp_even2(n) == closed_count_ee_central(n + 1, n));
        REQUIRE(propp_odd1(n) == closed_count_oo_central(n, n));
        REQUIRE(propp_odd2(n) == closed_count_oo_central(n + 1, n));
    }
    for (long n = 0; n <= 5; ++n) REQUIRE(propp_odd(n) == closed_count_oo_central(n, n + 1));
}

TEST_CASE("near-regular shortcut anchors") {
    REQUIRE(propp_even(1) == 6);
    REQUIRE(propp_odd(0) == 1);
    REQUIRE(propp_even(1) == count_fixed_rhombus(2, 2, 2));
    REQUIRE(propp_odd(1) == count_fixed_rhombus(3, 3, 3));
    REQUIRE_THROWS_AS(propp_even(0), ParameterOutOfRange);
    REQUIRE_THROWS_AS(propp_odd(-1), ParameterOutOfRange);
    REQUIRE_THROWS_AS(propp_even1(0), ParameterOutOfRange);
    REQUIRE_THROWS_AS(propp_odd2(0), ParameterOutOfRange);
}

TEST_CASE("axis subset counts via the determinant match the enumerator") {
    // (2,2): every subset of size 2, 3, 4
    for (long size = 2; size <= 4; ++size) {
        std::vector<long> idx(static_cast<size_t>(size));
        for (long i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            REQUIRE(count_axis_subset(2, 2, idx) == orc::count_axis_subset(2, 2, idx));
            long k = size - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == 4 - size + k) --k;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
            for (long j = k + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    REQUIRE(count_axis_subset(2, 3, {0, 1, 3}) == orc::count_axis_subset(2, 3, {0, 1, 3}));
    REQUIRE(count_axis_subset(3, 2, {0, 2, 4}) == orc::count_axis_subset(3, 2, {0, 2, 4}));
}

TEST_CASE("axis subset semantics") {
    REQUIRE(count_axis_subset(3, 3, {0, 1, 2, 3, 4, 5}) == macmahon(3, 3, 3));
    for (long l = 0; l < 6; ++l) {
        std::vector<long> rest;
        for (long s = 0; s < 6; ++s)
            if (s != l) rest.push_back(s);
        REQUIRE(count_axis_subset(3, 3, rest) == macmahon(3, 3, 3) - count_fixed_rhombus(3, 3, l));
    }
    REQUIRE_THROWS_AS(count_axis_subset(3, 1, {0, 1}), SubsetTooSmall);
    REQUIRE_THROWS_AS(count_axis_subset(2, 2, {0, 0, 1}), ParameterOutOfRange);
    REQUIRE_THROWS_AS(count_axis_subset(2, 2, {0, 1, 9}), ParameterOutOfRange);
}

TEST_CASE("dented trapezoid product formula") {
    REQUIRE(count_dented_trapezoid(4, 3, {0, 1, 4, 5}) == 20);
    REQUIRE(count_dented_trapezoid(3, 4, {0, 1, 2}) == 1);
    // consecutive dents leave exactly one tiling
    REQUIRE(count_dented_trapezoid(3, 4, {2, 3, 4}) == 1);
    REQUIRE_THROWS_AS(count_dented_trapezoid(3, 4, {0, 1}), ParameterOutOfRange);
    REQUIRE_THROWS_AS(count_dented_trapezoid(2, 2, {1, 1}), ParameterOutOfRange);
    REQUIRE_THROWS_AS(count_dented_trapezoid(2, 2, {0, 7}), ParameterOutOfRange);
}

TEST_CASE("dented trapezoid matches the enumerator") {
    for (auto [N, M] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}}) {
        std::vector<long> idx(static_cast<size_t>(N));
        for (long i = 0; i < N; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            REQUIRE(count_dented_trapezoid(N, M, idx) == orc::count_dented(N, M, idx));
            long k = N - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == M + k) --k;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
            for (long j = k + 1; j < N; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
}

TEST_CASE("axis probability") {
    // central slots are the rarest (their probability heads to 1/3); slots
    // near the hexagon corners are close to forced
    REQUIRE(count_fixed_rhombus(2, 2, 1) == 6);
    REQUIRE(count_fixed_rhombus(2, 2, 0) == 14);
    REQUIRE(axis_probability(2, 2, 1) == Q(3, 10));
    REQUIRE(axis_probability(2, 2, 0) == Q(7, 10));
    Rational acc = 0;
    for (long l = 0; l < 4; ++l) acc += axis_probability(2, 2, l);
    REQUIRE(acc == 2); // N = 2 slots occupied on average, deterministically
}

TEST_CASE("arcsine prediction endpoints") {
    REQUIRE_THAT(arcsine_prediction(0.0), Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(arcsine_prediction(1.0), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));
    REQUIRE(arcsine_prediction(50.0) < 0.02);
    REQUIRE(arcsine_prediction(0.5) > arcsine_prediction(2.0));
}
