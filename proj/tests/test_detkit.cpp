// Determinant machinery: exact determinants over Z and Q, minors, linear
// solving, Hankel forms, the power-sum determinant family and its closed
// product evaluations.

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace lozenge;
using testutil::expansion_det;
using testutil::random_int_grid;
using testutil::random_rat_grid;
using testutil::to_matrix;

TEST_CASE("determinant anchors") {
    Matrix<Integer> id = Matrix<Integer>::from(3, 3, [](long i, long j) { return Integer(i == j); });
    REQUIRE(id.det() == 1);
    // rows 0 and 1 coincide
    Matrix<Integer> rep = Matrix<Integer>::from(3, 3, [](long i, long j) { return Integer(i / 2 + j); });
    REQUIRE(rep.det() == 0);
    std::vector<std::vector<long>> d = {{6, -8, 18}, {-8, 18, -32}, {18, -32, 66}};
    Matrix<Integer> m = Matrix<Integer>::from(
        3, 3, [&](long i, long j) { return Integer(d[static_cast<size_t>(i)][static_cast<size_t>(j)]); });
    REQUIRE(m.det() == 144);
    REQUIRE(Matrix<Integer>(0, 0).det() == 1);
    REQUIRE(Matrix<Rational>(0, 0).det() == 1);
    REQUIRE_THROWS_AS(Matrix<Integer>(2, 3).det(), NotSquare);
}

TEST_CASE("integer determinant matches cofactor expansion") {
    std::mt19937 rng(471103);
    for (int trial = 0; trial < 12; ++trial) {
        long n = 1 + trial % 5;
        auto g = random_int_grid(rng, n, -9, 9);
        REQUIRE(to_matrix(g).det() == expansion_det(g));
    }
}

TEST_CASE("rational determinant matches cofactor expansion") {
    std::mt19937 rng(471104);
    for (int trial = 0; trial < 8; ++trial) {
        long n = 2 + trial % 3;
        auto g = random_rat_grid(rng, n);
        REQUIRE(to_matrix(g).det() == expansion_det(g));
    }
}

TEST_CASE("gaussian rational determinant matches cofactor expansion") {
    std::mt19937 rng(471105);
    std::uniform_int_distribution<long> v(-4, 4);
    for (int trial = 0; trial < 6; ++trial) {
        long n = 2 + trial % 2;
        std::vector<std::vector<GaussianRational>> g(static_cast<size_t>(n),
                                                     std::vector<GaussianRational>(static_cast<size_t>(n)));
        for (auto& row : g)
            for (auto& e : row) e = GaussianRational(Rational(v(rng)), Rational(v(rng)));
        REQUIRE(to_matrix(g).det() == expansion_det(g));
    }
}

TEST_CASE("determinant is alternating and multilinear") {
    std::mt19937 rng(888211);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = random_int_grid(rng, 4, -6, 6);
        Integer base = to_matrix(g).det();
        auto swapped = g;
        std::swap(swapped[0], swapped[3]);
        REQUIRE(to_matrix(swapped).det() == -base);
        auto scaled = g;
        for (auto& e : scaled[2]) e *= 7;
        REQUIRE(to_matrix(scaled).det() == Integer(7) * base);
        auto sheared = g; // row 3 += 2 * row 1 leaves the determinant alone
        for (size_t j = 0; j < 4; ++j) sheared[3][j] += Integer(2) * g[1][j];
        REQUIRE(to_matrix(sheared).det() == base);
    }
}

TEST_CASE("minor determinant conventions") {
    Matrix<Integer> m = Matrix<Integer>::from(2, 2, [](long i, long j) { return Integer(1 + 2 * i + j); });
    REQUIRE(m.minor_det({}, {}) == m.det());
    REQUIRE(m.minor_det({0}, {0}) == 4);
    REQUIRE(m.minor_det({0}, {1}) == 3);
    REQUIRE(m.minor_det({1}, {0}) == 2);
    // dropping everything from a nonempty matrix gives 0 by convention
    Matrix<Integer> one = Matrix<Integer>::from(1, 1, [](long, long) { return Integer(7); });
    REQUIRE(one.minor_det({0}, {0}) == 0);
    REQUIRE_THROWS_AS(m.minor_det({0}, {}), NotSquare);
    REQUIRE_THROWS_AS(m.minor_det({0, 0}, {0, 1}), IndexOutOfRange);
    REQUIRE_THROWS_AS(m.minor_det({2}, {0}), IndexOutOfRange);
}

TEST_CASE("linear solving") {
    Matrix<Rational> a = Matrix<Rational>::from(2, 2, [](long i, long j) { return Rational(1 + i + 2 * j); });
    // [[1,3],[2,4]] x = [5, 6] has x = (-1, 2)
    auto x = solve_linear(a, std::vector<Rational>{Rational(5), Rational(6)});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == -1);
    REQUIRE((*x)[1] == 2);
    Matrix<Rational> sing = Matrix<Rational>::from(2, 2, [](long i, long) { return Rational(i + 1); });
    REQUIRE_FALSE(solve_linear(sing, std::vector<Rational>{Rational(1), Rational(1)}).has_value());
    REQUIRE_THROWS_AS(solve_linear(a, std::vector<Rational>{Rational(1)}), NotSquare);
}

TEST_CASE("hankel determinant over a stored sequence") {
    std::vector<Rational> seq{Rational(2), Rational(1), Rational(3), Rational(5), Rational(8)};
    REQUIRE(hankel_det(seq, 0) == 1);
    REQUIRE(hankel_det(seq, 1) == 2);
    REQUIRE(hankel_det(seq, 2) == Rational(2 * 3 - 1 * 1));
    REQUIRE(hankel_det(seq, 2, 1) == Rational(1 * 5 - 3 * 3));
    REQUIRE_THROWS_AS(hankel_det(seq, 3, 1), IndexOutOfRange);
    REQUIRE_THROWS_AS(hankel_det(seq, -1), ParameterOutOfRange);
}

TEST_CASE("power-sum determinant anchors") {
    REQUIRE(powersum_det(1, 1, 1) == 1);
    REQUIRE(powersum_det(2, 2, 1) == 6);
    REQUIRE(powersum_det(2, 1, 2) == 4);
    REQUIRE(powersum_det(3, 1, 3) == 144);
    REQUIRE(powersum_det(2, 2, 3) == 144);
    REQUIRE(powersum_det(5, 3, 0) == 1);
}

TEST_CASE("power-sum determinant wiring matches a direct matrix build") {
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long N = 0; N <= 3; ++N) {
                Matrix<Integer> one = Matrix<Integer>::from(
                    N, N, [&](long i, long j) { return power_sum(a, b, i + j + 2); });
                REQUIRE(powersum_det(a, b, N) == one.det());
                Matrix<Integer> zero = Matrix<Integer>::from(
                    N, N, [&](long i, long j) { return power_sum(a, b, i + j); });
                REQUIRE(powersum_det_base0(a, b, N) == zero.det());
            }
}

TEST_CASE("polynomially extended determinant agrees at integer points") {
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
            for (long N = 1; N <= 3; ++N)
                REQUIRE(powersum_det_poly(Rational(a), Rational(b), N) == Rational(powersum_det(a, b, N)));
}

TEST_CASE("extended determinant reflection symmetry") {
    for (long n = 0; n <= 4; ++n)
        for (long N = 1; N <= 5; ++N) REQUIRE(powersum_det_reflection_check(n, N));
    REQUIRE_THROWS_AS(powersum_det_reflection_check(1, 0), ParameterOutOfRange);
}

TEST_CASE("factorial ladder on the diagonal band") {
    for (long e = 1; e <= 6; ++e) REQUIRE(powersum_det(e, e, 2 * e - 1) == superfactorial_sq(2 * e - 1));
}

TEST_CASE("factorial ladder one band below") {
    for (long e = 2; e <= 6; ++e) REQUIRE(powersum_det(e, e - 1, 2 * e - 2) == superfactorial_sq(2 * e - 2));
}

TEST_CASE("factorial ladder two bands below") {
    for (long e = 3; e <= 6; ++e) REQUIRE(powersum_det(e, e - 2, 2 * e - 3) == superfactorial_sq(2 * e - 3));
}

TEST_CASE("alternating power base case") {
    Matrix<Integer> m = Matrix<Integer>::from(2, 2, [](long i, long j) -> Integer {
        long e = (i + 1) + (j + 1);
        return zpow(Integer(-1), e) + zpow(Integer(-2), e);
    });
    REQUIRE(m.at(0, 0) == 5);
    REQUIRE(m.at(0, 1) == -9);
    REQUIRE(m.det() == 4);
}

TEST_CASE("diagonal band closed product matches the determinant") {
    for (long N = 2; N <= 4; ++N)
        for (long n = (N + 1) / 2 + 1; n <= 6; ++n)
            REQUIRE(diag_det_closed(n, N) == Rational(powersum_det(n, n, N)));
    REQUIRE_THROWS_AS(diag_det_closed(1, 2), ParameterOutOfRange);
    REQUIRE_THROWS_AS(diag_det_closed(5, 1), ParameterOutOfRange);
}

TEST_CASE("subdiagonal band closed products match the determinants") {
    for (long m = 2; m <= 3; ++m)
        for (long n = m + 2; n <= 6; ++n)
            REQUIRE(subdiag_det_closed_odd(n, m) == Rational(powersum_det(n, n - 1, 2 * m - 1)));
    for (long m = 1; m <= 3; ++m)
        for (long n = m + 2; n <= 6; ++n)
            REQUIRE(subdiag_det_closed_even(n, m) == Rational(powersum_det(n, n - 1, 2 * m)));
    REQUIRE_THROWS_AS(subdiag_det_closed_odd(6, 1), ParameterOutOfRange);
    REQUIRE_THROWS_AS(subdiag_det_closed_even(2, 1), ParameterOutOfRange);
}

TEST_CASE("subsubdiagonal band closed products match the determinants") {
    for (long m = 1; m <= 2; ++m)
        for (long n = m + 4; n <= 7; ++n) {
            REQUIRE(subsubdiag_det_closed_odd(n, m) == Rational(powersum_det(n, n - 2, 2 * m + 1)));
            REQUIRE(subsubdiag_det_closed_even(n, m) == Rational(powersum_det(n, n - 2, 2 * m)));
        }
    REQUIRE_THROWS_AS(subsubdiag_det_closed_odd(4, 1), ParameterOutOfRange);
    REQUIRE_THROWS_AS(subsubdiag_det_closed_even(6, 0), ParameterOutOfRange);
}

TEST_CASE("superfactorial squares") {
    REQUIRE(superfactorial_sq(0) == 1);
    REQUIRE(superfactorial_sq(1) == 1);
    REQUIRE(superfactorial_sq(2) == 4);
    REQUIRE(superfactorial_sq(3) == 144);
    REQUIRE(superfactorial_sq(4) == 144 * 576);
}
