#pragma once

#include <cmath>
#include <vector>

#include "bernoulli.hpp"
#include "matrix.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// Exact tiling counts through the determinant route.
//
// The cornerstone is the Hankel-type determinant of symmetric power sums
//
//   D(a, b, N) = det_{1<=i,j<=N} ( sum_{s=-a}^{b-1} s^{i+j} ),
//
// which counts, up to the factorial normalization below, the tilings of the
// N,M,N,N,M,N hexagon that contain the horizontal rhombus at position l on
// the vertical symmetry axis (with a = l, b = N+M-l).
// ---------------------------------------------------------------------------

// boxed plane partition count: tilings of the hexagon with sides a, b, c
inline Integer macmahon(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw ParameterOutOfRange("macmahon: negative side");
    Rational acc = 1;
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j) acc *= Q(c + i + j - 1, i + j - 1);
    if (!is_integer(acc)) throw NonIntegerResult("macmahon: product is not an integer");
    return acc.get_num();
}

// D(a, b, N) with 1-based matrix indices (entry exponents i+j run 2 .. 2N)
inline Integer powersum_det(long a, long b, long N) {
    if (N < 0) throw ParameterOutOfRange("powersum_det: negative size");
    Matrix<Integer> m = Matrix<Integer>::from(N, N, [&](long i, long j) { return power_sum(a, b, i + j + 2); });
    return m.det();
}

// same determinant with 0-based indices (exponents 0 .. 2N-2); this is the
// variant whose value is independent of how the summation range is split
inline Integer powersum_det_base0(long a, long b, long N) {
    if (N < 0) throw ParameterOutOfRange("powersum_det_base0: negative size");
    Matrix<Integer> m = Matrix<Integer>::from(N, N, [&](long i, long j) { return power_sum(a, b, i + j); });
    return m.det();
}

// D(a, b, N) with the entries written through Faulhaber polynomials, which
// extends the definition to arbitrary rational a and b (reversed summation
// ranges included)
inline Rational powersum_det_poly(const Rational& a, const Rational& b, long N) {
    if (N < 0) throw ParameterOutOfRange("powersum_det_poly: negative size");
    Matrix<Rational> m =
        Matrix<Rational>::from(N, N, [&](long i, long j) { return power_sum_bernoulli_form(a, b, i + j + 2); });
    return m.det();
}

inline Integer superfactorial_sq(long k) { // prod_{i=1}^{k} (i!)^2
    Integer p = 1;
    for (long i = 1; i <= k; ++i) p *= zpow(factorial(i), 2);
    return p;
}

// Tilings of the N,M,N,N,M,N hexagon containing the axis rhombus at slot l,
// 0 <= l <= N+M-1:
//
//   count = D(l, N+M-l, N-1) / prod_{i=1}^{N-1} (i!)^2
inline Integer count_fixed_rhombus(long N, long M, long l) {
    if (N < 1 || M < 0) throw ParameterOutOfRange("count_fixed_rhombus: need N >= 1, M >= 0");
    if (l < 0 || l > N + M - 1) throw ParameterOutOfRange("count_fixed_rhombus: slot out of range");
    Integer num = powersum_det(l, N + M - l, N - 1);
    Integer den = superfactorial_sq(N - 1);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw NonIntegerResult("count_fixed_rhombus: determinant not divisible by the normalization");
    return q;
}

// probability that a uniformly random tiling contains the slot-l rhombus
inline Rational axis_probability(long N, long M, long l) {
    return Q(count_fixed_rhombus(N, M, l), macmahon(N, M, N));
}

// Tilings of the right half of the hexagon (a trapezoid of width N) with
// upward dents at positions r_1 < ... < r_N on the vertical side:
//
//   count = prod_{i<j} (r_j - r_i) / prod_{i=1}^{N-1} i!
inline Integer count_dented_trapezoid(long N, long M, std::vector<long> dents) {
    if (N < 1 || M < 0) throw ParameterOutOfRange("count_dented_trapezoid: need N >= 1, M >= 0");
    if (static_cast<long>(dents.size()) != N)
        throw ParameterOutOfRange("count_dented_trapezoid: need exactly N dents");
    std::sort(dents.begin(), dents.end());
    for (size_t i = 0; i < dents.size(); ++i) {
        if (dents[i] < 0 || dents[i] > N + M - 1) throw ParameterOutOfRange("count_dented_trapezoid: dent out of range");
        if (i && dents[i] == dents[i - 1]) throw ParameterOutOfRange("count_dented_trapezoid: duplicate dent");
    }
    Integer num = 1;
    for (size_t i = 0; i < dents.size(); ++i)
        for (size_t j = i + 1; j < dents.size(); ++j) num *= Integer(dents[j] - dents[i]);
    Integer den = 1;
    for (long i = 1; i <= N - 1; ++i) den *= factorial(i);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw NonIntegerResult("count_dented_trapezoid: product not divisible by the normalization");
    return q;
}

// Tilings of the N,M,N,N,M,N hexagon whose occupied axis slots all lie in
// the set L.  Every tiling occupies exactly N slots, so |L| >= N is required.
//
//   count = det_{0<=i,j<=N-1} ( sum_{s in L} s^{i+j} ) / prod_{i=1}^{N-1} (i!)^2
inline Integer count_axis_subset(long N, long M, std::vector<long> slots) {
    if (N < 1 || M < 0) throw ParameterOutOfRange("count_axis_subset: need N >= 1, M >= 0");
    std::sort(slots.begin(), slots.end());
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] < 0 || slots[i] > N + M - 1) throw ParameterOutOfRange("count_axis_subset: slot out of range");
        if (i && slots[i] == slots[i - 1]) throw ParameterOutOfRange("count_axis_subset: duplicate slot");
    }
    if (static_cast<long>(slots.size()) < N)
        throw SubsetTooSmall("count_axis_subset: fewer slots than the N a tiling occupies");
    Matrix<Integer> m = Matrix<Integer>::from(N, N, [&](long i, long j) {
        Integer s = 0;
        for (long v : slots) s += zpow(Integer(v), i + j);
        return s;
    });
    Integer num = m.det();
    Integer den = superfactorial_sq(N - 1);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw NonIntegerResult("count_axis_subset: determinant not divisible by the normalization");
    return q;
}

// Reflection symmetry of the polynomially extended determinant:
// substituting (-n, -n) for (n, n) multiplies the N x N determinant of
// power-sum entries by (-1)^N.
inline bool powersum_det_reflection_check(long n, long N) {
    if (N < 1) throw ParameterOutOfRange("powersum_det_reflection_check: need N >= 1");
    Rational plus = powersum_det_poly(Rational(n), Rational(n), N);
    Rational minus = powersum_det_poly(Rational(-n), Rational(-n), N);
    return minus == Rational(parity_sign(N)) * plus;
}

// limiting probability of the central axis rhombus in the hexagon with
// sides a*N, N, a*N (after N -> infinity): 2/pi * arcsin(1/(a+1))
inline double arcsine_prediction(double a) {
    if (a <= -1.0) throw ParameterOutOfRange("arcsine_prediction: need a > -1");
    return 2.0 / M_PI * std::asin(1.0 / (a + 1.0));
}

} // namespace lozenge
