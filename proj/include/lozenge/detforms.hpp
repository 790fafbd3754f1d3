#pragma once

#include <vector>

#include "numeric.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// Closed-form evaluations of the power-sum determinant D(a, b, N) along the
// bands a - b = 0, 1, 2.  Each evaluation is a hypergeometric-style product
// times a bracket with one balanced terminating sum; all arithmetic is exact.
// The formulas hold at the parameter ranges the callers use (away from the
// removable singularities, which belong to the tiling formulas proper).
// ---------------------------------------------------------------------------

namespace detail {

// sum_{h=0}^{hmax} prod_i (u_i)_h / prod_j (l_j)_h
inline Rational poch_ratio_sum(const std::vector<Rational>& uppers, const std::vector<Rational>& lowers, long hmax) {
    Rational total = 0;
    Rational term = 1;
    for (long h = 0; h <= hmax; ++h) {
        total += term;
        if (h == hmax) break; // never step the ratio past the last term
        Rational num = 1, den = 1;
        for (const Rational& u : uppers) num *= u + Rational(h);
        for (const Rational& l : lowers) den *= l + Rational(h);
        term = term * rdiv(num, den); // throws if a lower parameter hits zero mid-sum
    }
    return total;
}

} // namespace detail

// D(n, n, N), the symmetric-range determinant, N >= 2 and n >= ceil(N/2)+1
inline Rational diag_det_closed(long n, long N) {
    if (N < 2) throw ParameterOutOfRange("diag_det_closed: need N >= 2");
    long f2 = N / 2, c2 = (N + 1) / 2;
    if (n < c2 + 1) throw ParameterOutOfRange("diag_det_closed: need n >= ceil(N/2)+1");
    Rational nn(n);
    Rational value = rpow(nn, N);
    for (long i = 1; i <= f2; ++i) {
        Rational a = nn * nn - Rational(i * i);
        Rational b = nn * nn - rpow(Q(2 * i - 1, 2), 2);
        value *= rpow(a * b, N - 2 * i + 1);
    }
    Rational pre = rpow(Rational(2), N * N) * Rational(factorial(N)) * Rational(factorial(N + 1)) * poch(Rational(n - c2), 2 * c2 + 1);
    for (long i = 1; i <= N; ++i) pre *= rpow(Rational(factorial(i)), 4);
    Rational den = nn * rpow(Rational(factorial(f2)), 2) * rpow(Rational(factorial(c2)), 2);
    for (long i = 1; i <= 2 * N + 1; ++i) den *= Rational(factorial(i));
    value *= rdiv(pre, den);

    Rational sum = detail::poch_ratio_sum(
        {Rational(2), Rational(1 - c2), Q(3 + 2 * c2, 2), Rational(1 - n), Rational(1 + n)},
        {Rational(1), Rational(2 + c2), Q(3 - 2 * c2, 2), Rational(2 + n), Rational(2 - n)}, c2 - 1);
    Rational coef = rdiv(Rational(4) * Rational(N + 2) * nn * nn * Rational(f2) * Rational(c2),
                         Rational(N - 1) * Rational(N) * (nn * nn - 1) * Rational(f2 + 1) * Rational(c2 + 1));
    return value * (Rational(parity_sign(N)) + coef * sum);
}

// D(n, n-1, 2m-1), m >= 2 and n >= m+2
inline Rational subdiag_det_closed_odd(long n, long m) {
    if (m < 2) throw ParameterOutOfRange("subdiag_det_closed_odd: need m >= 2");
    if (n < m + 2) throw ParameterOutOfRange("subdiag_det_closed_odd: need n >= m+2");
    Rational value = rpow(Rational(2), -4 * m + 5);
    value = rdiv(value, poch(Q(2 * (n - m) + 1, 2), 2 * m - 1));
    for (long i = 1; i <= 4 * m - 1; ++i) value = rdiv(value, Rational(factorial(i)));
    value *= Rational(2 * m + 1) * Rational((2 * n - 1) * (2 * n - 1));
    value *= Rational(binom(2 * m, m)) * Rational(binom(2 * m - 4, m - 2));
    value *= poch(Rational(n - m), m - 2) * poch(Rational(n + 2), m - 2);
    for (long i = 1; i <= 2 * m - 1; ++i) value *= rpow(Rational(factorial(i)), 4);
    for (long i = 1; i <= 2 * m - 2; ++i) value *= poch(Rational(2 * n - i - 2), 2 * i + 3);

    Rational first = rdiv(Rational(m) * Rational(2 * m - 3) * Rational(2 * m - 1) * Rational(n - 2) * Rational(n + 1) *
                              Rational(Integer(n) * Integer(n) - n + 2 * m + 1),
                          Rational(m - 1) * Rational(2 * m + 1));
    Rational sum = detail::poch_ratio_sum(
        {Rational(3), Q(5, 2), Rational(2 - m), Q(3 + 2 * m, 2), Rational(2 - n), Rational(1 + n)},
        {Rational(1), Q(3, 2), Rational(2 + m), Q(5 - 2 * m, 2), Rational(2 + n), Rational(3 - n)}, m - 2);
    Rational second = rdiv(Rational(6) * Rational(n - 1) * Rational(n), Rational(m + 1)) * sum;
    return value * (first + second);
}

// D(n, n-1, 2m), m >= 1 and n >= m+2
inline Rational subdiag_det_closed_even(long n, long m) {
    if (m < 1) throw ParameterOutOfRange("subdiag_det_closed_even: need m >= 1");
    if (n < m + 2) throw ParameterOutOfRange("subdiag_det_closed_even: need n >= m+2");
    Rational value(4);
    for (long i = 1; i <= 4 * m + 1; ++i) value = rdiv(value, Rational(factorial(i)));
    value *= Rational(2 * m + 3) * Rational((2 * n - 1) * (2 * n - 1));
    value *= Rational(binom(2 * m - 2, m - 1)) * Rational(binom(2 * m + 2, m + 1));
    value *= poch_ext(Rational(n - m), m - 2) * poch_ext(Rational(n + 2), m - 2);
    value *= poch(Rational(n - m - 1), 2 * m + 2);
    for (long i = 1; i <= 2 * m; ++i) value *= rpow(Rational(factorial(i)), 4);
    for (long i = 1; i <= 2 * m - 2; ++i) value *= poch(Rational(2 * n - i - 2), 2 * i + 3);

    Rational first = rdiv(Rational(2 * m - 1) * Rational(m + 1) * Rational(2 * m + 1) * Rational(n - 2) *
                              Rational(n + 1) * Rational(Integer(n) * Integer(n) - n - 2 * m),
                          Rational(m) * Rational(2 * m + 3));
    Rational sum = detail::poch_ratio_sum(
        {Rational(3), Q(5, 2), Rational(1 - m), Q(5 + 2 * m, 2), Rational(2 - n), Rational(1 + n)},
        {Rational(1), Q(3, 2), Rational(3 + m), Q(3 - 2 * m, 2), Rational(2 + n), Rational(3 - n)}, m - 1);
    Rational second = rdiv(Rational(6) * Rational(n - 1) * Rational(n), Rational(m + 2)) * sum;
    return value * (first + second);
}

// D(n, n-2, 2m+1), m >= 1 and n >= m+4
inline Rational subsubdiag_det_closed_odd(long n, long m) {
    if (m < 1) throw ParameterOutOfRange("subsubdiag_det_closed_odd: need m >= 1");
    if (n < m + 4) throw ParameterOutOfRange("subsubdiag_det_closed_odd: need n >= m+4");
    Rational value = Rational(factorial(2 * m - 2)) * Rational(factorial(2 * m + 2));
    value *= poch(Rational(n - m - 1), 2 * m + 1) * poch(Rational(n - m - 2), 2 * m + 3);
    Rational den = Rational(factorial(m - 1)) * Rational(factorial(m)) * Rational(factorial(m + 1)) *
                   Rational(factorial(m + 4)) * Rational(factorial(4 * m + 3)) * Rational(n) * Rational(n - 2);
    value = rdiv(value, den);
    for (long i = 0; i <= 2 * m; ++i) {
        value *= rpow(Rational(factorial(i + 1)), 3) * poch(Rational(2 * n - i - 2), 2 * i + 1);
        value = rdiv(value, Rational(factorial(2 * m + i + 2)));
    }

    // the degree-4-in-n polynomial in the bracket numerator
    auto xpoly = [](long m_, long n_) -> Integer {
        Integer M = m_, Nn = n_;
        return Integer(-72) * M - 204 * M * M - 212 * M * M * M - 96 * zpow(M, 4) - 16 * zpow(M, 5) - 30 * Nn -
               86 * M * Nn - 68 * M * M * Nn - 16 * M * M * M * Nn - 29 * Nn * Nn + 3 * M * Nn * Nn +
               26 * M * M * Nn * Nn + 8 * M * M * M * Nn * Nn + 44 * zpow(Nn, 3) + 40 * M * zpow(Nn, 3) +
               8 * M * M * zpow(Nn, 3) - 11 * zpow(Nn, 4) - 10 * M * zpow(Nn, 4) - 2 * M * M * zpow(Nn, 4);
    };
    Rational first = rdiv(Rational(2) * Rational(m + 3) * Rational(m + 4) * Rational(2 * m - 1) * Rational(2 * m + 1) *
                              Rational(xpoly(m, n)),
                          Rational(n - 2) * Rational(Integer(n - 1) * Integer(n - 1)) * Rational(n));
    Rational sum = detail::poch_ratio_sum(
        {Rational(4), Rational(-m), Q(7 + 2 * m, 2), Rational(3 - n), Rational(1 + n)},
        {Rational(1), Rational(5 + m), Q(3 - 2 * m, 2), Rational(2 + n), Rational(4 - n)}, m);
    Rational second = rdiv(Rational(24) * Rational(2 * m + 3) * Rational(2 * m + 5) * Rational(n - m - 3) *
                               Rational(n + m + 1),
                           Rational(n - 3) * Rational(n + 1)) *
                      sum;
    return value * (first - second);
}

// D(n, n-2, 2m), m >= 1 (m != 1 would hit 2m-3 = -1, which is fine) and n >= m+4
inline Rational subsubdiag_det_closed_even(long n, long m) {
    if (m < 1) throw ParameterOutOfRange("subsubdiag_det_closed_even: need m >= 1");
    if (n < m + 4) throw ParameterOutOfRange("subsubdiag_det_closed_even: need n >= m+4");
    Rational value = Rational(factorial(2 * m - 2)) * Rational(factorial(2 * m + 2));
    value *= rpow(poch(Rational(n - m - 1), 2 * m + 1), 2);
    Rational den = Rational(2 * m - 3) * Rational(factorial(m - 1)) * Rational(factorial(m)) *
                   Rational(factorial(m + 1)) * Rational(factorial(m + 3)) * Rational(factorial(4 * m + 1)) *
                   Rational(n) * Rational(n - 2);
    value = rdiv(value, den);
    for (long i = 0; i <= 2 * m - 1; ++i) {
        value *= rpow(Rational(factorial(i + 1)), 3) * poch(Rational(2 * n - i - 2), 2 * i + 1);
        value = rdiv(value, Rational(factorial(2 * m + i + 1)));
    }

    auto ypoly = [](long m_, long n_) -> Integer {
        Integer M = m_, Nn = n_;
        return Integer(12) * M * M + 44 * M * M * M + 48 * zpow(M, 4) + 16 * zpow(M, 5) + 16 * M * Nn +
               28 * M * M * Nn + 16 * M * M * M * Nn + 4 * Nn * Nn - 20 * M * Nn * Nn - 22 * M * M * Nn * Nn -
               8 * M * M * M * Nn * Nn - 4 * zpow(Nn, 3) + 12 * M * zpow(Nn, 3) + 8 * M * M * zpow(Nn, 3) +
               zpow(Nn, 4) - 3 * M * zpow(Nn, 4) - 2 * M * M * zpow(Nn, 4);
    };
    Rational first = rdiv(Rational(m + 2) * Rational(m + 3) * Rational(2 * m - 3) * Rational(2 * m - 1) *
                              Rational(ypoly(m, n)),
                          Rational(n - 2) * Rational(Integer(n - 1) * Integer(n - 1)) * Rational(n));
    Rational sum = detail::poch_ratio_sum(
        {Rational(4), Rational(1 - m), Q(5 + 2 * m, 2), Rational(3 - n), Rational(1 + n)},
        {Rational(1), Rational(4 + m), Q(5 - 2 * m, 2), Rational(2 + n), Rational(4 - n)}, m - 1);
    Rational second = rdiv(Rational(24) * Rational(m) * Rational(2 * m + 3) * Rational(n - m - 2) * Rational(n + m),
                           Rational(n - 3) * Rational(n + 1)) *
                      sum;
    return value * (first - second);
}

} // namespace lozenge
