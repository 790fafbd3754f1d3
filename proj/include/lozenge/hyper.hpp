#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "numeric.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// Exact terminating hypergeometric series plus the specific summation and
// transformation identities the tiling formulas rest on: Chu-Vandermonde,
// Whipple's very-well-poised 7F6 reduction, one classical 2F1 argument
// transformation, the certificate-based recurrence for the central bracket
// sums, and a floating-point arcsine suite for the asymptotic checks.
// ---------------------------------------------------------------------------

struct HypSeries {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument;
};

// sum_{k=0}^{K} prod (a_i)_k / (k! prod (b_j)_k) z^k, where K is the least
// value making some upper Pochhammer vanish.  Demands termination, and
// rejects series whose lower parameters hit zero at or before term K.
inline Rational pfq_terminating(const HypSeries& s) {
    bool terminates = false;
    long K = 0;
    for (const Rational& a : s.upper)
        if (is_integer(a) && a <= 0) {
            long k = to_long(-a);
            if (!terminates || k < K) K = k;
            terminates = true;
        }
    if (!terminates) throw NotTerminating();
    for (const Rational& b : s.lower)
        if (is_integer(b) && b <= 0 && -b <= Rational(K - 1))
            throw ZeroDenominatorBeforeTermination();
    Rational total(0), term(1);
    for (long k = 0; k <= K; ++k) {
        total += term;
        if (k == K) break;
        Rational num(1), den(Rational(k + 1));
        for (const Rational& a : s.upper) num *= a + Rational(k);
        for (const Rational& b : s.lower) den *= b + Rational(k);
        term *= s.argument * num / den;
    }
    return total;
}

inline Rational pfq_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                                const Rational& z) {
    return pfq_terminating(HypSeries{upper, lower, z});
}

// 2F1[a, -N; c; 1] = (c-a)_N / (c)_N
inline bool chu_vandermonde_check(const Rational& a, const Rational& c, long N) {
    if (N < 0) throw ParameterOutOfRange("chu_vandermonde_check: need N >= 0");
    Rational lhs = pfq_terminating({a, Rational(-N)}, {c}, Rational(1));
    Rational rhs = rdiv(poch(c - a, N), poch(c, N));
    return lhs == rhs;
}

// Parameter admissibility for the 7F6-to-4F3 reduction below.  The identity
// is asserted for series terminated by -N; a lower parameter equal to a
// nonpositive integer above -N is a genuine pole there (even when a vanishing
// upper truncates the sum first and masks it as 0/0), so such draws are
// outside the identity's regime.  Early-terminating uppers by themselves are
// harmless: they only annihilate trailing terms.
inline bool whipple_admissible(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d, const Rational& e, long N) {
    if (N < 0) return false;
    std::vector<Rational> lows{a / 2,
                               Rational(1) + a - b,
                               Rational(1) + a - c,
                               Rational(1) + a - d,
                               Rational(1) + a - e,
                               Rational(1) + a + Rational(N),
                               d + e - a - Rational(N)};
    for (const Rational& v : lows)
        if (is_integer(v) && v <= 0 && -v <= Rational(N - 1)) return false;
    return true;
}

// very-well-poised 7F6[a, 1+a/2, b, c, d, e, -N; a/2, 1+a-b, 1+a-c, 1+a-d,
// 1+a-e, 1+a+N; 1] against its balanced 4F3 reduction
inline bool whipple_check(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& e, long N) {
    if (N < 0) throw ParameterOutOfRange("whipple_check: need N >= 0");
    Rational one(1), mN(-N);
    Rational half_a = a / 2;
    Rational lhs = pfq_terminating(
        {a, one + half_a, b, c, d, e, mN},
        {half_a, one + a - b, one + a - c, one + a - d, one + a - e, one + a + Rational(N)}, one);
    Rational pref = rdiv(poch(a + 1, N) * poch(a - d - e + 1, N), poch(a - d + 1, N) * poch(a - e + 1, N));
    Rational rhs = pref * pfq_terminating({one + a - b - c, d, e, mN},
                                          {one + a - b, one + a - c, d + e - a - Rational(N)}, one);
    return lhs == rhs;
}

// 2F1[a, -N; c; z] = z^N (c-a)_N/(c)_N 2F1[-N, 1-c-N; 1+a-c-N; (z-1)/z]
inline bool transform_checks(const Rational& a, const Rational& c, long N, const Rational& z) {
    if (N < 0) throw ParameterOutOfRange("transform_checks: need N >= 0");
    if (z == 0) throw ParameterOutOfRange("transform_checks: need z != 0");
    Rational lhs = pfq_terminating({a, Rational(-N)}, {c}, z);
    Rational pref = rpow(z, N) * rdiv(poch(c - a, N), poch(c, N));
    Rational rhs = pref * pfq_terminating({Rational(-N), Rational(1) - c - Rational(N)},
                                          {Rational(1) + a - c - Rational(N)}, rdiv(z - 1, z));
    return lhs == rhs;
}

namespace detail {

// summand of the central bracket sum for the hexagon family with side
// offset m - n = off: five Pochhammer factors over five
inline Rational bracket_summand(long n, long off, long h) {
    long m = n + off;
    Rational num = poch(Rational(2), h) * poch(Q(3, 2) + Rational(n), h) * poch(Rational(1 - n), h) *
                   poch(Rational(1 + n + m), h) * poch(Rational(1 - n - m), h);
    Rational den = poch(Rational(1), h) * poch(Q(3, 2) - Rational(n), h) * poch(Rational(2 + n), h) *
                   poch(Rational(2 + n + m), h) * poch(Rational(2 - n - m), h);
    return rdiv(num, den);
}

inline Rational bracket_sum(long n, long off) {
    Rational s(0);
    for (long h = 0; h < n; ++h) s += bracket_summand(n, off, h);
    return s;
}

inline Rational bracket_sum_rhs(long n, long off) {
    Rational c3{zpow(binom(2 * n, n), 3)};
    if (off == 0)
        return Q((n + 1) * (2 * n - 1) * (2 * n - 1), 2 * n * n) *
               (Q(1, 6) + Q(1, 3) * Rational(binom(6 * n, 3 * n)) / c3);
    if (off == 1)
        return Q((n + 1) * (n + 1) * (2 * n - 1), (2 * n + 1) * (2 * n + 1)) *
               (Q(-2, 3) + Q(1, 3) * Rational(binom(6 * n + 2, 3 * n + 1)) / c3);
    Rational c3m{zpow(binom(2 * n - 2, n - 1), 3)};
    return Q(2 * n * (n + 1), 2 * n + 1) *
           (Rational(1) + Q(n, 12 * (2 * n - 1)) * Rational(binom(6 * n - 2, 3 * n - 1)) / c3m);
}

// certificate polynomial of the two-term recurrence for the equal-sides sum
inline Integer wz_poly(long h, long n) {
    Integer hh(h), nn(n);
    return 144 * nn * nn * nn * nn * nn - 432 * hh * hh * nn * nn * nn * nn - 432 * hh * nn * nn * nn * nn +
           312 * nn * nn * nn * nn - 936 * hh * hh * nn * nn * nn - 936 * hh * nn * nn * nn +
           236 * nn * nn * nn + 108 * hh * hh * hh * hh * nn * nn + 216 * hh * hh * hh * nn * nn -
           588 * hh * hh * nn * nn - 696 * hh * nn * nn + 70 * nn * nn + 117 * hh * hh * hh * hh * nn +
           234 * hh * hh * hh * nn - 83 * hh * hh * nn - 200 * hh * nn + 6 * nn + 24 * hh * hh * hh * hh +
           48 * hh * hh * hh + 6 * hh * hh - 18 * hh;
}

inline Rational wz_certificate(long n, long i) {
    Rational pref = rdiv(Rational(n * (n + 2) * (2 * n - 2 * i - 1) * (2 * n - i - 1)),
                         Rational((i + 1) * (i - n) * (2 * n - i) * (2 * n - i + 1) * (2 * n + i + 2)));
    return pref * Rational(wz_poly(i, n)) * bracket_summand(n, 0, i);
}

} // namespace detail

// the three closed evaluations of the central bracket sums; the off = -1
// variant needs n >= 2 (its hexagon has a side 2n-2)
inline bool verify_bracket_sum(long off, long n) {
    if (off != 0 && off != 1 && off != -1) throw ParameterOutOfRange("verify_bracket_sum: offset must be 0 or +-1");
    if (n < 1 || (off == -1 && n < 2)) throw ParameterOutOfRange("verify_bracket_sum: n out of range");
    return detail::bracket_sum(n, off) == detail::bracket_sum_rhs(n, off);
}

// Checks the two-term contiguous relation between consecutive equal-sides
// bracket sums three ways: pointwise through the rational certificate,
// summed with exact partial sums, and by regenerating the closed form from
// the n = 1 initial value.
inline bool wz_certificate_check(long n_max) {
    if (n_max < 1) throw ParameterOutOfRange("wz_certificate_check: need n_max >= 1");
    auto lhs_coef = [](long n) -> Rational {
        return Rational(6 * n * n * (n + 2)) * Rational((6 * n + 1) * (6 * n + 5));
    };
    auto rhs_coef = [](long n) -> Rational {
        return Rational(6 * (n + 1) * (2 * n - 1) * (2 * n - 1)) * Rational((3 * n + 1) * (3 * n + 2));
    };
    auto step_const = [](long n) {
        return rdiv(Rational((n + 2) * (2 * n - 1) * (2 * n - 1)) *
                        Rational(36 * n * n * n + 60 * n * n + 29 * n + 3),
                    Rational(2 * (n + 1)));
    };
    for (long n = 1; n < n_max; ++n) {
        for (long i = 0; i + 1 < n; ++i) {
            Rational lhs = lhs_coef(n) * detail::bracket_summand(n, 0, i) -
                           rhs_coef(n) * detail::bracket_summand(n + 1, 0, i);
            if (lhs != detail::wz_certificate(n, i + 1) - detail::wz_certificate(n, i)) return false;
        }
        Rational summed = lhs_coef(n) * detail::bracket_sum(n, 0) - rhs_coef(n) * detail::bracket_sum(n + 1, 0);
        if (summed != step_const(n)) return false;
    }
    Rational s(1);
    for (long n = 1; n <= n_max; ++n) {
        if (s != detail::bracket_sum_rhs(n, 0)) return false;
        s = rdiv(lhs_coef(n) * s - step_const(n), rhs_coef(n));
    }
    return true;
}

namespace detail {

// floating-point partial sums for the nonterminating checks
inline double pfq_double(const std::vector<double>& upper, const std::vector<double>& lower, double z) {
    double total = 0.0, term = 1.0;
    for (long k = 0; k < 4000; ++k) {
        total += term;
        double num = z, den = k + 1.0;
        for (double a : upper) num *= a + k;
        for (double b : lower) den *= b + k;
        term *= num / den;
        if (std::abs(term) < 1e-17 * (std::abs(total) + 1.0)) {
            total += term;
            break;
        }
    }
    return total;
}

} // namespace detail

// Floating-point check of 2F1[1,1;3/2;z] = arcsin(sqrt z)/sqrt(z(1-z)) and
// the two contiguous companions used alongside it.  The one non-exact check
// in the library; everything is compared within 1e-9.
inline bool arcsin_identity_check(double z) {
    if (!(z > 0.0 && z < 1.0)) throw ParameterOutOfRange("arcsin_identity_check: need 0 < z < 1");
    const double tol = 1e-9;
    double r = std::sqrt(z);
    double base = std::asin(r) / std::sqrt(z * (1.0 - z));
    if (std::abs(detail::pfq_double({1, 1}, {1.5}, z) - base) > tol) return false;
    double f52 = detail::pfq_double({1, 2}, {2.5}, z);
    if (std::abs(f52 - 1.5 / z * (base - 1.0)) > tol) return false;
    double f12 = 1.0 / (1.0 - z) + r * std::asin(r) / std::pow(1.0 - z, 1.5);
    if (std::abs(detail::pfq_double({1, 1}, {0.5}, z) - f12) > tol) return false;
    double f32 = detail::pfq_double({1, 2}, {1.5}, z);
    return std::abs(f32 - 0.5 / z * (f12 - 1.0)) <= tol;
}

// The terminating 4F3[1,1,3/2+n,1-n; 2-n-m,2+n+m,3/2; 1] from the asymptotic
// analysis of the central-slot proportion, in double precision.  Last term is
// k = n-1; the ratio is never stepped past it (at m=1 it would divide by 0).
inline double asymptotic_f43(long n, long m) {
    if (n < 1 || m < 1) throw ParameterOutOfRange("asymptotic_f43: need n, m >= 1");
    double sum = 0.0, term = 1.0;
    for (long k = 0; k < n; ++k) {
        sum += term;
        if (k + 1 == n) break;
        double num = (1.0 + k) * (1.0 + k) * (1.5 + n + k) * (1.0 - n + k);
        double den = (2.0 - n - m + k) * (2.0 + n + m + k) * (1.5 + k) * (k + 1.0);
        term *= num / den;
    }
    return sum;
}

// Convergence of asymptotic_f43(n, n) toward 2F1[1,1;3/2;1/4]: the deviation
// decays like 1/n (about 1.0e-2 at n=10), so monotone decrease is required
// along a doubling schedule and the 1e-3 tolerance is read at n=160.
inline bool asymptotic_chain_check() {
    double lim = 2.0 * std::acos(-1.0) / (3.0 * std::sqrt(3.0));
    double prev = 1e300;
    for (long n = 10; n <= 160; n *= 2) {
        double dev = std::abs(asymptotic_f43(n, n) - lim);
        if (dev >= prev) return false;
        prev = dev;
    }
    return prev < 1e-3;
}

} // namespace lozenge
