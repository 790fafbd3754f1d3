#pragma once

#include <mutex>
#include <vector>

#include "polynomial.hpp"

namespace lozenge {

// Bernoulli numbers with B_1 = -1/2, by the defining recurrence
//   sum_{k=0}^{m} C(m+1, k) B_k = 0   (m >= 1)
// Memoized; safe for concurrent callers.
inline Rational bernoulli(long m) {
    if (m < 0) throw ParameterOutOfRange("bernoulli: negative index");
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(cache.size()) <= m) {
        long n = static_cast<long>(cache.size());
        Rational acc = 0;
        for (long k = 0; k < n; ++k) acc += Rational(binom(n + 1, k)) * cache[static_cast<size_t>(k)];
        cache.push_back(rdiv(-acc, Rational(n + 1)));
    }
    return cache[static_cast<size_t>(m)];
}

// Bernoulli polynomial B_l(x) = sum_k C(l, k) B_{l-k} x^k
inline PolyQ bernoulli_poly(long l) {
    if (l < 0) throw ParameterOutOfRange("bernoulli_poly: negative degree");
    std::vector<Rational> c(static_cast<size_t>(l) + 1);
    for (long k = 0; k <= l; ++k) c[static_cast<size_t>(k)] = Rational(binom(l, k)) * bernoulli(l - k);
    return PolyQ(std::move(c));
}

inline Rational bernoulli_poly(long l, const Rational& x) { return bernoulli_poly(l).eval(x); }

// Faulhaber polynomial F(x, m) = (B_{m+1}(x) - B_{m+1}) / (m+1), the unique
// polynomial with F(x+1) - F(x) = x^m and F(0) = 0.
inline Rational faulhaber(const Rational& x, long m) {
    if (m < 0) throw ParameterOutOfRange("faulhaber: negative power");
    return rdiv(bernoulli_poly(m + 1, x) - bernoulli(m + 1), Rational(m + 1));
}

// sum_{s=-a}^{b-1} s^m by direct summation (0^0 counts as 1); empty ranges
// give 0.
inline Integer power_sum(long a, long b, long m) {
    if (m < 0) throw ParameterOutOfRange("power_sum: negative power");
    Integer acc = 0;
    for (long s = -a; s <= b - 1; ++s) {
        if (s == 0) {
            if (m == 0) acc += 1;
            continue;
        }
        acc += zpow(Integer(s), m);
    }
    return acc;
}

// The same power sum written through Faulhaber polynomials,
//   sum_{s=-a}^{b-1} s^m = F(b, m) - F(-a, m),
// which stays meaningful when a and b are arbitrary rationals.  For integer
// parameters it agrees with power_sum termwise, including reversed ranges
// (where it picks up the orientation sign the polynomial identity dictates).
inline Rational power_sum_bernoulli_form(const Rational& a, const Rational& b, long m) {
    return faulhaber(b, m) - faulhaber(-a, m);
}

// Umbral Bernoulli evaluation: in a Laurent polynomial in the symbol B,
// replace B^k by the Bernoulli number B_k.  All negative powers must have
// cancelled by this point; a surviving one means the expression was used
// outside its algebraic domain.
inline Rational umbral(const LaurentPolynomial& p) {
    Rational acc = 0;
    for (auto& [k, c] : p.terms()) {
        if (k < 0) throw NegativeExponent("umbral: surviving B^" + std::to_string(k));
        acc += c * bernoulli(k);
    }
    return acc;
}

} // namespace lozenge
