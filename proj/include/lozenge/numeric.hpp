#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace lozenge {

// Exact scalars.  Integer is arbitrary precision; Rational is always kept in
// canonical lowest terms with a positive denominator.
using Integer  = mpz_class;
using Rational = mpq_class;

// Canonicalizing constructor.  mpq_class(num, den) does NOT reduce, so every
// fraction the library builds goes through here.
inline Rational Q(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator("Q: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational Q(long num, long den) { return Q(Integer(num), Integer(den)); }

// Checked division.  A raw mpq division by zero raises SIGFPE, so any spot
// where the divisor can vanish must come through rdiv.
inline Rational rdiv(const Rational& a, const Rational& b) {
    if (b == 0) throw ZeroDenominator("rdiv: division by zero");
    return a / b;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw NonIntegerResult("to_long: " + r.get_str() + " is not an integer");
    if (!r.get_num().fits_slong_p()) throw ParameterOutOfRange("to_long: value does not fit a long");
    return r.get_num().get_si();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParameterOutOfRange("parse_rational: bad literal '" + s + "'");
    if (r.get_den() == 0) throw ZeroDenominator("parse_rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    if (n < 0) throw ParameterOutOfRange("factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Generalized integer binomial: works for any integer top (negative included
// via the reflection (-1)^k C(k-n-1, k)); k < 0 gives 0.
inline Integer binom(const Integer& n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        Integer b;
        mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
        return b;
    }
    Integer top = Integer(k) - n - 1;
    Integer b;
    mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? b : Integer(-b);
}

inline Integer binom(long n, long k) { return binom(Integer(n), k); }

// Rising factorial (a)_k = a (a+1) ... (a+k-1), k >= 0.
inline Rational poch(const Rational& a, long k) {
    if (k < 0) throw ParameterOutOfRange("poch: negative length");
    Rational p = 1;
    Rational t = a;
    for (long i = 0; i < k; ++i, t += 1) p *= t;
    return p;
}

// Pochhammer extended to negative lengths by (a)_{-k} = 1/( (a-k)_k ), the
// reciprocal convention the determinant evaluations rely on near their edge
// parameters.
inline Rational poch_ext(const Rational& a, long k) {
    if (k >= 0) return poch(a, k);
    Rational d = poch(a + Rational(k), -k);
    return rdiv(Rational(1), d);
}

inline Integer poch_z(const Integer& a, long k) {
    if (k < 0) throw ParameterOutOfRange("poch_z: negative length");
    Integer p = 1;
    Integer t = a;
    for (long i = 0; i < k; ++i, t += 1) p *= t;
    return p;
}

// r^e with integer exponent; negative exponents need a nonzero base.
inline Rational rpow(const Rational& r, long e) {
    if (e == 0) return 1;
    Rational base = r;
    long n = e;
    if (e < 0) {
        if (r == 0) throw ZeroDenominator("rpow: zero base with negative exponent");
        base = rdiv(Rational(1), r);
        n = -e;
    }
    Rational acc = 1;
    Rational sq = base;
    while (n > 0) {
        if (n & 1) acc *= sq;
        if (n >>= 1) sq *= sq;
    }
    return acc;
}

inline Integer zpow(const Integer& z, long e) {
    if (e < 0) throw ParameterOutOfRange("zpow: negative exponent");
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(e));
    return p;
}

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// ---------------------------------------------------------------------------
// Gaussian rationals: exact arithmetic over Q(i)
// ---------------------------------------------------------------------------

struct GaussianRational {
    Rational re = 0;
    Rational im = 0;

    GaussianRational() = default;
    GaussianRational(const Rational& r) : re(r) {}          // implicit from Q on purpose
    GaussianRational(long r) : re(r) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) throw ZeroDenominator("GaussianRational: division by zero");
        GaussianRational t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& g) {
    std::string s = g.re.get_str();
    s += (g.im >= 0) ? "+" : "";
    s += g.im.get_str();
    s += "*i";
    return s;
}

} // namespace lozenge
