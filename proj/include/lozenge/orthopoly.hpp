#pragma once

#include <functional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// Formal orthogonal polynomials from a moment functional, the J-fraction
// attached to the moment generating function, the product formula it yields
// for Hankel determinants, and the Wronskian-to-Hankel determinant identity
// for the derivative array of the non-normalized polynomials.
//
// Everything runs over GaussianRational: some moment sequences of interest
// are genuinely complex, and real ones embed.
// ---------------------------------------------------------------------------

using MomentSequence = std::function<GaussianRational(long)>;

inline MomentSequence moments_from(std::vector<GaussianRational> values) {
    return [values = std::move(values)](long k) -> GaussianRational {
        if (k < 0 || k >= static_cast<long>(values.size()))
            throw IndexOutOfRange("moment sequence: index " + std::to_string(k) + " outside stored range");
        return values[static_cast<size_t>(k)];
    };
}

inline MomentSequence moments_from(const std::vector<Rational>& values) {
    return moments_from(std::vector<GaussianRational>(values.begin(), values.end()));
}

namespace detail {

inline GaussianRational qi_pow(const GaussianRational& g, long e) {
    if (e < 0) throw ParameterOutOfRange("qi_pow: negative exponent");
    GaussianRational r(1);
    for (long t = 0; t < e; ++t) r = r * g;
    return r;
}

// leading principal Hankel determinant d_s = det_{0<=i,j<s}(mu_{i+j})
inline GaussianRational moment_hankel(const MomentSequence& mu, long s) {
    return Matrix<GaussianRational>::from(s, s, [&](long i, long j) { return mu(i + j); }).det();
}

} // namespace detail

// det_{0<=i,j<n}(mu_{i+j+start}); the start offset reaches the Hankel forms
// whose top-left entry is a later moment
inline GaussianRational hankel_det(const MomentSequence& mu, long n, long start = 0) {
    if (n < 0) throw ParameterOutOfRange("hankel_det: need n >= 0");
    if (start < 0) throw ParameterOutOfRange("hankel_det: need start >= 0");
    return Matrix<GaussianRational>::from(n, n, [&](long i, long j) { return mu(i + j + start); }).det();
}

// Monic degree-n orthogonal polynomial of the functional with the given
// moments: the bordered Hankel determinant expanded along its power row,
// divided by the leading principal minor d_n.
inline PolyQi orth_poly_from_moments(const MomentSequence& mu, long n) {
    if (n < 0) throw ParameterOutOfRange("orth_poly_from_moments: need n >= 0");
    if (n == 0) return PolyQi({GaussianRational(1)});
    std::vector<GaussianRational> mom(static_cast<size_t>(2 * n));
    for (long k = 0; k < 2 * n; ++k) mom[static_cast<size_t>(k)] = mu(k);
    GaussianRational dn =
        Matrix<GaussianRational>::from(n, n, [&](long i, long j) { return mom[static_cast<size_t>(i + j)]; }).det();
    if (dn == GaussianRational(0)) throw SingularMomentMatrix();
    PolyQi p;
    for (long j = 0; j <= n; ++j) {
        Matrix<GaussianRational> minor = Matrix<GaussianRational>::from(n, n, [&](long r, long c) {
            long cc = (c < j) ? c : c + 1;
            return mom[static_cast<size_t>(r + cc)];
        });
        GaussianRational cof = minor.det() / dn;
        if ((n + j) % 2 != 0) cof = GaussianRational(0) - cof;
        p = p + PolyQi::monomial(j, cof);
    }
    return p;
}

// three-term recurrence data: p_{n+1}(x) = (a_n + x) p_n(x) - b_n p_{n-1}(x)
struct JFraction {
    GaussianRational mu0;
    std::vector<GaussianRational> a; // a[n] = a_n, n = 0..depth-1
    std::vector<GaussianRational> b; // b[n] = b_n, n = 1..depth-1; b[0] unused
};

// Extract the recurrence coefficients by coefficient comparison on the
// computed orthogonal polynomials, re-verifying each extracted level as an
// exact polynomial identity.  Needs all Hankel minors d_1..d_depth nonzero.
inline JFraction jfraction_from_moments(const MomentSequence& mu, long depth) {
    if (depth < 1) throw ParameterOutOfRange("jfraction_from_moments: need depth >= 1");
    JFraction jf;
    jf.mu0 = mu(0);
    jf.b.assign(static_cast<size_t>(depth), GaussianRational(0));
    std::vector<PolyQi> p(static_cast<size_t>(depth) + 1);
    for (long n = 0; n <= depth; ++n) p[static_cast<size_t>(n)] = orth_poly_from_moments(mu, n);
    for (long n = 0; n < depth; ++n) {
        const PolyQi& pn = p[static_cast<size_t>(n)];
        PolyQi rem = p[static_cast<size_t>(n) + 1] - PolyQi::monomial(1, GaussianRational(1)) * pn;
        GaussianRational an = rem[n];
        jf.a.push_back(an);
        rem = rem - PolyQi({an}) * pn;
        if (n == 0) {
            if (!(rem == PolyQi())) throw SingularMomentMatrix("jfraction: degree-0 level failed to close");
            continue;
        }
        const PolyQi& prev = p[static_cast<size_t>(n) - 1];
        GaussianRational bn = GaussianRational(0) - rem[n - 1];
        if (bn == GaussianRational(0) || !(rem == PolyQi({GaussianRational(0) - bn}) * prev))
            throw SingularMomentMatrix("jfraction: recurrence re-expansion failed");
        jf.b[static_cast<size_t>(n)] = bn;
    }
    return jf;
}

// Hankel determinant from the J-fraction: det_{0<=i,j<n}(mu_{i+j})
// = mu_0^n b_1^{n-1} b_2^{n-2} ... b_{n-1}
inline GaussianRational hankel_via_jfraction(const JFraction& jf, long n) {
    if (n < 0) throw ParameterOutOfRange("hankel_via_jfraction: need n >= 0");
    if (n > 0 && static_cast<long>(jf.b.size()) < n)
        throw ParameterOutOfRange("hankel_via_jfraction: not enough extracted b coefficients");
    GaussianRational r = detail::qi_pow(jf.mu0, n);
    for (long k = 1; k < n; ++k) r = r * detail::qi_pow(jf.b[static_cast<size_t>(k)], n - k);
    return r;
}

// Rebuild p_0..p_nmax from extracted recurrence coefficients (the Favard
// round trip; must reproduce orth_poly_from_moments).
inline std::vector<PolyQi> polys_from_jfraction(const JFraction& jf, long nmax) {
    if (nmax < 0 || nmax > static_cast<long>(jf.a.size()))
        throw ParameterOutOfRange("polys_from_jfraction: depth exceeded");
    std::vector<PolyQi> p;
    p.push_back(PolyQi({GaussianRational(1)}));
    for (long n = 0; n < nmax; ++n) {
        PolyQi next = (PolyQi::monomial(1, GaussianRational(1)) + PolyQi({jf.a[static_cast<size_t>(n)]})) *
                      p[static_cast<size_t>(n)];
        if (n > 0) next = next - PolyQi({jf.b[static_cast<size_t>(n)]}) * p[static_cast<size_t>(n) - 1];
        p.push_back(next);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Wronskian-to-Hankel identity for formal orthogonal polynomials: the m x m
// determinant of derivatives of consecutive non-normalized polynomials P_n
// equals an explicit constant times an l x l Hankel determinant of the
// binomial-transform polynomials Q_n.
// ---------------------------------------------------------------------------

// non-normalized bordered-determinant polynomial (d_n times the monic one)
inline PolyQi bordered_orth_poly(const MomentSequence& mu, long n) {
    if (n < 0) throw ParameterOutOfRange("bordered_orth_poly: need n >= 0");
    if (n == 0) return PolyQi({GaussianRational(1)});
    std::vector<GaussianRational> mom(static_cast<size_t>(2 * n));
    for (long k = 0; k < 2 * n; ++k) mom[static_cast<size_t>(k)] = mu(k);
    PolyQi p;
    for (long j = 0; j <= n; ++j) {
        Matrix<GaussianRational> minor = Matrix<GaussianRational>::from(n, n, [&](long r, long c) {
            long cc = (c < j) ? c : c + 1;
            return mom[static_cast<size_t>(r + cc)];
        });
        GaussianRational cof = minor.det();
        if ((n + j) % 2 != 0) cof = GaussianRational(0) - cof;
        p = p + PolyQi::monomial(j, cof);
    }
    return p;
}

// Q_n(x) = sum_k mu_k C(n,k) (-x)^{n-k}
inline PolyQi binomial_transform_poly(const MomentSequence& mu, long n) {
    if (n < 0) throw ParameterOutOfRange("binomial_transform_poly: need n >= 0");
    PolyQi q;
    for (long k = 0; k <= n; ++k) {
        GaussianRational c = mu(k) * GaussianRational(Rational(binom(n, k)));
        if ((n - k) % 2 != 0) c = GaussianRational(0) - c;
        q = q + PolyQi::monomial(n - k, c);
    }
    return q;
}

// the constant tying the two sides together: (-1)^{lm} prod_{k=1}^{m-1} k! d_{k+l}
inline GaussianRational wronskian_hankel_constant(const MomentSequence& mu, long l, long m) {
    if (l < 1 || m < 1) throw ParameterOutOfRange("wronskian_hankel_constant: need l, m >= 1");
    GaussianRational c(Rational(parity_sign(l * m)));
    for (long k = 1; k < m; ++k) c = c * GaussianRational(Rational(factorial(k))) * detail::moment_hankel(mu, k + l);
    return c;
}

// det_{0<=i,j<m}(P_{l+j}^{(i)}(x)) = C_{l,m} det_{0<=i,j<l}(Q_{m+i+j}(x))
inline bool leclerc_check(const MomentSequence& mu, long l, long m, const Rational& x) {
    if (l < 1 || m < 1) throw ParameterOutOfRange("leclerc_check: need l, m >= 1");
    GaussianRational gx(x);
    std::vector<std::vector<GaussianRational>> deriv(static_cast<size_t>(m));
    for (long j = 0; j < m; ++j) {
        PolyQi p = bordered_orth_poly(mu, l + j);
        for (long i = 0; i < m; ++i) {
            deriv[static_cast<size_t>(j)].push_back(p.eval(gx));
            p = p.derivative();
        }
    }
    GaussianRational lhs = Matrix<GaussianRational>::from(m, m, [&](long i, long j) {
                               return deriv[static_cast<size_t>(j)][static_cast<size_t>(i)];
                           }).det();
    std::vector<PolyQi> q;
    for (long k = 0; k <= 2 * l - 2; ++k) q.push_back(binomial_transform_poly(mu, m + k));
    GaussianRational rhs = Matrix<GaussianRational>::from(l, l, [&](long i, long j) {
                               return q[static_cast<size_t>(i + j)].eval(gx);
                           }).det();
    return lhs == wronskian_hankel_constant(mu, l, m) * rhs;
}

} // namespace lozenge
