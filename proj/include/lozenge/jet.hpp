#pragma once

#include <string>

#include "numeric.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// First-order limit arithmetic.
//
// A JetRational tracks a germ f(eps) = sum_{k >= lead} a_k eps^k through a
// short window of exactly known coefficients:
//
//   ZERO                      f is identically zero
//   (lead, c0, c1, c2, nv)    a_k = 0 for k < lead, the first nv coefficients
//                             starting at a_lead are c0, c1, c2, and nothing
//                             is known from exponent lead + nv on
//
// Invariant: when nv >= 1 the leading coefficient c0 is nonzero, so `lead` is
// the true order of vanishing (or the pole order if negative).  nv = 0 means
// only f = O(eps^lead).
//
// Restricted to the eps^0..eps^1 window this is ordinary dual-number
// arithmetic (value, derivative); the scaled window is what lets a simple
// zero in one factor pass through a simple pole in another and still leave a
// usable value at eps = 0.  A window that runs out before the eps^0
// coefficient is knowable surfaces as UnresolvedSingularity: the limit is not
// determined at first order.
// ---------------------------------------------------------------------------

class JetRational {
public:
    static constexpr int kWindow = 3;

    // identically zero
    JetRational() : zero_(true), lead_(0), nv_(0) {}

    // exact constant
    JetRational(const Rational& v) : JetRational(affine(v, 0)) {}
    JetRational(long v) : JetRational(Rational(v)) {}

    // dual number: value + derivative*eps, higher order unknown
    JetRational(const Rational& value, const Rational& derivative) {
        if (value == 0 && derivative == 0) {
            *this = JetRational();
        } else if (value != 0) {
            *this = make(0, value, derivative, 0, 2);
        } else {
            *this = make(1, derivative, 0, 0, 1);
        }
    }

    // exact affine germ value + slope*eps (all higher coefficients are zero)
    static JetRational affine(const Rational& value, const Rational& slope) {
        if (value == 0 && slope == 0) return JetRational();
        if (value != 0) return make(0, value, slope, 0, kWindow);
        return make(1, slope, 0, 0, kWindow);
    }

    // germ known only as O(eps^order)
    static JetRational big_o(long order) { return make(order, 0, 0, 0, 0); }

    bool is_exact_zero() const { return zero_; }
    long lead() const {
        if (zero_) throw ParameterOutOfRange("JetRational: zero has no leading exponent");
        return lead_;
    }
    int nvalid() const { return zero_ ? 0 : nv_; }

    // known coefficient of eps^k
    Rational coeff(long k) const {
        if (zero_) return 0;
        if (k < lead_) return 0;
        if (k < lead_ + nv_) return c_[k - lead_];
        throw UnresolvedSingularity("JetRational: coefficient of eps^" + std::to_string(k) + " is outside the known window");
    }

    // the limit at eps = 0
    Rational value() const {
        if (zero_) return 0;
        if (lead_ > 0) return 0;
        if (lead_ < 0) {
            if (nv_ >= 1) throw UnresolvedSingularity("JetRational: pole of order " + std::to_string(-lead_) + " at eps = 0");
            throw UnresolvedSingularity("JetRational: window exhausted below eps^0");
        }
        if (nv_ >= 1) return c_[0];
        throw UnresolvedSingularity("JetRational: window exhausted at eps^0");
    }

    Rational derivative() const { return coeff(1); }

    friend JetRational operator+(const JetRational& a, const JetRational& b) {
        if (a.zero_) return b;
        if (b.zero_) return a;
        long lo = std::min(a.lead_, b.lead_);
        long eo = std::min(a.lead_ + a.nv_, b.lead_ + b.nv_);
        Rational w[kWindow];
        int n = 0;
        for (long k = lo; k < eo && n < kWindow; ++k, ++n) w[n] = a.known_at(k) + b.known_at(k);
        return make(lo, w[0], w[1], w[2], n);
    }

    friend JetRational operator-(const JetRational& a) {
        if (a.zero_) return a;
        return make(a.lead_, -a.c_[0], -a.c_[1], -a.c_[2], a.nv_);
    }
    friend JetRational operator-(const JetRational& a, const JetRational& b) { return a + (-b); }

    friend JetRational operator*(const JetRational& a, const JetRational& b) {
        if (a.zero_ || b.zero_) return JetRational();
        int n = std::min(a.nv_, b.nv_);
        Rational w[kWindow];
        for (int t = 0; t < n; ++t)
            for (int i = 0; i <= t; ++i) w[t] += a.c_[i] * b.c_[t - i];
        return make(a.lead_ + b.lead_, w[0], w[1], w[2], n);
    }

    JetRational reciprocal() const {
        if (zero_) throw ZeroDenominator("JetRational: reciprocal of exact zero");
        if (nv_ == 0) throw UnresolvedSingularity("JetRational: reciprocal of an opaque O(eps^k) germ");
        // c0 != 0 by invariant
        Rational e0 = rdiv(Rational(1), c_[0]);
        Rational e1 = -c_[1] * e0 * e0;
        Rational e2 = (c_[1] * c_[1] - c_[0] * c_[2]) * e0 * e0 * e0;
        return make(-lead_, e0, e1, e2, nv_);
    }

    friend JetRational operator/(const JetRational& a, const JetRational& b) {
        if (b.zero_) throw ZeroDenominator("JetRational: division by exact zero");
        if (a.zero_) return a;
        return a * b.reciprocal();
    }

    JetRational& operator+=(const JetRational& b) { return *this = *this + b; }
    JetRational& operator-=(const JetRational& b) { return *this = *this - b; }
    JetRational& operator*=(const JetRational& b) { return *this = *this * b; }
    JetRational& operator/=(const JetRational& b) { return *this = *this / b; }

    JetRational pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        JetRational acc(Rational(1));
        for (long i = 0; i < e; ++i) acc *= *this;
        return acc;
    }

    friend bool operator==(const JetRational& a, const JetRational& b) {
        if (a.zero_ != b.zero_) return false;
        if (a.zero_) return true;
        if (a.lead_ != b.lead_ || a.nv_ != b.nv_) return false;
        for (int i = 0; i < a.nv_; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

private:
    bool zero_;
    long lead_;
    Rational c_[kWindow];
    int nv_;

    // coefficient of eps^k, under the guarantee k < lead_ + nv_
    Rational known_at(long k) const {
        if (k < lead_) return 0;
        return c_[k - lead_];
    }

    static JetRational make(long lead, Rational w0, Rational w1, Rational w2, int nv) {
        // strip cancelled leading coefficients so lead is the true order
        while (nv > 0 && w0 == 0) {
            w0 = w1;
            w1 = w2;
            w2 = 0;
            ++lead;
            --nv;
        }
        JetRational j;
        j.zero_ = false;
        j.lead_ = lead;
        j.c_[0] = w0;
        j.c_[1] = w1;
        j.c_[2] = w2;
        j.nv_ = nv;
        return j;
    }
};

inline std::string to_string(const JetRational& j) {
    if (j.is_exact_zero()) return "0";
    std::string s = "eps^" + std::to_string(j.lead()) + "*(";
    for (int i = 0; i < j.nvalid(); ++i) {
        if (i) s += ", ";
        s += to_string(j.coeff(j.lead() + i));
    }
    s += j.nvalid() ? ", ...)" : "...)";
    return s;
}

// Gamma(z0 + s*eps) / Gamma(1 + s*eps) for integer z0.  For z0 >= 1 this is
// the exact polynomial prod_{t=1}^{z0-1} (t + s*eps); for z0 <= 0 it is the
// reciprocal of prod_{t=z0}^{0} (t + s*eps), where the t = 0 factor supplies
// the simple pole of Gamma at the nonpositive integer.
inline JetRational jet_gamma_ratio(long z0, const Rational& s) {
    JetRational p(Rational(1));
    if (z0 >= 1) {
        for (long t = 1; t < z0; ++t) p *= JetRational::affine(Rational(t), s);
        return p;
    }
    if (s == 0) throw ZeroDenominator("jet_gamma_ratio: Gamma pole at nonpositive integer with zero slope");
    for (long t = z0; t <= 0; ++t) p *= JetRational::affine(Rational(t), s);
    return p.reciprocal();
}

// Binomial coefficient C(t0 + ts*eps, b0 + bs*eps) at integer arguments,
// continued through negative-integer degenerations via gamma ratios:
//
//   C(top, bot) = R(t0+1, ts) / ( R(b0+1, bs) * R(t0-b0+1, ts-bs) ) * E
//
// with R the gamma ratio above and E = Gamma(1+ts*eps) /
// (Gamma(1+bs*eps) Gamma(1+(ts-bs)*eps)).  E has no eps^1 term (the
// Euler-Mascheroni contributions cancel since the slopes add up), and its
// eps^2 coefficient is a zeta(2) multiple, hence not rational: E enters as
// the window (1, 0, ?) and caps the result at two known coefficients.
inline JetRational jet_binomial(long t0, const Rational& ts, long b0, const Rational& bs) {
    JetRational num = jet_gamma_ratio(t0 + 1, ts);
    JetRational den = jet_gamma_ratio(b0 + 1, bs) * jet_gamma_ratio(t0 - b0 + 1, ts - bs);
    JetRational e(Rational(1), Rational(0)); // (1, 0, unknown)
    if (bs == 0 || ts == bs) e = JetRational(Rational(1)); // E is exactly 1
    return e * num / den;
}

} // namespace lozenge
