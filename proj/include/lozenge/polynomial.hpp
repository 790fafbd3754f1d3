#pragma once

#include <map>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// Dense univariate polynomial over an exact scalar (Rational or
// GaussianRational).  Coefficients are stored low degree first and trailing
// zeros are trimmed, so degree() of the zero polynomial is -1.
// ---------------------------------------------------------------------------

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const T& c) { coef_.push_back(c); trim(); }
    Polynomial(long c) : Polynomial(T(c)) {}
    explicit Polynomial(std::vector<T> coef) : coef_(std::move(coef)) { trim(); }

    static Polynomial monomial(long deg, const T& c = T(1)) {
        if (deg < 0) throw ParameterOutOfRange("Polynomial: negative degree");
        std::vector<T> v(static_cast<size_t>(deg) + 1, T(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }
    static Polynomial x() { return monomial(1); }

    long degree() const { return static_cast<long>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }

    // coefficient of x^k, zero outside the stored range
    T operator[](long k) const {
        if (k < 0 || k >= static_cast<long>(coef_.size())) return T(0);
        return coef_[static_cast<size_t>(k)];
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coef_.size(), b.coef_.size()), T(0));
        for (size_t i = 0; i < a.coef_.size(); ++i) v[i] += a.coef_[i];
        for (size_t i = 0; i < b.coef_.size(); ++i) v[i] += b.coef_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coef_.size(), b.coef_.size()), T(0));
        for (size_t i = 0; i < a.coef_.size(); ++i) v[i] += a.coef_[i];
        for (size_t i = 0; i < b.coef_.size(); ++i) v[i] -= b.coef_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial(T(0)) - a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> v(a.coef_.size() + b.coef_.size() - 1, T(0));
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j)
                v[i + j] += a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(v));
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    T eval(const T& x) const {
        T acc(0);
        for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (coef_.size() <= 1) return Polynomial();
        std::vector<T> v(coef_.size() - 1, T(0));
        for (size_t i = 1; i < coef_.size(); ++i) v[i - 1] = coef_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(v));
    }

    // substitute x -> -x
    Polynomial reflect() const {
        std::vector<T> v = coef_;
        for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
        return Polynomial(std::move(v));
    }

    const std::vector<T>& coefficients() const { return coef_; }

private:
    std::vector<T> coef_;
    void trim() {
        while (!coef_.empty() && coef_.back() == T(0)) coef_.pop_back();
    }
};

using PolyQ  = Polynomial<Rational>;
using PolyQi = Polynomial<GaussianRational>;

namespace detail {
inline bool scalar_is_negative(const Rational& r) { return r < 0; }
inline bool scalar_is_negative(const GaussianRational& g) { return g.im == 0 && g.re < 0; }
inline std::string scalar_abs_str(const Rational& r) { return to_string(Rational(abs(r))); }
inline std::string scalar_abs_str(const GaussianRational& g) {
    if (g.im == 0) return to_string(Rational(abs(g.re)));
    return "(" + to_string(g) + ")";
}
inline bool scalar_is_one(const Rational& r) { return r == 1; }
inline bool scalar_is_one(const GaussianRational& g) { return g.re == 1 && g.im == 0; }
} // namespace detail

// Human-readable form, highest degree first: "x^2 - 1/5".
template <class T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        T c = p[k];
        if (c == T(0)) continue;
        bool neg = detail::scalar_is_negative(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        T a = neg ? T(-c) : c;
        std::string mag = detail::scalar_abs_str(neg ? T(-c) : c);
        if (k == 0) {
            out += mag;
        } else {
            if (!detail::scalar_is_one(a)) out += mag + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sparse Laurent polynomial over Q: finitely many terms c_k x^k with k in Z.
// This is the carrier for umbral calculus, where negative powers appear
// transiently and must all cancel before the symbol is resolved.
// ---------------------------------------------------------------------------

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& c) { set(0, c); }
    LaurentPolynomial(long c) { set(0, Rational(c)); }

    static LaurentPolynomial term(long k, const Rational& c) {
        LaurentPolynomial p;
        p.set(k, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long min_exponent() const {
        if (is_zero()) throw ParameterOutOfRange("LaurentPolynomial: zero has no exponents");
        return terms_.begin()->first;
    }
    long max_exponent() const {
        if (is_zero()) throw ParameterOutOfRange("LaurentPolynomial: zero has no exponents");
        return terms_.rbegin()->first;
    }

    const std::map<long, Rational>& terms() const { return terms_; }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r = a;
        for (auto& [k, c] : b.terms_) r.add(k, -c);
        return r;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
        LaurentPolynomial r;
        for (auto& [k, c] : a.terms_) r.set(k, -c);
        return r;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
        return r;
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& b) { return *this = *this - b; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    // 1 / (c x^k), defined only for monomials
    LaurentPolynomial invert_monomial() const {
        if (!is_monomial()) throw ParameterOutOfRange("LaurentPolynomial: only a monomial can be inverted");
        auto [k, c] = *terms_.begin();
        return term(-k, rdiv(Rational(1), c));
    }

private:
    std::map<long, Rational> terms_;
    void set(long k, const Rational& c) {
        if (c != 0) terms_[k] = c;
    }
    void add(long k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            set(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

// Exact Lagrange interpolation through (xs[i], ys[i]); nodes must be
// distinct.  Returns the unique polynomial of degree < #nodes.
template <class T>
Polynomial<T> lagrange_interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
    if (xs.size() != ys.size()) throw ParameterOutOfRange("lagrange_interpolate: node/value size mismatch");
    Polynomial<T> total;
    for (size_t i = 0; i < xs.size(); ++i) {
        Polynomial<T> basis({T(1)});
        T denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw ParameterOutOfRange("lagrange_interpolate: repeated node");
            basis = basis * Polynomial<T>({T(0) - xs[j], T(1)});
            denom = denom * (xs[i] - xs[j]);
        }
        total = total + basis * Polynomial<T>(T(ys[i] / denom));
    }
    return total;
}

// Rising factorial (a)_k over the Laurent ring.  k = -1 is the reciprocal
// convention (a)_{-1} = 1/(a-1), legal only when a-1 is a monomial; this is
// exactly the (B+1)_{-1} = 1/B and (-B+1)_{-1} = -1/B bookkeeping the moment
// formulas rely on.
inline LaurentPolynomial poch_laurent(const LaurentPolynomial& a, long k) {
    if (k >= 0) {
        LaurentPolynomial p(1);
        for (long t = 0; t < k; ++t) p *= a + LaurentPolynomial(Rational(t));
        return p;
    }
    if (k == -1) return (a - LaurentPolynomial(1)).invert_monomial();
    throw ParameterOutOfRange("poch_laurent: length below -1 is not supported");
}

} // namespace lozenge
