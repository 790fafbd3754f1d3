#pragma once

#include <array>
#include <string>
#include <vector>

#include "jet.hpp"
#include "tiling.hpp"

namespace lozenge {

// ---------------------------------------------------------------------------
// Closed-form counts for the fixed axis rhombus, organized by the parities
// of the hexagon sides N and M and by which slot on the symmetry axis is
// fixed.  Each formula is a balanced bracket (polynomial part plus one
// terminating hypergeometric-style sum) times binomial prefactors times the
// plain box count of the hexagon.
//
// The formulas have removable singularities at small parameters (binomials
// at negative integers, vanishing bracket denominators).  Every formula body
// is therefore written once, generically over the scalar: an exact pass over
// Rational, and limit passes over JetRational with m -> m + eps and then
// n -> n + eps.  The driver tries the three in that order.
// ---------------------------------------------------------------------------

// linear form c0 + cn*n + cm*m, the argument shape shared by every binomial
// and Pochhammer parameter in the formulas
struct LinForm {
    Rational c0;
    long cn = 0, cm = 0;
    LinForm(long c = 0) : c0(c) {}
    LinForm(const Rational& c) : c0(c) {}
    LinForm(const Rational& c, long cn_, long cm_) : c0(c), cn(cn_), cm(cm_) {}
};

inline LinForm operator+(const LinForm& a, const LinForm& b) {
    return LinForm(a.c0 + b.c0, a.cn + b.cn, a.cm + b.cm);
}
inline LinForm operator-(const LinForm& a, const LinForm& b) {
    return LinForm(a.c0 - b.c0, a.cn - b.cn, a.cm - b.cm);
}
inline LinForm operator*(long k, const LinForm& a) { return LinForm(Rational(k) * a.c0, k * a.cn, k * a.cm); }

namespace cf {

// the two formula variables
inline const LinForm vn{Rational(0), 1, 0};
inline const LinForm vm{Rational(0), 0, 1};

struct ExactEval {
    using S = Rational;
    long n0, m0;

    Rational value_of(const LinForm& l) const { return l.c0 + Rational(l.cn * n0 + l.cm * m0); }
    S lin(const LinForm& l) const { return value_of(l); }
    S lift(const Rational& r) const { return r; }
    S binom(const LinForm& t, const LinForm& b) const {
        long tv = to_long(value_of(t)), bv = to_long(value_of(b));
        if (bv < 0) {
            if (tv >= 0) return Rational(0);
            // Gamma poles above and below: only a limit can decide
            throw NeedsLimit("binomial at doubly negative integer arguments");
        }
        return Rational(lozenge::binom(Integer(tv), bv));
    }
    S div(const S& a, const S& b) const {
        if (b == 0) throw NeedsLimit("exact evaluation hit a zero denominator");
        return a / b;
    }
    S pow(const S& a, long e) const {
        if (a == 0 && e < 0) throw NeedsLimit("exact evaluation hit a zero base at negative power");
        return rpow(a, e);
    }
    Rational finalize(const S& v) const { return v; }
};

struct JetEval {
    using S = JetRational;
    long n0, m0;
    Rational sn, sm; // slope of the perturbation in each variable

    Rational value_of(const LinForm& l) const { return l.c0 + Rational(l.cn * n0 + l.cm * m0); }
    Rational slope_of(const LinForm& l) const { return Rational(l.cn) * sn + Rational(l.cm) * sm; }
    S lin(const LinForm& l) const { return JetRational::affine(value_of(l), slope_of(l)); }
    S lift(const Rational& r) const { return JetRational(r); }
    S binom(const LinForm& t, const LinForm& b) const {
        return jet_binomial(to_long(value_of(t)), slope_of(t), to_long(value_of(b)), slope_of(b));
    }
    S div(const S& a, const S& b) const { return a / b; }
    S pow(const S& a, long e) const { return a.pow(e); }
    Rational finalize(const S& v) const { return v.value(); }
};

// sum_{h=0}^{nterms-1} prod (u)_h / prod (l)_h by consecutive-term ratios;
// an empty sum is an exact zero and performs no divisions at all
template <class Ctx>
typename Ctx::S hyp_sum(const Ctx& c, const std::vector<LinForm>& uppers, const std::vector<LinForm>& lowers,
                        long nterms) {
    using S = typename Ctx::S;
    S total = c.lift(Rational(0));
    if (nterms <= 0) return total;
    S term = c.lift(Rational(1));
    for (long h = 0; h < nterms; ++h) {
        total = total + term;
        if (h + 1 == nterms) break;
        S num = c.lift(Rational(1)), den = c.lift(Rational(1));
        for (const LinForm& u : uppers) num = num * c.lin(u + LinForm(h));
        for (const LinForm& l : lowers) den = den * c.lin(l + LinForm(h));
        term = c.div(term * num, den);
    }
    return total;
}

// evaluate a bivariate integer-coefficient polynomial given as (coef, i, j)
// monomial triples: sum coef * n^i * m^j
template <class Ctx>
typename Ctx::S poly2(const Ctx& c, const std::vector<std::array<long, 3>>& monomials) {
    using S = typename Ctx::S;
    S n_ = c.lin(vn), m_ = c.lin(vm);
    S total = c.lift(Rational(0));
    for (const auto& [coef, i, j] : monomials) total = total + c.lift(Rational(coef)) * c.pow(n_, i) * c.pow(m_, j);
    return total;
}

// hexagon 2n,2m,2n,2n,2m,2n; slot n+m (the upper one of the two central slots)
template <class Ctx>
typename Ctx::S body_ee_central(const Ctx& c) {
    using S = typename Ctx::S;
    const LinForm n = vn, m = vm;
    const LinForm h32 = LinForm(Q(3, 2));
    S pre = c.div(c.lin(n) * c.lin(m) * c.binom(2 * n, n) * c.binom(2 * n - LinForm(1), n) * c.binom(2 * m, m),
                  c.binom(4 * n + 2 * m - LinForm(1), 2 * n + m));
    S sum = hyp_sum(c,
                    {LinForm(2), LinForm(1) - n, h32 + n, LinForm(1) - n - m, LinForm(1) + n + m},
                    {LinForm(1), LinForm(2) + n, h32 - n, LinForm(2) + n + m, LinForm(2) - n - m}, c.n0);
    S bracket = c.div(c.lift(Rational(-1)), c.pow(c.lin(n + m), 2)) +
                c.div(c.lin(4 * n + LinForm(2)),
                      c.lin(n + LinForm(1)) * c.lin(2 * n - LinForm(1)) * c.lin(n + m - LinForm(1)) *
                          c.lin(n + m + LinForm(1))) *
                    sum;
    return pre * bracket * c.lift(Rational(macmahon(2 * c.n0, 2 * c.m0, 2 * c.n0)));
}

// hexagon 2n+1,2m-1,...; slot n+m (upper central)
template <class Ctx>
typename Ctx::S body_oo_central(const Ctx& c) {
    using S = typename Ctx::S;
    const LinForm n = vn, m = vm;
    const LinForm h32 = LinForm(Q(3, 2));
    S pre = c.div(c.lin(n + LinForm(1)) * c.lin(m) * c.binom(2 * n, n) * c.binom(2 * n + LinForm(1), n) *
                      c.binom(2 * m - LinForm(1), m),
                  c.binom(4 * n + 2 * m, 2 * n + m));
    S sum = hyp_sum(c,
                    {LinForm(2), LinForm(1) - n, h32 + n, LinForm(1) - n - m, LinForm(1) + n + m},
                    {LinForm(1), LinForm(2) + n, h32 - n, LinForm(2) + n + m, LinForm(2) - n - m}, c.n0);
    S bracket = c.div(c.lift(Rational(1)), c.pow(c.lin(n + m), 2)) +
                c.div(c.lin(4 * n),
                      c.lin(n + LinForm(1)) * c.lin(2 * n - LinForm(1)) * c.lin(n + m - LinForm(1)) *
                          c.lin(n + m + LinForm(1))) *
                    sum;
    return pre * bracket * c.lift(Rational(macmahon(2 * c.n0 + 1, 2 * c.m0 - 1, 2 * c.n0 + 1)));
}

// shared by the two mixed-parity central theorems, which differ only in the
// bracket polynomial and the final box count
template <class Ctx>
typename Ctx::S body_mixed_above(const Ctx& c, bool even_n_side) {
    using S = typename Ctx::S;
    const LinForm n = vn, m = vm;
    const LinForm h32 = LinForm(Q(3, 2)), h52 = LinForm(Q(5, 2));
    S pre = c.div(c.lin(2 * m - LinForm(1)) * c.binom(2 * m - LinForm(2), m - LinForm(1)) *
                      c.binom(2 * n - LinForm(4), n - LinForm(2)) * c.binom(2 * n + LinForm(2), n + LinForm(1)),
                  c.lin(n + m - LinForm(1)) * c.lin(n + m) * c.binom(4 * n + 2 * m - LinForm(3), 2 * n + m - LinForm(2)));
    // n^2 + (2m+1)n + (m^2 - m + 1)   resp.   n^2 + (2m-3)n + (m^2 - m + 2)
    std::vector<std::array<long, 3>> mono = even_n_side
        ? std::vector<std::array<long, 3>>{{1, 0, 2}, {-1, 0, 1}, {1, 1, 0}, {2, 1, 1}, {1, 2, 0}, {1, 0, 0}}
        : std::vector<std::array<long, 3>>{{1, 0, 2}, {-1, 0, 1}, {-3, 1, 0}, {2, 1, 1}, {1, 2, 0}, {2, 0, 0}};
    S t1 = c.div(c.lin(n) * c.lin(n + LinForm(1)) * c.lin(2 * n - LinForm(3)) * c.lin(2 * n - LinForm(1)) *
                     poly2(c, mono),
                 c.lin(n - LinForm(1)) * c.lin(n + m - LinForm(1)) * c.lin(n + m) * c.lin(2 * n + LinForm(1)));
    S sum = hyp_sum(c,
                    {LinForm(3), h52, LinForm(2) - n, h32 + n, LinForm(2) - n - m, LinForm(1) + n + m},
                    {LinForm(1), h32, LinForm(2) + n, h52 - n, LinForm(2) + n + m, LinForm(3) - n - m}, c.n0 - 1);
    S t2 = c.div(c.lift(Rational(6)), c.lin(n + m - LinForm(2)) * c.lin(n + m + LinForm(1))) * sum;
    Integer box = even_n_side ? macmahon(2 * c.n0, 2 * c.m0 - 1, 2 * c.n0)
                              : macmahon(2 * c.n0 - 1, 2 * c.m0, 2 * c.n0 - 1);
    return pre * (t1 + t2) * c.lift(Rational(box));
}

// hexagon 2n,2m,...; slot n+m+1 (one above the central pair)
template <class Ctx>
typename Ctx::S body_ee_second(const Ctx& c) {
    using S = typename Ctx::S;
    const LinForm n = vn, m = vm;
    const LinForm h52 = LinForm(Q(5, 2));
    S pre = c.div(c.binom(n + m - LinForm(1), m) * c.binom(2 * n + LinForm(2), n - LinForm(1)) *
                      c.binom(2 * n + m - LinForm(1), n) * c.binom(2 * n + m, 2 * n + LinForm(1)),
                  c.lift(Rational(2)) * c.lin(2 * n - LinForm(3)) * c.lin(2 * n - LinForm(1)) *
                      c.lin(2 * n + LinForm(2)) * c.lin(n + m - LinForm(1)) * c.lin(n + m + LinForm(1)) *
                      c.binom(4 * n - LinForm(1), 2 * n) * c.binom(4 * n + 2 * m - LinForm(1), 2 * m));
    static const std::vector<std::array<long, 3>> xmono = {
        {-1, 0, 0}, {4, 0, 2},  {-3, 0, 4}, {-1, 1, 0},  {8, 1, 1},   {11, 1, 2}, {-12, 1, 3}, {-6, 1, 4},
        {8, 2, 0},  {22, 2, 1}, {-4, 2, 2}, {-24, 2, 3}, {-2, 2, 4},  {15, 3, 0}, {16, 3, 1},  {-28, 3, 2},
        {-8, 3, 3}, {-5, 4, 0}, {-8, 4, 1}, {-12, 4, 2}, {-14, 5, 0}, {-8, 5, 1}, {-2, 6, 0}};
    S t1 = c.div(c.lift(Rational(2)) * c.lin(n + LinForm(2)) * c.lin(n + LinForm(3)) * c.lin(2 * n - LinForm(1)) *
                     c.lin(2 * n - LinForm(3)) * poly2(c, xmono),
                 c.lin(n + m - LinForm(1)) * c.pow(c.lin(n + m), 2) * c.lin(n + m + LinForm(1)));
    S sum = hyp_sum(c,
                    {LinForm(4), LinForm(1) - n, h52 + n, LinForm(2) - n - m, LinForm(2) + n + m},
                    {LinForm(1), LinForm(4) + n, h52 - n, LinForm(3) + n + m, LinForm(3) - n - m}, c.n0);
    S t2 = c.div(c.lift(Rational(24)) * c.lin(m - LinForm(1)) * c.lin(2 * n + m + LinForm(1)) *
                     c.lin(2 * n + LinForm(1)) * c.lin(2 * n + LinForm(3)),
                 c.lin(n + m - LinForm(2)) * c.lin(n + m + LinForm(2))) *
           sum;
    return pre * (t1 - t2) * c.lift(Rational(macmahon(2 * c.n0, 2 * c.m0, 2 * c.n0)));
}

// hexagon 2n+1,2m-1,...; slot n+m+1
template <class Ctx>
typename Ctx::S body_oo_second(const Ctx& c) {
    using S = typename Ctx::S;
    const LinForm n = vn, m = vm;
    const LinForm h52 = LinForm(Q(5, 2));
    S pre = c.div(c.binom(2 * m - LinForm(1), m) * c.binom(n + m - LinForm(1), m - LinForm(1)) *
                      c.binom(2 * n + LinForm(2), n - LinForm(1)) * c.binom(2 * n + m, n + LinForm(1)),
                  c.lin(m + LinForm(1)) * c.lin(m + LinForm(2)) * c.lin(2 * n - LinForm(3)) *
                      c.lin(n + m - LinForm(1)) * c.lin(n + m + LinForm(1)) * c.binom(2 * n + m, m + LinForm(2)) *
                      c.binom(4 * n + 2 * m, 2 * n + m));
    static const std::vector<std::array<long, 3>> ymono = {
        {1, 0, 0},   {-2, 0, 2}, {1, 0, 4},   {5, 1, 0},   {-4, 1, 1},  {-2, 1, 2}, {4, 1, 3},  {-3, 1, 4},
        {22, 2, 0},  {-4, 2, 1}, {-4, 2, 2},  {-12, 2, 3}, {-2, 2, 4},  {50, 3, 0}, {-16, 3, 1}, {-26, 3, 2},
        {-8, 3, 3},  {39, 4, 0}, {-28, 4, 1}, {-12, 4, 2}, {5, 5, 0},   {-8, 5, 1}, {-2, 6, 0}};
    S t1 = c.div(c.lin(n + LinForm(2)) * c.lin(n + LinForm(3)) * c.lin(2 * n - LinForm(1)) *
                     c.lin(2 * n - LinForm(3)) * poly2(c, ymono),
                 c.lin(n + m - LinForm(1)) * c.pow(c.lin(n + m), 2) * c.lin(n + m + LinForm(1)));
    S sum = hyp_sum(c,
                    {LinForm(4), LinForm(1) - n, h52 + n, LinForm(2) - n - m, LinForm(2) + n + m},
                    {LinForm(1), LinForm(4) + n, h52 - n, LinForm(3) + n + m, LinForm(3) - n - m}, c.n0);
    S t2 = c.div(c.lift(Rational(24)) * c.lin(m - LinForm(1)) * c.lin(n) * c.lin(2 * n + m + LinForm(1)) *
                     c.lin(2 * n + LinForm(3)),
                 c.lin(n + m - LinForm(2)) * c.lin(n + m + LinForm(2))) *
           sum;
    return pre * (t1 - t2) * c.lift(Rational(macmahon(2 * c.n0 + 1, 2 * c.m0 - 1, 2 * c.n0 + 1)));
}

// run a body through exact evaluation, then limits in m and in n
template <class Body>
Rational eval_with_limits(long n0, long m0, Body&& body) {
    try {
        ExactEval c{n0, m0};
        return c.finalize(body(c));
    } catch (const NeedsLimit&) {
    } catch (const ZeroDenominator&) {
    } catch (const UnresolvedSingularity&) {
    }
    try {
        JetEval c{n0, m0, Rational(0), Rational(1)};
        return c.finalize(body(c));
    } catch (const NeedsLimit&) {
    } catch (const ZeroDenominator&) {
    } catch (const UnresolvedSingularity&) {
    }
    JetEval c{n0, m0, Rational(1), Rational(0)};
    return c.finalize(body(c));
}

inline Integer as_count(const Rational& r, const char* who) {
    if (!is_integer(r)) throw NonIntegerResult(std::string(who) + ": closed form is not an integer");
    return r.get_num();
}

} // namespace cf

// ---------------------------------------------------------------------------
// public closed forms; parameter names follow the hexagon families
// ---------------------------------------------------------------------------

// hexagon 2n,2m,2n,2n,2m,2n; axis slot n+m.  n, m >= 1
inline Integer closed_count_ee_central(long n, long m) {
    if (n < 1 || m < 1) throw ParameterOutOfRange("closed_count_ee_central: need n, m >= 1");
    return cf::as_count(cf::eval_with_limits(n, m, [](auto& c) { return cf::body_ee_central(c); }),
                        "closed_count_ee_central");
}

// hexagon 2n+1,2m-1,...; axis slot n+m.  n >= 0, m >= 1
inline Integer closed_count_oo_central(long n, long m) {
    if (n < 0 || m < 1) throw ParameterOutOfRange("closed_count_oo_central: need n >= 0, m >= 1");
    return cf::as_count(cf::eval_with_limits(n, m, [](auto& c) { return cf::body_oo_central(c); }),
                        "closed_count_oo_central");
}

// hexagon 2n,2m-1,...; axis slot n+m.  n, m >= 1
inline Integer closed_count_eo_above(long n, long m) {
    if (n < 1 || m < 1) throw ParameterOutOfRange("closed_count_eo_above: need n, m >= 1");
    return cf::as_count(cf::eval_with_limits(n, m, [](auto& c) { return cf::body_mixed_above(c, true); }),
                        "closed_count_eo_above");
}

// hexagon 2n-1,2m,...; axis slot n+m.  n, m >= 1
inline Integer closed_count_oe_above(long n, long m) {
    if (n < 1 || m < 1) throw ParameterOutOfRange("closed_count_oe_above: need n, m >= 1");
    return cf::as_count(cf::eval_with_limits(n, m, [](auto& c) { return cf::body_mixed_above(c, false); }),
                        "closed_count_oe_above");
}

// hexagon 2n,2m,...; axis slot n+m+1.  n, m >= 1
inline Integer closed_count_ee_second(long n, long m) {
    if (n < 1 || m < 1) throw ParameterOutOfRange("closed_count_ee_second: need n, m >= 1");
    return cf::as_count(cf::eval_with_limits(n, m, [](auto& c) { return cf::body_ee_second(c); }),
                        "closed_count_ee_second");
}

// hexagon 2n+1,2m-1,...; axis slot n+m+1.  n, m >= 1
inline Integer closed_count_oo_second(long n, long m) {
    if (n < 1 || m < 1) throw ParameterOutOfRange("closed_count_oo_second: need n, m >= 1");
    return cf::as_count(cf::eval_with_limits(n, m, [](auto& c) { return cf::body_oo_second(c); }),
                        "closed_count_oo_second");
}

// Dispatch by hexagon shape and slot, using the mirror symmetry
// count(l) = count(N+M-1-l) to reach both sides of the axis.  Slots not
// covered by any closed form are reported as unsupported.
inline Integer closed_form_for(long N, long M, long l) {
    if (N < 1 || M < 0) throw ParameterOutOfRange("closed_form_for: need N >= 1, M >= 0");
    if (l < 0 || l > N + M - 1) throw ParameterOutOfRange("closed_form_for: slot out of range");
    long mirror = N + M - 1 - l;
    bool ne = (N % 2 == 0), me = (M % 2 == 0);
    if (ne && me) {
        long n = N / 2, m = M / 2; // n, m >= 1 once N, M >= 2
        if (n >= 1 && m >= 1) {
            if (l == n + m || mirror == n + m) return closed_count_ee_central(n, m);
            if (l == n + m + 1 || mirror == n + m + 1) return closed_count_ee_second(n, m);
        }
    } else if (!ne && !me) {
        long n = (N - 1) / 2, m = (M + 1) / 2;
        if (m >= 1) {
            if (l == n + m || mirror == n + m) return closed_count_oo_central(n, m);
            if (n >= 1 && (l == n + m + 1 || mirror == n + m + 1)) return closed_count_oo_second(n, m);
        }
    } else if (ne && !me) {
        long n = N / 2, m = (M + 1) / 2;
        if (n >= 1 && m >= 1 && (l == n + m || mirror == n + m)) return closed_count_eo_above(n, m);
    } else {
        long n = (N + 1) / 2, m = M / 2;
        if (n >= 1 && m >= 1 && (l == n + m || mirror == n + m)) return closed_count_oe_above(n, m);
    }
    throw UnsupportedEvaluationPoint("closed_form_for: no closed form covers slot " + std::to_string(l) +
                                     " of the " + std::to_string(N) + "," + std::to_string(M) + " hexagon");
}

// ---------------------------------------------------------------------------
// shortcut formulas for the near-regular families (Propp's problem and its
// neighbors): all sides even and equal, all odd and equal, and the four
// adjacent side patterns
// ---------------------------------------------------------------------------

namespace cf {
inline Integer propp_shape(const Rational& bracket, long a, long b) {
    Rational v = bracket * Rational(macmahon(a, b, a));
    return as_count(v, "near-regular shortcut");
}
inline Rational binom_cubed_ratio(long n, long top, long bot) {
    return Q(zpow(binom(2 * n, n), 3), binom(top, bot));
}
} // namespace cf

// hexagon 2n,2n,...: slot at the upper center
inline Integer propp_even(long n) {
    if (n < 1) throw ParameterOutOfRange("propp_even: need n >= 1");
    return cf::propp_shape(Q(1, 3) - Q(1, 12) * cf::binom_cubed_ratio(n, 6 * n, 3 * n), 2 * n, 2 * n);
}

// hexagon 2n+1,2n+1,...
inline Integer propp_odd(long n) {
    if (n < 0) throw ParameterOutOfRange("propp_odd: need n >= 0");
    return cf::propp_shape(Q(1, 3) + Q(1, 3) * cf::binom_cubed_ratio(n, 6 * n + 2, 3 * n + 1), 2 * n + 1, 2 * n + 1);
}

// hexagon 2n,2n+2,...
inline Integer propp_even1(long n) {
    if (n < 1) throw ParameterOutOfRange("propp_even1: need n >= 1");
    return cf::propp_shape(Q(1, 3) - Q(10 * n + 2, 6 * n + 3) * cf::binom_cubed_ratio(n, 6 * n + 2, 3 * n + 1),
                           2 * n, 2 * n + 2);
}

// hexagon 2n+1,2n-1,...
inline Integer propp_odd1(long n) {
    if (n < 1) throw ParameterOutOfRange("propp_odd1: need n >= 1");
    return cf::propp_shape(Q(1, 3) + Q(10 * n + 3, 24 * n) * cf::binom_cubed_ratio(n, 6 * n, 3 * n), 2 * n + 1,
                           2 * n - 1);
}

// hexagon 2n+2,2n,...
inline Integer propp_even2(long n) {
    if (n < 1) throw ParameterOutOfRange("propp_even2: need n >= 1");
    return cf::propp_shape(Q(1, 3) + Rational(4) * cf::binom_cubed_ratio(n, 6 * n + 4, 3 * n + 2), 2 * n + 2, 2 * n);
}

// hexagon 2n+3,2n-1,...
inline Integer propp_odd2(long n) {
    if (n < 1) throw ParameterOutOfRange("propp_odd2: need n >= 1");
    Rational coef = Q(2 * (6 * n * n + 9 * n + 2), (n + 1) * (n + 1));
    return cf::propp_shape(Q(1, 3) + coef * cf::binom_cubed_ratio(n, 6 * n + 4, 3 * n + 2), 2 * n + 3, 2 * n - 1);
}

} // namespace lozenge
