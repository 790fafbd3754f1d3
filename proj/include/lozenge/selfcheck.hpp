#pragma once

// Named verification suites behind the command line `verify` subcommand.
// Each check is deterministic (randomized checks use fixed seeds), exact
// unless stated otherwise, and sized to finish in seconds.

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lozenge.hpp"

namespace lozenge {

struct CheckResult {
    std::string name;
    bool pass;
};

namespace detail {

// run one named check; any escaped exception counts as a failure
inline void check(std::vector<CheckResult>& out, const std::string& name,
                  const std::function<bool()>& body) {
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception&) {
        ok = false;
    }
    out.push_back({name, ok});
}

template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc(0);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<T>> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        T term = m[0][c] * cofactor_det(sub);
        if (sign < 0) term = -term;
        acc += term;
        sign = -sign;
    }
    return acc;
}

inline const std::vector<std::pair<long, long>>& small_hexagons() {
    static const std::vector<std::pair<long, long>> v{{1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}};
    return v;
}

// all N-subsets of {0, .., pool-1}
inline std::vector<std::vector<long>> subsets_of_size(long pool, long N) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long from) {
        if (static_cast<long>(cur.size()) == N) {
            out.push_back(cur);
            return;
        }
        for (long v = from; v < pool; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline const std::vector<HahnParams>& chahn_tuples() {
    static const std::vector<HahnParams> v{
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(2), Rational(2), Rational(1), Rational(1)},
        {Rational(1), Rational(2), Rational(2), Rational(2)},
        {Rational(2), Rational(2), Rational(0), Rational(1)},
    };
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// tilings: counts, oracle agreement, closed forms, near-regular shortcuts
// ---------------------------------------------------------------------------
inline std::vector<CheckResult> selfcheck_tilings() {
    std::vector<CheckResult> out;

    detail::check(out, "macmahon-anchors", [] {
        return macmahon(1, 1, 1) == 2 && macmahon(2, 2, 2) == 20 && macmahon(3, 2, 3) == 175 &&
               macmahon(5, 7, 0) == 1;
    });

    detail::check(out, "oracle-total-matches-macmahon", [] {
        for (long N = 1; N <= 5; ++N)
            for (long M = 1; N + M <= 6; ++M)
                if (oracle::count_all(N, M) != macmahon(N, M, N)) return false;
        return true;
    });

    detail::check(out, "axis-count-matches-oracle", [] {
        for (const auto& pr : detail::small_hexagons()) {
            long N = pr.first, M = pr.second;
            for (long l = 0; l < N + M; ++l)
                if (count_fixed_rhombus(N, M, l) != oracle::count_with_axis_rhombus(N, M, l)) return false;
        }
        return true;
    });

    detail::check(out, "axis-counts-sum-to-n-times-total", [] {
        for (long N = 1; N <= 6; ++N)
            for (long M = 1; N + M <= 7; ++M) {
                Integer s = 0;
                for (long l = 0; l < N + M; ++l) s += count_fixed_rhombus(N, M, l);
                if (s != Integer(N) * macmahon(N, M, N)) return false;
            }
        return true;
    });

    detail::check(out, "axis-count-mirror-symmetry", [] {
        for (const auto& pr : std::vector<std::pair<long, long>>{{2, 3}, {3, 4}, {4, 3}}) {
            long N = pr.first, M = pr.second;
            for (long l = 0; l < N + M; ++l)
                if (count_fixed_rhombus(N, M, l) != count_fixed_rhombus(N, M, N + M - 1 - l)) return false;
        }
        return true;
    });

    detail::check(out, "tilings-occupy-exactly-n-axis-slots", [] {
        for (const auto& pr : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {2, 3}}) {
            long N = pr.first, M = pr.second;
            oracle::Board b = oracle::Board::hexagon(N, M);
            std::vector<oracle::Lozenge> slots;
            for (long l = 0; l < b.num_axis_slots(); ++l) slots.push_back(b.axis_slot(l));
            bool ok = true;
            oracle::count_tilings(b, {}, {}, oracle::kDefaultBudget,
                                  [&](const std::vector<oracle::Lozenge>& t) {
                                      long hit = 0;
                                      for (const auto& lz : t)
                                          for (const auto& s : slots)
                                              if (lz == s) ++hit;
                                      if (hit != N) ok = false;
                                  });
            if (!ok) return false;
        }
        return true;
    });

    detail::check(out, "closed-forms-match-determinant", [] {
        for (long n = 1; n <= 3; ++n)
            for (long m = 1; m <= 3; ++m) {
                if (closed_count_ee_central(n, m) != count_fixed_rhombus(2 * n, 2 * m, n + m)) return false;
                if (closed_count_oo_central(n, m) != count_fixed_rhombus(2 * n + 1, 2 * m - 1, n + m)) return false;
                if (closed_count_eo_above(n, m) != count_fixed_rhombus(2 * n, 2 * m - 1, n + m)) return false;
                if (closed_count_oe_above(n, m) != count_fixed_rhombus(2 * n - 1, 2 * m, n + m)) return false;
                if (closed_count_ee_second(n, m) != count_fixed_rhombus(2 * n, 2 * m, n + m + 1)) return false;
                if (closed_count_oo_second(n, m) != count_fixed_rhombus(2 * n + 1, 2 * m - 1, n + m + 1)) return false;
            }
        for (long m = 1; m <= 3; ++m)
            if (closed_count_oo_central(0, m) != count_fixed_rhombus(1, 2 * m - 1, m)) return false;
        return true;
    });

    detail::check(out, "closed-form-dispatch", [] {
        // dispatch must agree with the direct evaluators, on both mirror sides
        if (closed_form_for(4, 2, 3) != closed_count_ee_central(2, 1)) return false;
        if (closed_form_for(4, 2, 2) != closed_count_ee_central(2, 1)) return false;
        if (closed_form_for(4, 2, 4) != closed_count_ee_second(2, 1)) return false;
        if (closed_form_for(4, 2, 1) != closed_count_ee_second(2, 1)) return false;
        if (closed_form_for(3, 3, 3) != closed_count_oo_central(1, 2)) return false;
        if (closed_form_for(4, 3, 4) != closed_count_eo_above(2, 2)) return false;
        if (closed_form_for(3, 4, 2) != closed_count_oe_above(2, 2)) return false;
        try {
            closed_form_for(4, 2, 0);
            return false;
        } catch (const UnsupportedEvaluationPoint&) {
        }
        return true;
    });

    detail::check(out, "near-regular-shortcut-anchors", [] {
        return propp_even(1) == 6 && propp_odd(0) == 1;
    });

    detail::check(out, "near-regular-shortcuts-match-closed-forms", [] {
        for (long n = 1; n <= 3; ++n) {
            if (propp_even(n) != closed_count_ee_central(n, n)) return false;
            if (propp_even1(n) != closed_count_ee_central(n, n + 1)) return false;
            if (propp_even2(n) != closed_count_ee_central(n + 1, n)) return false;
            if (propp_odd1(n) != closed_count_oo_central(n, n)) return false;
            if (propp_odd2(n) != closed_count_oo_central(n + 1, n)) return false;
        }
        for (long n = 0; n <= 2; ++n)
            if (propp_odd(n) != closed_count_oo_central(n, n + 1)) return false;
        return true;
    });

    detail::check(out, "subset-count-matches-oracle", [] {
        for (long size = 2; size <= 4; ++size)
            for (const auto& L : detail::subsets_of_size(4, size))
                if (count_axis_subset(2, 2, L) != oracle::count_axis_subset(2, 2, L)) return false;
        return count_axis_subset(2, 3, {0, 1, 3}) == oracle::count_axis_subset(2, 3, {0, 1, 3});
    });

    detail::check(out, "subset-complement-rule", [] {
        for (const auto& pr : std::vector<std::pair<long, long>>{{2, 3}, {3, 3}}) {
            long N = pr.first, M = pr.second;
            for (long l = 0; l < N + M; ++l) {
                std::vector<long> rest;
                for (long s = 0; s < N + M; ++s)
                    if (s != l) rest.push_back(s);
                if (count_axis_subset(N, M, rest) != macmahon(N, M, N) - count_fixed_rhombus(N, M, l))
                    return false;
            }
            std::vector<long> all;
            for (long s = 0; s < N + M; ++s) all.push_back(s);
            if (count_axis_subset(N, M, all) != macmahon(N, M, N)) return false;
        }
        return true;
    });

    detail::check(out, "dented-count-matches-product-formula", [] {
        for (const auto& pr : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}}) {
            long N = pr.first, M = pr.second;
            for (const auto& dents : detail::subsets_of_size(N + M, N))
                if (oracle::count_dented(N, M, dents) != count_dented_trapezoid(N, M, dents)) return false;
        }
        if (count_dented_trapezoid(4, 3, {0, 1, 4, 5}) != 20) return false;
        if (oracle::count_dented(4, 3, {0, 1, 4, 5}) != 20) return false;
        return count_dented_trapezoid(3, 4, {0, 1, 2}) == 1;
    });

    detail::check(out, "dented-halves-square-to-hexagon", [] {
        for (const auto& pr : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}}) {
            long N = pr.first, M = pr.second;
            Integer s = 0;
            for (const auto& dents : detail::subsets_of_size(N + M, N)) {
                Integer half = count_dented_trapezoid(N, M, dents);
                s += half * half;
            }
            if (s != macmahon(N, M, N)) return false;
        }
        return true;
    });

    detail::check(out, "arcsine-prediction-endpoints", [] {
        return std::abs(arcsine_prediction(0.0) - 1.0) < 1e-12 &&
               std::abs(arcsine_prediction(1.0) - 1.0 / 3.0) < 1e-12 &&
               arcsine_prediction(2.0) < arcsine_prediction(1.0);
    });

    return out;
}

// ---------------------------------------------------------------------------
// determinants: kernel behavior, power-sum determinant families, minors
// ---------------------------------------------------------------------------
inline std::vector<CheckResult> selfcheck_determinants() {
    std::vector<CheckResult> out;

    detail::check(out, "determinant-anchors", [] {
        Matrix<Integer> id = Matrix<Integer>::from(3, 3, [](long i, long j) { return Integer(i == j); });
        if (id.det() != 1) return false;
        Matrix<Integer> rep = Matrix<Integer>::from(3, 3, [](long i, long j) { return Integer(i / 2 + j); });
        if (rep.det() != 0) return false; // rows 0 and 1 coincide
        std::vector<std::vector<long>> d = {{6, -8, 18}, {-8, 18, -32}, {18, -32, 66}};
        Matrix<Integer> m = Matrix<Integer>::from(
            3, 3, [&](long i, long j) { return Integer(d[static_cast<size_t>(i)][static_cast<size_t>(j)]); });
        return m.det() == 144 && Matrix<Integer>(0, 0).det() == 1;
    });

    detail::check(out, "determinant-matches-cofactor-expansion", [] {
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<long> val(-9, 9);
        for (int trial = 0; trial < 8; ++trial) {
            long n = 1 + trial % 4;
            std::vector<std::vector<Integer>> grid(static_cast<size_t>(n));
            for (auto& row : grid)
                for (long j = 0; j < n; ++j) row.push_back(Integer(val(rng)));
            Matrix<Integer> m = Matrix<Integer>::from(
                n, n, [&](long i, long j) { return grid[static_cast<size_t>(i)][static_cast<size_t>(j)]; });
            if (m.det() != detail::cofactor_det(grid)) return false;
        }
        std::uniform_int_distribution<long> den(1, 5);
        for (int trial = 0; trial < 6; ++trial) {
            long n = 2 + trial % 2;
            std::vector<std::vector<Rational>> grid(static_cast<size_t>(n));
            for (auto& row : grid)
                for (long j = 0; j < n; ++j) row.push_back(Q(val(rng), den(rng)));
            Matrix<Rational> m = Matrix<Rational>::from(
                n, n, [&](long i, long j) { return grid[static_cast<size_t>(i)][static_cast<size_t>(j)]; });
            if (m.det() != detail::cofactor_det(grid)) return false;
        }
        return true;
    });

    detail::check(out, "determinant-alternating-multilinear", [] {
        std::mt19937 rng(777001);
        std::uniform_int_distribution<long> val(-6, 6);
        for (int trial = 0; trial < 6; ++trial) {
            long n = 3;
            std::vector<std::vector<Integer>> g(3);
            for (auto& row : g)
                for (long j = 0; j < n; ++j) row.push_back(Integer(val(rng)));
            auto det_of = [&](const std::vector<std::vector<Integer>>& grid) -> Integer {
                return Matrix<Integer>::from(n, n, [&](long i, long j) {
                           return grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
                       }).det();
            };
            Integer base = det_of(g);
            auto swapped = g;
            std::swap(swapped[0], swapped[2]);
            if (det_of(swapped) != -base) return false;
            auto scaled = g;
            for (auto& e : scaled[1]) e *= 5;
            if (det_of(scaled) != Integer(5) * base) return false;
            auto sheared = g; // add 3 * row 0 to row 2: determinant unchanged
            for (long j = 0; j < n; ++j) sheared[2][static_cast<size_t>(j)] += Integer(3) * g[0][static_cast<size_t>(j)];
            if (det_of(sheared) != base) return false;
        }
        return true;
    });

    detail::check(out, "power-sum-determinant-anchors", [] {
        return powersum_det(1, 1, 1) == 1 && powersum_det(2, 2, 1) == 6 && powersum_det(2, 1, 2) == 4 &&
               powersum_det(3, 1, 3) == 144 && powersum_det(2, 2, 3) == 144 && powersum_det(5, 3, 0) == 1;
    });

    detail::check(out, "factorial-ladder-diagonal", [] {
        for (long e = 1; e <= 6; ++e)
            if (powersum_det(e, e, 2 * e - 1) != superfactorial_sq(2 * e - 1)) return false;
        return true;
    });

    detail::check(out, "factorial-ladder-subdiagonal", [] {
        for (long e = 2; e <= 6; ++e)
            if (powersum_det(e, e - 1, 2 * e - 2) != superfactorial_sq(2 * e - 2)) return false;
        return true;
    });

    detail::check(out, "factorial-ladder-subsubdiagonal", [] {
        for (long e = 3; e <= 6; ++e)
            if (powersum_det(e, e - 2, 2 * e - 3) != superfactorial_sq(2 * e - 3)) return false;
        return true;
    });

    detail::check(out, "alternating-power-base-case", [] {
        Matrix<Integer> m = Matrix<Integer>::from(2, 2, [](long i, long j) -> Integer {
            long e = (i + 1) + (j + 1);
            return zpow(Integer(-1), e) + zpow(Integer(-2), e);
        });
        return m.det() == 4;
    });

    detail::check(out, "extended-determinant-reflection", [] {
        for (long n = 0; n <= 4; ++n)
            for (long N = 1; N <= 5; ++N)
                if (!powersum_det_reflection_check(n, N)) return false;
        return true;
    });

    detail::check(out, "minor-determinant-conventions", [] {
        Matrix<Integer> m = Matrix<Integer>::from(2, 2, [](long i, long j) { return Integer(1 + 2 * i + j); });
        if (m.minor_det({}, {}) != m.det()) return false;
        if (m.minor_det({0}, {1}) != 3) return false; // keep row 1, col 0
        Matrix<Integer> one = Matrix<Integer>::from(1, 1, [](long, long) { return Integer(7); });
        return one.minor_det({0}, {0}) == 0;
    });

    detail::check(out, "hankel-determinant-anchors", [] {
        auto bern = moments_from(std::vector<Rational>{bernoulli(0), bernoulli(1), bernoulli(2)});
        if (hankel_det(bern, 2, 0) != GaussianRational(Q(-1, 12))) return false;
        if (hankel_det(bern, 0, 0) != GaussianRational(1)) return false;
        HahnParams p{Rational(1), Rational(1), Rational(1), Rational(1)};
        auto mu = chahn_moment_sequence(p);
        return hankel_det(mu, 2, 0) == GaussianRational(Q(-1, 180));
    });

    detail::check(out, "closed-product-forms-match-determinants", [] {
        for (long N = 2; N <= 4; ++N)
            for (long n = (N + 1) / 2 + 1; n <= 5; ++n)
                if (diag_det_closed(n, N) != Rational(powersum_det(n, n, N))) return false;
        for (long m = 2; m <= 2; ++m)
            for (long n = m + 2; n <= 6; ++n)
                if (subdiag_det_closed_odd(n, m) != Rational(powersum_det(n, n - 1, 2 * m - 1))) return false;
        for (long m = 1; m <= 2; ++m)
            for (long n = m + 2; n <= 5; ++n)
                if (subdiag_det_closed_even(n, m) != Rational(powersum_det(n, n - 1, 2 * m))) return false;
        for (long n = 5; n <= 6; ++n) {
            if (subsubdiag_det_closed_odd(n, 1) != Rational(powersum_det(n, n - 2, 3))) return false;
            if (subsubdiag_det_closed_even(n, 1) != Rational(powersum_det(n, n - 2, 2))) return false;
        }
        return true;
    });

    return out;
}

// ---------------------------------------------------------------------------
// hankel: Bernoulli-weight Hankel determinants and their closed forms
// ---------------------------------------------------------------------------
inline std::vector<CheckResult> selfcheck_hankel() {
    std::vector<CheckResult> out;

    detail::check(out, "bernoulli-number-anchors", [] {
        const std::vector<Rational> table{Rational(1), Q(-1, 2),  Q(1, 6),  Rational(0), Q(-1, 30),
                                          Rational(0), Q(1, 42),  Rational(0), Q(-1, 30), Rational(0),
                                          Q(5, 66),    Rational(0), Q(-691, 2730)};
        for (size_t k = 0; k < table.size(); ++k)
            if (bernoulli(static_cast<long>(k)) != table[k]) return false;
        return true;
    });

    detail::check(out, "hankel-bernoulli-closed-matches-direct", [] {
        for (long a = 1; a <= 2; ++a)
            for (long b = 1; b <= 2; ++b)
                for (long c = 0; c <= 2; ++c)
                    for (long d = 0; d <= 2; ++d)
                        for (long n = 1; n <= 4; ++n)
                            if (hankel_bernoulli_closed(a, b, c, d, n) != hankel_bernoulli_direct(a, b, c, d, n))
                                return false;
        return true;
    });

    detail::check(out, "hankel-bernoulli-anchors", [] {
        if (hankel_bernoulli_closed(1, 1, 1, 1, 1) != Q(1, 6)) return false;
        if (hankel_bernoulli_closed(1, 1, 0, 0, 2) != Q(-1, 12)) return false;
        // both routes agree here; the short pole-cancellation form of this
        // entry is the one place the route equality is easy to get wrong
        return hankel_bernoulli_direct(2, 2, 0, 0, 1) == hankel_bernoulli_closed(2, 2, 0, 0, 1) &&
               hankel_bernoulli_direct(2, 2, 0, 0, 1) == Q(1, 6);
    });

    detail::check(out, "twisted-moment-hankel-sign", [] {
        for (const auto& p : detail::chahn_tuples())
            for (long n = 0; n <= 4; ++n) {
                GaussianRational real_h = hankel_det(chahn_moment_sequence(p), n, 0);
                GaussianRational twisted =
                    hankel_det([&p](long k) { return chahn_moments_twisted(p, k); }, n, 0);
                if (twisted != GaussianRational(Rational(parity_sign(n * (n - 1) / 2))) * real_h) return false;
            }
        return true;
    });

    detail::check(out, "extra-determinant-closed-matches-direct", [] {
        for (long n = 1; n <= 5; ++n)
            if (extra_bernoulli_direct(n) != extra_bernoulli_closed(n)) return false;
        return extra_bernoulli_closed(1) == Q(13, 6);
    });

    detail::check(out, "extra-determinant-minor-decomposition", [] {
        for (long n = 1; n <= 4; ++n)
            if (!verify_extra_decomposition(n)) return false;
        return true;
    });

    detail::check(out, "bernoulli-polynomial-hankel-closed-matches-direct", [] {
        for (const Rational& x : {Rational(-1), Q(-1, 2), Q(1, 2)})
            for (long N = 1; N <= 4; ++N)
                if (bernoulli_poly_hankel(N, x) != bernoulli_poly_hankel_closed(N, x)) return false;
        return true;
    });

    detail::check(out, "bernoulli-polynomial-hankel-anchors", [] {
        return bernoulli_poly_hankel(1, Rational(0)) == Q(1, 6) &&
               bernoulli_poly_hankel(1, Rational(-1)) == Q(13, 6) &&
               bernoulli_poly_hankel_closed(1, Q(-1, 2)) == Q(11, 12) &&
               bernoulli_poly_hankel_closed(1, Q(1, 2)) == Q(-1, 12);
    });

    detail::check(out, "residual-fit-two-index", [] {
        ConjectureReport r22 = conjecture_explore(2, 2, 6);
        if (!r22.fitted || !r22.degree_bound_holds) return false;
        if (r22.numerator != PolyQ(std::vector<Rational>{Rational(1), Rational(2), Rational(5), Rational(4),
                                                         Rational(1)}))
            return false;
        ConjectureReport r11 = conjecture_explore(1, 1, 6);
        return r11.fitted && r11.numerator == PolyQ(Rational(1));
    });

    detail::check(out, "residual-fit-three-index", [] {
        ConjectureReport r = conjecture_explore(1, 1, 1, 6);
        if (!r.fitted || r.numerator_degree > 0) return false;
        if (r.numerator != PolyQ(Rational(1)) || r.denominator != PolyQ(Rational(1))) return false;
        ConjectureReport r221 = conjecture_explore(2, 2, 1, 6);
        return r221.fitted && r221.numerator == PolyQ(Rational(1)) && r221.denominator == PolyQ(Rational(1));
    });

    return out;
}

// ---------------------------------------------------------------------------
// orthopoly: formal orthogonality, J-fractions, continuous Hahn family
// ---------------------------------------------------------------------------
inline std::vector<CheckResult> selfcheck_orthopoly() {
    std::vector<CheckResult> out;

    auto bernoulli_moments = [](long k) { return GaussianRational(bernoulli(k)); };

    detail::check(out, "orthogonal-polynomial-anchors", [&] {
        PolyQi x = PolyQi::monomial(1, GaussianRational(1));
        if (orth_poly_from_moments(bernoulli_moments, 0) != PolyQi(GaussianRational(1))) return false;
        if (orth_poly_from_moments(bernoulli_moments, 1) != x + PolyQi(GaussianRational(Q(1, 2)))) return false;
        HahnParams p{Rational(1), Rational(1), Rational(1), Rational(1)};
        auto mu = chahn_moment_sequence(p);
        if (orth_poly_from_moments(mu, 1) != x) return false;
        return orth_poly_from_moments(mu, 2) == x * x + PolyQi(GaussianRational(Q(1, 5)));
    });

    detail::check(out, "jfraction-anchors", [&] {
        JFraction jb = jfraction_from_moments(bernoulli_moments, 1);
        if (jb.a[0] != GaussianRational(Q(1, 2))) return false;
        HahnParams p{Rational(1), Rational(1), Rational(1), Rational(1)};
        JFraction jc = jfraction_from_moments(chahn_moment_sequence(p), 2);
        if (jc.b[1] != GaussianRational(Q(-1, 5))) return false;
        auto ones = [](long) { return GaussianRational(1); };
        JFraction j1 = jfraction_from_moments(ones, 1);
        if (j1.a[0] != GaussianRational(Rational(-1))) return false;
        try {
            jfraction_from_moments(ones, 2);
            return false;
        } catch (const SingularMomentMatrix&) {
        }
        return true;
    });

    detail::check(out, "jfraction-hankel-product-matches-direct", [&] {
        std::vector<MomentSequence> seqs{bernoulli_moments};
        for (const auto& p : detail::chahn_tuples()) seqs.push_back(chahn_moment_sequence(p));
        for (const auto& mu : seqs) {
            JFraction jf = jfraction_from_moments(mu, 4);
            for (long n = 0; n <= 4; ++n)
                if (hankel_via_jfraction(jf, n) != hankel_det(mu, n, 0)) return false;
        }
        return true;
    });

    detail::check(out, "favard-round-trip", [&] {
        std::vector<MomentSequence> seqs{bernoulli_moments,
                                         chahn_moment_sequence(detail::chahn_tuples()[0]),
                                         chahn_moment_sequence(detail::chahn_tuples()[3])};
        for (const auto& mu : seqs) {
            JFraction jf = jfraction_from_moments(mu, 4);
            std::vector<PolyQi> rebuilt = polys_from_jfraction(jf, 4);
            for (long n = 0; n <= 4; ++n)
                if (rebuilt[static_cast<size_t>(n)] != orth_poly_from_moments(mu, n)) return false;
        }
        return true;
    });

    detail::check(out, "bordered-polynomial-normalization", [&] {
        std::vector<MomentSequence> seqs{bernoulli_moments,
                                         chahn_moment_sequence(detail::chahn_tuples()[0])};
        for (const auto& mu : seqs)
            for (long n = 0; n <= 4; ++n) {
                GaussianRational dn = hankel_det(mu, n, 0);
                if (bordered_orth_poly(mu, n) != PolyQi(dn) * orth_poly_from_moments(mu, n)) return false;
            }
        return true;
    });

    detail::check(out, "chahn-polynomial-anchors", [] {
        PolyQi x = PolyQi::monomial(1, GaussianRational(1));
        HahnParams p1{Rational(1), Rational(1), Rational(1), Rational(1)};
        if (chahn_poly(p1, 0) != PolyQi(GaussianRational(1))) return false;
        if (chahn_poly(p1, 1) != x) return false;
        if (chahn_poly(p1, 2) != x * x - PolyQi(GaussianRational(Q(1, 5)))) return false;
        if (chahn_recurrence_coeffs(p1, 1).second != GaussianRational(Q(-1, 5))) return false;
        for (long n = 0; n <= 3; ++n)
            if (chahn_recurrence_coeffs(p1, n).first != GaussianRational(0)) return false;
        HahnParams p2{Rational(2), Rational(2), Rational(0), Rational(1)};
        return chahn_recurrence_coeffs(p2, 1).first == GaussianRational(Rational(0), Q(27, 35));
    });

    detail::check(out, "chahn-three-term-recurrence", [] {
        PolyQi x = PolyQi::monomial(1, GaussianRational(1));
        for (const auto& p : detail::chahn_tuples())
            for (long n = 0; n <= 5; ++n) {
                auto [A, B] = chahn_recurrence_coeffs(p, n);
                PolyQi lhs = chahn_poly(p, n + 1);
                PolyQi rhs = (x - PolyQi(A)) * chahn_poly(p, n);
                if (n >= 1) rhs += PolyQi(B) * chahn_poly(p, n - 1);
                if (lhs != rhs) return false;
            }
        return true;
    });

    detail::check(out, "chahn-parameter-swap-symmetry", [] {
        for (const auto& p : detail::chahn_tuples()) {
            HahnParams q{p.c, p.d, p.a, p.b};
            for (long n = 0; n <= 5; ++n) {
                PolyQi lhs = chahn_poly(p, n);
                PolyQi rhs = chahn_poly(q, n).reflect();
                if (n % 2) rhs = PolyQi(GaussianRational(Rational(-1))) * rhs;
                if (lhs != rhs) return false;
            }
        }
        return true;
    });

    detail::check(out, "chahn-jfraction-bridge", [] {
        GaussianRational mi(Rational(0), Rational(-1));
        for (const auto& p : std::vector<HahnParams>{detail::chahn_tuples()[0], detail::chahn_tuples()[3]}) {
            JFraction jf = jfraction_from_moments(chahn_moment_sequence(p), 4);
            for (long n = 0; n <= 3; ++n) {
                auto [A, B] = chahn_recurrence_coeffs(p, n);
                if (jf.a[static_cast<size_t>(n)] != mi * A) return false;
                if (n >= 1 && jf.b[static_cast<size_t>(n)] != B) return false;
            }
        }
        return true;
    });

    detail::check(out, "leclerc-lambda-configuration", [] {
        auto mu = [](long k) { return GaussianRational(lambda_bernoulli(k + 2)); };
        return leclerc_check(mu, 2, 2, Rational(0)) && leclerc_check(mu, 1, 1, Rational(0)) &&
               leclerc_check(mu, 1, 2, Rational(1));
    });

    detail::check(out, "leclerc-randomized", [] {
        std::mt19937 rng(424243);
        std::uniform_int_distribution<long> val(-3, 3);
        const std::vector<Rational> xs{Rational(0), Rational(1), Rational(-2)};
        int done = 0, attempts = 0;
        while (done < 8 && attempts < 400) {
            ++attempts;
            std::vector<GaussianRational> m;
            for (int k = 0; k < 14; ++k) m.emplace_back(Rational(val(rng)));
            MomentSequence mu = moments_from(m);
            long l = 1 + static_cast<long>(done) % 3, mm = 1 + (done / 3) % 2;
            bool singular = false;
            for (long s = 1; s <= l + mm; ++s)
                if (hankel_det(mu, s, 0) == GaussianRational(0)) singular = true;
            if (singular) continue;
            if (!leclerc_check(mu, l, mm, xs[static_cast<size_t>(done) % xs.size()])) return false;
            ++done;
        }
        return done == 8;
    });

    return out;
}

// ---------------------------------------------------------------------------
// lemmas: the summation lemmas and the binomial-harmonic identity
// ---------------------------------------------------------------------------
inline std::vector<CheckResult> selfcheck_lemmas() {
    std::vector<CheckResult> out;

    detail::check(out, "summation-lemma-central", [] {
        for (long n = 1; n <= 8; ++n)
            if (!verify_bracket_sum(0, n)) return false;
        return true;
    });

    detail::check(out, "summation-lemma-raised", [] {
        for (long n = 1; n <= 8; ++n)
            if (!verify_bracket_sum(1, n)) return false;
        return true;
    });

    detail::check(out, "summation-lemma-lowered", [] {
        for (long n = 2; n <= 8; ++n)
            if (!verify_bracket_sum(-1, n)) return false;
        return true;
    });

    detail::check(out, "binomial-harmonic-identity", [] {
        for (long n = 0; n <= 16; ++n)
            if (lemma_weird_lhs(n) != lemma_weird_rhs(n)) return false;
        return true;
    });

    detail::check(out, "binomial-harmonic-partial-lines", [] {
        for (long n = 0; n <= 16; ++n) {
            if (lemma_weird_line1(n) != lemma_weird_line1_closed(n)) return false;
            if (lemma_weird_line2(n) != lemma_weird_line2_closed(n)) return false;
        }
        return true;
    });

    detail::check(out, "binomial-harmonic-anchors", [] {
        return lemma_weird_lhs(0) == 0 && lemma_weird_lhs(1) == -5;
    });

    return out;
}

// ---------------------------------------------------------------------------
// hyper: terminating series, classical identities, WZ certificate
// ---------------------------------------------------------------------------
inline std::vector<CheckResult> selfcheck_hyper() {
    std::vector<CheckResult> out;

    detail::check(out, "terminating-series-basics", [] {
        if (pfq_terminating({Rational(-1), Rational(3)}, {Rational(5)}, Rational(1)) != 1 - Q(3, 5))
            return false;
        if (pfq_terminating({Rational(2), Rational(-2)}, {Rational(1)}, Rational(1)) != 0) return false;
        // empty series: no summation index survives
        return pfq_terminating({Rational(0), Rational(4)}, {Rational(7)}, Q(1, 3)) == 1;
    });

    detail::check(out, "parameter-permutation-invariance", [] {
        std::mt19937 rng(90210);
        std::uniform_int_distribution<long> num(-4, 6);
        std::uniform_int_distribution<long> den(1, 3);
        for (int trial = 0; trial < 10; ++trial) {
            Rational a = Q(num(rng), den(rng));
            Rational b = Q(num(rng), den(rng));
            Rational c = Q(std::abs(num(rng)) + 1, den(rng));
            Rational d = Q(std::abs(num(rng)) + 1, den(rng));
            Rational z = Q(num(rng) == 0 ? 1 : num(rng), den(rng));
            try {
                Rational v1 = pfq_terminating({Rational(-3), a, b}, {c, d}, z);
                Rational v2 = pfq_terminating({b, Rational(-3), a}, {d, c}, z);
                if (v1 != v2) return false;
            } catch (const ZeroDenominatorBeforeTermination&) {
                continue; // inadmissible draw; permutation claim is vacuous
            }
        }
        return true;
    });

    detail::check(out, "termination-guards", [] {
        try {
            pfq_terminating({Rational(2), Rational(-3)}, {Rational(-1)}, Rational(1));
            return false;
        } catch (const ZeroDenominatorBeforeTermination&) {
        }
        try {
            pfq_terminating({Q(1, 2), Rational(3)}, {Rational(5)}, Rational(1));
            return false;
        } catch (const NotTerminating&) {
        }
        return true;
    });

    detail::check(out, "chu-vandermonde-fixed", [] {
        return chu_vandermonde_check(Rational(1), Rational(2), 3) &&
               chu_vandermonde_check(Q(9, 4), Q(-3, 7), 0) &&
               chu_vandermonde_check(Q(5, 2), Q(7, 3), 4);
    });

    detail::check(out, "chu-vandermonde-randomized", [] {
        std::mt19937 rng(5150);
        std::uniform_int_distribution<long> num(-5, 7);
        std::uniform_int_distribution<long> den(1, 4);
        std::uniform_int_distribution<long> bigN(0, 4);
        int done = 0, attempts = 0;
        while (done < 10 && attempts < 200) {
            ++attempts;
            Rational a = Q(num(rng), den(rng));
            Rational c = Q(num(rng), den(rng));
            long N = bigN(rng);
            try {
                if (!chu_vandermonde_check(a, c, N)) return false;
            } catch (const LozengeError&) {
                continue; // (c)_N hit zero; draw again
            }
            ++done;
        }
        return done == 10;
    });

    detail::check(out, "whipple-fixed", [] {
        // the n = m = 2 instance of the very well poised series in the
        // central-proportion derivation, plus its direct value
        if (!whipple_check(Rational(2), Rational(5), Rational(-3), Rational(1), Q(7, 2), 1)) return false;
        Rational vwp = pfq_terminating(
            {Rational(2), Rational(2), Rational(5), Rational(-3), Rational(1), Q(7, 2), Rational(-1)},
            {Rational(1), Rational(-2), Rational(6), Rational(2), Q(-1, 2), Rational(4)}, Rational(1));
        if (vwp != Q(43, 8)) return false;
        return whipple_check(Q(3, 2), Rational(2), Q(1, 3), Rational(1), Rational(2), 0);
    });

    detail::check(out, "whipple-randomized", [] {
        std::mt19937 rng(31415);
        std::uniform_int_distribution<long> num(-3, 5);
        std::uniform_int_distribution<long> den(1, 3);
        std::uniform_int_distribution<long> bigN(0, 4);
        int done = 0, attempts = 0;
        while (done < 10 && attempts < 500) {
            ++attempts;
            Rational a = Q(num(rng), den(rng));
            Rational b = Q(num(rng), den(rng));
            Rational c = Q(num(rng), den(rng));
            Rational d = Q(num(rng), den(rng));
            Rational e = Q(num(rng), den(rng));
            long N = bigN(rng);
            if (!whipple_admissible(a, b, c, d, e, N)) continue;
            if (!whipple_check(a, b, c, d, e, N)) return false;
            ++done;
        }
        return done == 10;
    });

    detail::check(out, "transformation-fixed", [] {
        return transform_checks(Rational(3), Rational(1), 2, Rational(1)) &&
               transform_checks(Rational(5), Rational(1), 3, Q(1, 3)) &&
               transform_checks(Q(1, 2), Q(3, 2), 2, Q(2, 5));
    });

    detail::check(out, "transformation-randomized", [] {
        std::mt19937 rng(271828);
        std::uniform_int_distribution<long> num(-4, 6);
        std::uniform_int_distribution<long> den(1, 3);
        std::uniform_int_distribution<long> bigN(0, 4);
        int done = 0, attempts = 0;
        while (done < 10 && attempts < 500) {
            ++attempts;
            Rational a = Q(num(rng), den(rng));
            Rational c = Q(num(rng), den(rng));
            long N = bigN(rng);
            long zn = num(rng);
            if (zn == 0) zn = 2;
            Rational z = Q(zn, den(rng));
            try {
                if (!transform_checks(a, c, N, z)) return false;
            } catch (const LozengeError&) {
                continue;
            }
            ++done;
        }
        return done == 10;
    });

    detail::check(out, "wz-certificate", [] { return wz_certificate_check(5); });

    detail::check(out, "arcsin-series-float", [] {
        return arcsin_identity_check(0.25) && arcsin_identity_check(0.5) && arcsin_identity_check(0.01);
    });

    detail::check(out, "asymptotic-chain", [] {
        if (!asymptotic_chain_check()) return false;
        double lim = 2.0 * std::acos(-1.0) / (3.0 * std::sqrt(3.0));
        double dev = std::abs(asymptotic_f43(10, 10) - lim);
        return dev > 1e-3 && dev < 2e-2; // slow 1/n approach; honest size at n = 10
    });

    return out;
}

inline std::vector<CheckResult> selfcheck_all() {
    std::vector<CheckResult> out;
    for (auto fn : {selfcheck_tilings, selfcheck_determinants, selfcheck_hankel, selfcheck_orthopoly,
                    selfcheck_lemmas, selfcheck_hyper}) {
        std::vector<CheckResult> part = fn();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<CheckResult> selfcheck(const std::string& suite) {
    if (suite == "tilings") return selfcheck_tilings();
    if (suite == "determinants") return selfcheck_determinants();
    if (suite == "hankel") return selfcheck_hankel();
    if (suite == "orthopoly") return selfcheck_orthopoly();
    if (suite == "lemmas") return selfcheck_lemmas();
    if (suite == "hyper") return selfcheck_hyper();
    if (suite == "all") return selfcheck_all();
    throw ParameterOutOfRange("selfcheck: unknown suite " + suite);
}

} // namespace lozenge
