// Acceptance gate: eleven criteria, one line each, exit nonzero when any
// fails.  Every criterion pits an independently computed value against the
// implementation under test (enumeration against determinant, closed form
// against direct determinant, certificate against partial sums), so a
// regression in either route trips the gate.

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <vector>

#include <lozenge/lozenge.hpp>

using namespace lozenge;

namespace {

int failures = 0;

void criterion(const char* name, const std::function<bool()>& body) {
    bool ok = false;
    const char* note = nullptr;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    if (ok) {
        std::printf("PASS - %s\n", name);
    } else {
        ++failures;
        if (note)
            std::printf("FAIL - %s (exception: %s)\n", name, note);
        else
            std::printf("FAIL - %s\n", name);
    }
    std::fflush(stdout);
}

Rational rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Q(num(rng), den(rng));
}

Rational abs_rat(const Rational& r) { return r < 0 ? -r : r; }

} // namespace

int main() {
    criterion("determinant slot counts equal exhaustive enumeration for all hexagons with N+M <= 7", [] {
        for (long N = 1; N <= 6; ++N)
            for (long M = 0; N + M <= 7; ++M)
                for (long l = 0; l < N + M; ++l)
                    if (count_fixed_rhombus(N, M, l) != oracle::count_with_axis_rhombus(N, M, l)) return false;
        return true;
    });

    criterion("six closed-form families equal the determinant count at the mapped slot for n, m <= 4", [] {
        for (long n = 1; n <= 4; ++n)
            for (long m = 1; m <= 4; ++m) {
                if (closed_count_ee_central(n, m) != count_fixed_rhombus(2 * n, 2 * m, n + m)) return false;
                if (closed_count_oo_central(n, m) != count_fixed_rhombus(2 * n + 1, 2 * m - 1, n + m)) return false;
                if (closed_count_eo_above(n, m) != count_fixed_rhombus(2 * n, 2 * m - 1, n + m)) return false;
                if (closed_count_oe_above(n, m) != count_fixed_rhombus(2 * n - 1, 2 * m, n + m)) return false;
                if (closed_count_ee_second(n, m) != count_fixed_rhombus(2 * n, 2 * m, n + m + 1)) return false;
                if (closed_count_oo_second(n, m) != count_fixed_rhombus(2 * n + 1, 2 * m - 1, n + m + 1)) return false;
            }
        return true;
    });

    criterion("near-regular shortcut formulas equal the general closed forms for n <= 5", [] {
        if (propp_even(1) != 6 || propp_odd(0) != 1) return false;
        for (long n = 0; n <= 5; ++n)
            if (propp_odd(n) != closed_count_oo_central(n, n + 1)) return false;
        for (long n = 1; n <= 5; ++n) {
            if (propp_even(n) != closed_count_ee_central(n, n)) return false;
            if (propp_even1(n) != closed_count_ee_central(n, n + 1)) return false;
            if (propp_odd1(n) != closed_count_oo_central(n, n)) return false;
            if (propp_even2(n) != closed_count_ee_central(n + 1, n)) return false;
            if (propp_odd2(n) != closed_count_oo_central(n + 1, n)) return false;
        }
        return true;
    });

    criterion("Bernoulli-weight Hankel closed form equals the umbral determinant for n <= 6", [] {
        if (hankel_bernoulli_closed(1, 1, 1, 1, 1) != Q(1, 6)) return false;
        if (hankel_bernoulli_closed(1, 1, 0, 0, 2) != Q(-1, 12)) return false;
        for (long a = 1; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b)
                for (long c = 0; c <= 3; ++c)
                    for (long d = 0; d <= 3; ++d)
                        for (long n = 1; n <= 6; ++n)
                            if (hankel_bernoulli_closed(a, b, c, d, n) != hankel_bernoulli_direct(a, b, c, d, n))
                                return false;
        return true;
    });

    criterion("extra Bernoulli determinant: closed form for n <= 8 and minor decomposition for n <= 5", [] {
        if (extra_bernoulli_closed(1) != Q(13, 6)) return false;
        for (long n = 1; n <= 8; ++n)
            if (extra_bernoulli_direct(n) != extra_bernoulli_closed(n)) return false;
        for (long n = 1; n <= 5; ++n)
            if (!verify_extra_decomposition(n)) return false;
        return true;
    });

    criterion("alternating binomial-harmonic identity and both partial evaluations for n <= 30", [] {
        if (lemma_weird_lhs(0) != 0 || lemma_weird_lhs(1) != -5) return false;
        for (long n = 0; n <= 30; ++n) {
            if (lemma_weird_lhs(n) != lemma_weird_rhs(n)) return false;
            if (lemma_weird_line1(n) != lemma_weird_line1_closed(n)) return false;
            if (lemma_weird_line2(n) != lemma_weird_line2_closed(n)) return false;
        }
        return true;
    });

    criterion("factorial ladders for e <= 6 and reflection symmetry of the power-sum determinant", [] {
        for (long e = 1; e <= 6; ++e)
            if (powersum_det(e, e, 2 * e - 1) != superfactorial_sq(2 * e - 1)) return false;
        for (long e = 2; e <= 6; ++e)
            if (powersum_det(e, e - 1, 2 * e - 2) != superfactorial_sq(2 * e - 2)) return false;
        for (long e = 3; e <= 6; ++e)
            if (powersum_det(e, e - 2, 2 * e - 3) != superfactorial_sq(2 * e - 3)) return false;
        for (long n = 1; n <= 4; ++n)
            for (long N = 1; N <= 5; ++N)
                if (!powersum_det_reflection_check(n, N)) return false;
        return true;
    });

    criterion("Hahn recurrence, parameter-swap symmetry, J-fraction Hankels, and the derivative-array identity", [] {
        const std::vector<HahnParams> tuples{
            {Rational(1), Rational(1), Rational(1), Rational(1)},
            {Rational(2), Rational(2), Rational(1), Rational(1)},
            {Rational(1), Rational(2), Rational(2), Rational(2)},
            {Rational(2), Rational(2), Rational(0), Rational(1)},
        };
        PolyQi x = PolyQi::monomial(1, GaussianRational(1));
        for (const HahnParams& p : tuples) {
            for (long n = 0; n <= 6; ++n) {
                auto [A, B] = chahn_recurrence_coeffs(p, n);
                PolyQi rhs = (x - PolyQi(A)) * chahn_poly(p, n);
                if (n >= 1) rhs += PolyQi(B) * chahn_poly(p, n - 1);
                if (chahn_poly(p, n + 1) != rhs) return false;
                HahnParams q{p.c, p.d, p.a, p.b};
                PolyQi sym = chahn_poly(q, n).reflect();
                if (n % 2) sym = PolyQi(GaussianRational(Rational(-1))) * sym;
                if (chahn_poly(p, n) != sym) return false;
            }
            MomentSequence mu = chahn_moment_sequence(p);
            JFraction jf = jfraction_from_moments(mu, 5);
            for (long n = 0; n <= 5; ++n)
                if (hankel_via_jfraction(jf, n) != hankel_det(mu, n, 0)) return false;
        }
        // the configuration feeding the extra-determinant decomposition
        auto lam = [](long k) { return GaussianRational(lambda_bernoulli(k + 2)); };
        if (!leclerc_check(lam, 2, 2, Rational(0))) return false;
        // randomized instances
        std::mt19937 rng(996633);
        std::uniform_int_distribution<long> val(-3, 3);
        const std::vector<Rational> xs{Rational(0), Rational(1), Rational(-2)};
        int done = 0, attempts = 0;
        while (done < 20 && attempts < 1000) {
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
        return done == 20;
    });

    criterion("Bernoulli-polynomial Hankel determinant equals its closed forms at x = -1, -1/2, 1/2 for N <= 6", [] {
        if (bernoulli_poly_hankel_closed(1, Q(-1, 2)) != Q(11, 12)) return false;
        if (bernoulli_poly_hankel_closed(1, Q(1, 2)) != Q(-1, 12)) return false;
        for (const Rational& x : std::vector<Rational>{Rational(-1), Q(-1, 2), Q(1, 2)})
            for (long N = 1; N <= 6; ++N)
                if (bernoulli_poly_hankel(N, x) != bernoulli_poly_hankel_closed(N, x)) return false;
        return true;
    });

    criterion("hypergeometric battery: randomized summation identities and the certificate recurrence", [] {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<long> ns(0, 4);
        int done = 0, attempts = 0;
        while (done < 10 && attempts < 300) {
            ++attempts;
            try {
                if (!chu_vandermonde_check(rand_rat(rng), rand_rat(rng), ns(rng))) return false;
                ++done;
            } catch (const LozengeError&) {
            }
        }
        if (done < 10) return false;
        std::mt19937 rng2(515151);
        done = 0;
        attempts = 0;
        while (done < 10 && attempts < 1000) {
            ++attempts;
            Rational a = rand_rat(rng2), b = rand_rat(rng2), c = rand_rat(rng2), d = rand_rat(rng2),
                     e = rand_rat(rng2);
            long N = ns(rng2);
            if (!whipple_admissible(a, b, c, d, e, N)) continue;
            if (!whipple_check(a, b, c, d, e, N)) return false;
            ++done;
        }
        if (done < 10) return false;
        std::mt19937 rng3(616161);
        done = 0;
        attempts = 0;
        while (done < 10 && attempts < 300) {
            ++attempts;
            Rational a = rand_rat(rng3), c = rand_rat(rng3), z = rand_rat(rng3);
            if (z == 0) continue;
            try {
                if (!transform_checks(a, c, ns(rng3), z)) return false;
                ++done;
            } catch (const LozengeError&) {
            }
        }
        if (done < 10) return false;
        return wz_certificate_check(6);
    });

    criterion("central-slot proportion approaches 1/3 monotonically and is within 0.02 at side 20", [] {
        Rational prev(-1);
        Rational last;
        for (long side = 4; side <= 20; side += 4) {
            Rational dev = abs_rat(axis_probability(side, side, side) - Q(1, 3));
            if (prev >= 0 && !(dev < prev)) return false;
            prev = dev;
            last = dev;
        }
        return last < Q(1, 50);
    });

    if (failures > 0) {
        std::printf("%d of 11 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
