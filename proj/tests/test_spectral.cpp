#include "sobnull/fourier.hpp"
#include "sobnull/gap_sum.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace sobnull;
using namespace sobnull::sets;
using namespace sobnull::spectral;

namespace {

IntervalSet unit_interval() {
    return IntervalSet::from_intervals({{Rational(0), Rational(1)}});
}

QuadratureConfig fast_quad(double cutoff = 8192.0) {
    QuadratureConfig q;
    q.cutoff = cutoff;
    q.panel_width = 8.0 * M_PI;
    return q;
}

} // namespace

TEST_CASE("chi_hat pointwise values") {
    auto I = unit_interval();
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
    CHECK(std::abs(chi_hat(I, 0.0)) == doctest::Approx(inv_sqrt_2pi).epsilon(1e-14));
    CHECK(std::abs(chi_hat(I, 2.0 * M_PI)) == doctest::Approx(0.0).epsilon(1e-14));

    // symmetric interval [-1,1]: sqrt(2/pi) sin(xi)/xi
    auto S = IntervalSet::from_intervals({{Rational(-1), Rational(1)}});
    const double xi = M_PI / 2.0;
    CHECK(chi_hat(S, xi).real() ==
          doctest::Approx(std::sqrt(2.0 / M_PI) * (2.0 / M_PI)).epsilon(1e-14));
    CHECK(chi_hat(S, xi).imag() == doctest::Approx(0.0).epsilon(1e-15));

    // tiny-frequency stability
    CHECK(std::abs(chi_hat(I, 1e-9)) == doctest::Approx(inv_sqrt_2pi).epsilon(1e-13));
}

TEST_CASE("chi_hat is additive over disjoint unions") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(0, 255);
    for (int trial = 0; trial < 25; ++trial) {
        long a = num(rng), b = num(rng);
        if (a > b) std::swap(a, b);
        auto A = IntervalSet::from_intervals({{Rational(a, 256), Rational(b + 1, 256)}});
        auto B = IntervalSet::from_intervals({{Rational(a + 400, 256), Rational(b + 420, 256)}});
        auto U = set_union(A, B);
        for (double xi : {0.3, 2.7, 41.0}) {
            auto lhs = chi_hat(U, xi);
            auto rhs = chi_hat(A, xi) + chi_hat(B, xi);
            CHECK(std::abs(lhs - rhs) < 1e-13);
        }
    }
}

TEST_CASE("prefractal product form matches the direct sum") {
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    for (long J : {1L, 3L, 6L}) {
        auto T = PrefractalTransform::from_spec(fat, J);
        auto EJ = level_set(fat, J);
        for (double xi : {0.0, 0.7, 13.0, 311.0}) {
            CHECK(T.abs2(xi) == doctest::Approx(chi_hat_abs2(EJ, xi)).epsilon(1e-10));
            CHECK(std::abs(T.value(xi) - chi_hat(EJ, xi)) < 1e-12);
        }
    }
}

TEST_CASE("Plancherel: s = 0 norm equals total length within the tail bound") {
    auto I = unit_interval();
    auto est = hs2_norm_sq(I, 0.0, fast_quad());
    CHECK_FALSE(est.divergent);
    CHECK(est.value <= 1.0 + 1e-9);
    CHECK(std::abs(est.value - 1.0) <= est.tail_bound);

    // E_2 of the fat Cantor set: exact mass 4 l_2 = 5/8
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    auto E2 = level_set(fat, 2);
    REQUIRE(E2.total_length() == Rational(5, 8));
    auto est2 = hs2_norm_sq(E2, 0.0, fast_quad(65536.0));
    CHECK(std::abs(est2.value - 0.625) <= est2.tail_bound);
    CHECK(est2.value <= 0.625 + 1e-9);
}

TEST_CASE("randomized Plancherel property") {
    std::mt19937_64 rng(20250101);
    std::uniform_int_distribution<int> count(1, 24);
    std::uniform_int_distribution<long> num(0, 2047);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<IntervalSet::Interval> iv;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            long a = num(rng), b = num(rng);
            if (a > b) std::swap(a, b);
            if (a == b) ++b;
            iv.emplace_back(Rational(a, 2048), Rational(b, 2048));
        }
        auto A = IntervalSet::from_intervals(std::move(iv));
        auto est = hs2_norm_sq(A, 0.0, fast_quad(16384.0));
        const double total = to_double(A.total_length());
        CHECK(std::abs(est.value - total) <= est.tail_bound);
        CHECK(est.value <= total + 1e-8);
    }
}

TEST_CASE("norms are certified divergent at s >= 1/2") {
    auto est = hs2_norm_sq(unit_interval(), 0.5, fast_quad());
    CHECK(est.divergent);
    auto est2 = hs2_norm_sq(unit_interval(), 1.7, fast_quad());
    CHECK(est2.divergent);
}

TEST_CASE("adaptive Simpson agrees with Gauss-Legendre") {
    auto I = unit_interval();
    auto gl = fast_quad(512.0);
    auto simp = gl;
    simp.rule = QuadratureConfig::Rule::AdaptiveSimpson;
    simp.simpson_tol = 1e-11;
    auto a = hs2_norm_sq(I, 0.2, gl);
    auto b = hs2_norm_sq(I, 0.2, simp);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-7));
}

TEST_CASE("shift difference: exact arithmetic and the paper identity") {
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    for (long j = 1; j <= 6; ++j) {
        auto Ej = level_set(fat, j);
        Rational gap_j = fat.gap_exact(j);
        Rational lhs = shift_diff_norm_sq(Ej, gap_j);
        CHECK(lhs == pow2_rational(j + 1) * gap_j);
    }
    auto I = unit_interval();
    CHECK(shift_diff_norm_sq(I, Rational(0)) == Rational(0));
    CHECK(shift_diff_norm_sq(I, Rational(2)) == Rational(2));
}

TEST_CASE("shift identity: interval arithmetic equals the Fourier integral") {
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    auto E2 = level_set(fat, 2);
    const Rational t(1, 16);
    const double exact = to_double(shift_diff_norm_sq(E2, t));
    QuadratureConfig q = fast_quad(262144.0);
    const double fourier = shift_diff_norm_sq_fourier(E2, to_double(t), q);
    // 1/xi^2-tailed integrand truncated at the cutoff: expect ~1e-4 agreement
    CHECK(fourier == doctest::Approx(exact).epsilon(2e-4));
    CHECK(fourier <= exact + 1e-9);
}

TEST_CASE("norm sweep matches single-level evaluations") {
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    auto quad = fast_quad(32768.0);
    auto sweep = hs2_norm_sq_sweep(fat, 0.2, 2, 4, quad);
    REQUIRE(sweep.size() == 3);
    for (long J = 2; J <= 4; ++J) {
        auto T = PrefractalTransform::from_spec(fat, J);
        auto single = hs2_norm_sq(T, 0.2, 1.0, quad);
        CHECK(sweep[static_cast<std::size_t>(J - 2)].value ==
              doctest::Approx(single.value).epsilon(1e-12));
    }
}

TEST_CASE("gap sum: fat closed form and ratio") {
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    const double s = 0.125;
    auto gs = gap_sum_terms(fat, s, 30);
    REQUIRE(gs.terms.size() == 29);
    for (std::size_t i = 0; i < gs.terms.size(); ++i) {
        const long j = gs.j_begin + static_cast<long>(i);
        CHECK(gs.terms[i] ==
              doctest::Approx(fat_gap_sum_term(0.25, 0.25, s, j)).epsilon(1e-12));
        if (i > 0)
            CHECK(gs.terms[i] / gs.terms[i - 1] ==
                  doctest::Approx(fat_gap_sum_ratio(0.25, s)).epsilon(1e-12));
    }
    CHECK(fat_gap_sum_ratio(0.25, 0.125) == doctest::Approx(std::exp2(-0.5)).epsilon(1e-15));
    // marginal divergence: exact unity at the threshold
    CHECK(fat_gap_sum_ratio(0.25, 0.25) == 1.0);
}

TEST_CASE("gap sum hypotheses: ternary violates Gap_j < l_j") {
    auto tern = make_geometric(Rational(1, 3), 1);
    CHECK(tern.gap_exact(2) == tern.l_exact(2)); // Gap_j = l_j exactly
    CHECK_THROWS(gap_sum_terms(tern, 0.125, 10));
}

TEST_CASE("membership bound") {
    const double c1 = default_c1();
    CHECK(c1 == doctest::Approx(2.1753).epsilon(1e-4));
    auto b = fat_membership_bound(0.25, 0.25, 0.125);
    CHECK_FALSE(b.divergent);
    const double r = std::exp2(-0.5);
    const double pre = std::exp2(1.125) * c1 * std::pow(0.25, 0.75) /
                       (std::pow(0.25, 2.5) * 0.5);
    CHECK(b.value == doctest::Approx(pre * r * r / (1.0 - r)).epsilon(1e-12));
    CHECK(fat_membership_bound(0.25, 0.25, 0.25).divergent);
    CHECK(fat_membership_bound(0.25, 0.25, 0.3).divergent);
}

TEST_CASE("gap sum telescoped tails agree with the closed form") {
    // non-fat rational family with known measure: geometric has m = 0, so
    // sum_{k>=j} 2^k Gap_k = 2^j l_{j-1}; cross-check against direct summation
    auto tern = make_geometric(Rational(2, 5), 1);
    // Gap_j = l_{j-1} - 2 l_j = (2/5)^{j-1}(1 - 4/5) = (1/5)(2/5)^{j-1}
    Rational direct = 0;
    for (long k = 3; k <= 200; ++k) direct += pow2_rational(k) * tern.gap_exact(k);
    const double telescoped = std::exp2(3.0 + tern.log2_l(2));
    CHECK(to_double(direct) == doctest::Approx(telescoped).epsilon(1e-12));
}
