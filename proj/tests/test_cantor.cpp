#include "sobnull/cantor.hpp"

#include <doctest.h>

#include <cmath>

using namespace sobnull;
using namespace sobnull::sets;

TEST_CASE("fat Cantor recurrence values") {
    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    // l_{j+1} = (l_j - beta alpha^j)/2
    CHECK(fat.l_exact(1) == Rational(3, 8));
    CHECK(fat.l_exact(2) == Rational(5, 32));
    CHECK(fat.gap_exact(1) == Rational(1, 4));
    CHECK(fat.gap_exact(3) == Rational(1, 64));
    CHECK(*fat.measure_limit_exact() == Rational(1, 2));
    CHECK(fat.measure_limit(1) == doctest::Approx(0.5));
}

TEST_CASE("parameter domains are enforced") {
    CHECK_THROWS(make_fat_cantor(Rational(1, 2), Rational(1, 8), 1)); // alpha = 1/2
    CHECK_THROWS(make_fat_cantor(Rational(1, 4), Rational(1, 2), 1)); // beta = 1-2alpha
    CHECK_THROWS(make_superfat(0.5, 1.0, 1));                         // delta = 1
    CHECK_THROWS(make_superfat(1.0, 2.0, 1));                         // gamma = 1
    CHECK_THROWS(make_geometric(Rational(1, 2), 1));                  // ratio = 1/2
    CHECK_THROWS(make_explicit({Rational(1), Rational(3, 5)}, 1));    // 0.6 > 1/2
    CHECK_THROWS(make_zoo(CantorFamily::F_dinf, 1.0, 0, 1));          // d = n
}

TEST_CASE("zoo closed forms") {
    // F(d,inf) with d = 1/2, n = 1: l_j = 2^{-2j}
    auto f = make_zoo(CantorFamily::F_dinf, 0.5, 0, 1);
    CHECK(f.log2_l(3) == doctest::Approx(-6.0));
    CHECK(std::exp2(f.log2_l(3)) == doctest::Approx(1.0 / 64.0));
    CHECK(f.index_shift == 0);

    // F(n,inf): rational l_j = 2^-j/(j+1)
    auto fn = make_zoo(CantorFamily::F_ninf, 0, 0, 1);
    CHECK(fn.l_exact(2) == Rational(1, 12));

    // F(0,inf): l_j = 2^(-2^(2^j)); log2(-log2 l_j) = 2^j
    auto f0 = make_zoo(CantorFamily::F_0inf, 0, 0, 1);
    CHECK(f0.log2_l(2) == doctest::Approx(-16.0));
    CHECK(f0.log2_neg_log2_l(5) == doctest::Approx(32.0));
    CHECK_THROWS(f0.log2_l(20)); // beyond double's exponent range

    // E(0,p*): l_1 = 1/4 for every p*
    auto e0 = make_zoo(CantorFamily::E_dpstar, 0.0, 2.0, 1);
    CHECK(e0.log2_l(1) == doctest::Approx(-2.0));
}

TEST_CASE("renormalized rows still satisfy the interval constraints") {
    for (int n : {1, 2}) {
        for (double d : {1.0 / 3.0, 0.5, 0.9}) {
            for (double pstar : {1.5, 2.0, 3.0}) {
                auto s = make_zoo(CantorFamily::F_dpstar, d, pstar, n);
                for (long j = 0; j < 20; ++j)
                    CHECK(s.log2_l(j + 1) < s.log2_l(j) - 1.0);
            }
        }
    }
}

TEST_CASE("level sets: counts, nesting, gap bookkeeping") {
    auto ternary = make_geometric(Rational(1, 3), 1);
    auto E1 = level_set(ternary, 1);
    REQUIRE(E1.size() == 2);
    CHECK(E1.intervals()[0] == IntervalSet::Interval{Rational(0), Rational(1, 3)});
    CHECK(E1.intervals()[1] == IntervalSet::Interval{Rational(2, 3), Rational(1)});
    CHECK(gap(ternary, 1) == Rational(1, 3));

    auto E0 = level_set(ternary, 0);
    REQUIRE(E0.size() == 1);
    CHECK(E0.intervals()[0] == IntervalSet::Interval{Rational(0), Rational(1)});

    auto fat = make_fat_cantor(Rational(1, 4), Rational(1, 4), 1);
    auto F1 = level_set(fat, 1);
    REQUIRE(F1.size() == 2);
    CHECK(F1.intervals()[0] == IntervalSet::Interval{Rational(0), Rational(3, 8)});
    CHECK(F1.intervals()[1] == IntervalSet::Interval{Rational(5, 8), Rational(1)});

    for (long J = 0; J <= 8; ++J) {
        auto EJ = level_set(fat, J);
        CHECK(EJ.size() == (std::size_t(1) << J));
        // all components share length l_J
        for (const auto& [a, b] : EJ.intervals()) CHECK(b - a == fat.l_exact(J));
        // measure consistency: total = 2^J l_J
        CHECK(EJ.total_length() == pow2_rational(J) * fat.l_exact(J));
        CHECK(EJ.total_length() >= *fat.measure_limit_exact());
        if (J > 0) {
            auto prev = level_set(fat, J - 1);
            // nesting
            CHECK(set_intersection(prev, EJ) == EJ);
            // total(E_{J-1}) - total(E_J) = 2^{J-1} Gap_J
            CHECK(prev.total_length() - EJ.total_length() ==
                  pow2_rational(J - 1) * fat.gap_exact(J));
        }
    }
}

TEST_CASE("float materialization for irrational families") {
    auto f = make_zoo(CantorFamily::F_dinf, std::log(2.0) / std::log(3.0), 0, 1);
    auto E2 = level_set_float(f, 2);
    REQUIRE(E2.intervals.size() == 4);
    CHECK(static_cast<double>(E2.total_length()) ==
          doctest::Approx(4.0 * std::exp2(f.log2_l(2))).epsilon(1e-12));
    CHECK_THROWS(level_set(f, 2)); // exact materialization refuses float families
}

TEST_CASE("measure limits") {
    auto sf = make_superfat(0.5, 4.0, 2);
    CHECK(sf.measure_limit(2) == doctest::Approx(0.25));
    auto fdinf = make_zoo(CantorFamily::F_dinf, 0.5, 0, 1);
    CHECK(fdinf.measure_limit(1) == 0.0);
    // explicit: depth value with monotonicity (upper bound on the limit)
    auto ex = make_explicit({Rational(1), Rational(1, 3), Rational(1, 9)}, 1);
    CHECK(ex.measure_at_depth(2) == doctest::Approx(4.0 / 9.0));
    CHECK(ex.measure_at_depth(2) <= ex.measure_at_depth(1));
}

TEST_CASE("explicit ternary matches geometric") {
    auto ex = make_explicit({Rational(1), Rational(1, 3), Rational(1, 9), Rational(1, 27)}, 1);
    auto geo = make_geometric(Rational(1, 3), 1);
    for (long j = 0; j <= 3; ++j) CHECK(ex.l_exact(j) == geo.l_exact(j));
    CHECK(level_set(ex, 1).intervals() == level_set(geo, 1).intervals());
}
