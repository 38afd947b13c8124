#include "sobnull/io.hpp"

#include <doctest.h>

using namespace sobnull;
using namespace sobnull::io;

TEST_CASE("interval set JSON round trip") {
    auto A = sets::IntervalSet::from_intervals(
        {{Rational(0), Rational(1, 3)}, {Rational(2, 3), Rational(1)}});
    auto j = to_json(A);
    CHECK(j.at("exact") == true);
    auto back = interval_set_from_json(j);
    CHECK(back == A);
}

TEST_CASE("float interval sets carry precision bits") {
    sets::FloatIntervalSet F;
    F.intervals.emplace_back(BigFloat(0), BigFloat(1) / 3);
    auto j = to_json(F);
    CHECK(j.at("exact") == false);
    CHECK(j.at("precision_bits") == kBigFloatBits);
}

TEST_CASE("cantor spec JSON round trip") {
    auto fat = sets::make_fat_cantor(Rational(1, 4), Rational(1, 4), 2);
    auto j = spec_to_json(fat);
    CHECK(j.at("family") == "fat_cantor");
    CHECK(j.at("n") == 2);
    auto back = spec_from_json(j);
    CHECK(back.family == sets::CantorFamily::FatCantor);
    CHECK(back.alpha == Rational(1, 4));

    auto zoo = sets::make_zoo(sets::CantorFamily::E_dpstar, 0.5, 2.0, 1);
    auto jz = spec_to_json(zoo);
    auto bz = spec_from_json(jz);
    CHECK(bz.d == 0.5);
    CHECK(bz.pstar == 2.0);
}

TEST_CASE("unknown fields are rejected") {
    json j{{"family", "geometric"}, {"params", {{"ratio", "1/3"}}}, {"n", 1}, {"zzz", 1}};
    CHECK_THROWS(spec_from_json(j));
    json j2{{"family", "geometric"}, {"params", {{"ratio", "1/3"}, {"extra", 2}}}, {"n", 1}};
    CHECK_THROWS(spec_from_json(j2));
}

TEST_CASE("rationals parse from strings") {
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("-1.5") == Rational(-3, 2));
    CHECK_THROWS(rational_from_string("1/0"));
}

TEST_CASE("verdict serialization carries the rule tag") {
    auto v = nullity::NullityVerdict::null(nullity::Justification::ZooClosedForm, "test");
    auto j = verdict_to_json(v, -0.5, 2.0, "F_dinf");
    CHECK(j.at("verdict") == "Null");
    CHECK(j.at("justification") == "ZooClosedForm");
    CHECK(j.at("family") == "F_dinf");
}
