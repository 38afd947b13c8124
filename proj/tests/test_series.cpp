#include "sobnull/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace sobnull::nullity;

TEST_CASE("geometric terms converge by the ratio test") {
    auto v = series_probe([](long j) { return std::exp2(-0.2 * static_cast<double>(j)); });
    CHECK(v.result == Convergence::Converges);
    CHECK(v.test_used == "ratio");
    CHECK(v.measured_ratio == doctest::Approx(std::exp2(-0.2)));
}

TEST_CASE("non-vanishing terms diverge") {
    auto v = series_probe([](long) { return 1.0; });
    CHECK(v.result == Convergence::Diverges);
    CHECK(v.test_used == "log-comparison");
}

TEST_CASE("harmonic series diverges via log-comparison") {
    auto v = series_probe([](long j) { return 1.0 / static_cast<double>(j + 1); });
    CHECK(v.result == Convergence::Diverges);
    CHECK(v.test_used == "log-comparison");
}

TEST_CASE("j^-2 converges despite ratio near 1") {
    auto v = series_probe([](long j) {
        double x = static_cast<double>(j + 1);
        return 1.0 / (x * x);
    });
    CHECK(v.result == Convergence::Converges);
}

TEST_CASE("1/(j log j) is honestly inconclusive") {
    auto v = series_probe([](long j) {
        double x = static_cast<double>(j + 2);
        return 1.0 / (x * std::log(x));
    });
    CHECK(v.result == Convergence::Inconclusive);
}

TEST_CASE("growing ratio diverges") {
    auto v = series_probe([](long j) { return std::exp2(0.05 * static_cast<double>(j)); });
    CHECK(v.result == Convergence::Diverges);
    CHECK(v.test_used == "ratio");
}

TEST_CASE("non-positive terms are rejected") {
    CHECK_THROWS(series_probe([](long j) { return j < 4000 ? 1.0 : -1.0; }));
}
