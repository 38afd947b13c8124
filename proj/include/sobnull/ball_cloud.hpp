#ifndef SOBNULL_BALL_CLOUD_HPP
#define SOBNULL_BALL_CLOUD_HPP

#include "sobnull/cantor.hpp"
#include "sobnull/numeric.hpp"

#include <vector>

namespace sobnull::sets {

// Swiss-cheese data: a bounding box, subtracted open balls, and one witness
// ball contained in the domain. Balls with equal radius are stored run-length
// compressed (count), which keeps deep fat-Cantor exports tractable.
struct Box {
    std::vector<double> lo, hi; // per-axis bounds
    double volume() const;
};

struct BallGroup {
    std::vector<double> center; // representative center; empty if unspecified
    double radius = 0;
    long long count = 1;
};

struct BallCloud {
    int n = 1;
    Box domain;
    std::vector<BallGroup> balls;
    std::vector<double> inner_center;
    double inner_radius = 0;

    // true when sum of ball volumes < volume(domain closure), certifying
    // m(K) > 0; false means undetermined.
    bool positive_measure = false;
    // Caller-supplied hint that centers are dense in the domain (empty
    // interior is not certified by the artifact).
    bool dense_centers_hint = false;

    double ball_volume_sum() const;
    std::size_t ball_count() const;
};

// Validates radii in (0,1], inner ball inside the domain; computes the
// positive-measure flag.
BallCloud make_swiss_cheese(Box domain, std::vector<BallGroup> balls,
                            std::vector<double> inner_center, double inner_radius,
                            bool dense_centers_hint = false);

// The removed intervals of the fat Cantor set as a 1-D ball cloud: at stage j
// (1..J) there are 2^(j-1) balls of radius (beta/2) alpha^(j-1). Centers are
// materialized only for small J.
BallCloud fat_cantor_cheese(const Rational& alpha, const Rational& beta, long J);

double unit_ball_volume(int n);

} // namespace sobnull::sets

#endif
