#ifndef SOBNULL_SCALING_HPP
#define SOBNULL_SCALING_HPP

#include "sobnull/solve.hpp"

#include <vector>

namespace sobnull::capacity {

// Least-squares line through (log x, log y); exponent is the slope.
struct PowerFit {
    double exponent = 0;
    double log_prefactor = 0;
    double max_residual = 0; // largest |log y - fit| over the samples
};
PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingConfig {
    double L = 16.0;
    std::size_t N = 16384;
    double tol = 1e-8;
    int padding = 1;
    double center = 0.0;
};

struct ScalingRow {
    double r;
    double cap;
    long iterations;
};

struct ScalingResult {
    std::vector<ScalingRow> rows;
    PowerFit fit;
};

// cap(B_r) over the given radii at fixed s (0 < s < 1/2, n = 1, p = 2); the
// fitted log-log slope tracks the r^{n-sp} = r^{1-2s} ball-capacity law.
ScalingResult ball_scaling(double s, const std::vector<double>& radii,
                           const ScalingConfig& cfg = {});
double ball_scaling_exponent(double s, const std::vector<double>& radii,
                             const ScalingConfig& cfg = {});

// min/max of cap(B_r)/r^{1-2s} over the sampled radii: an empirical surrogate
// for the ball-capacity constant ratio A/B at p = 2, n = 1 (heuristic; feeds
// the fat-Cantor beta certificate).
struct ABRatioEstimate {
    double ratio; // q_min / q_max, in (0, 1]
    double q_min, q_max;
};
ABRatioEstimate estimate_AB_ratio(double s, const ScalingConfig& cfg = {},
                                  std::vector<double> radii = {});

} // namespace sobnull::capacity

#endif
