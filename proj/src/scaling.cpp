#include "sobnull/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace sobnull::capacity {

PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_power_law: need >= 2 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0 && y[i] > 0))
            throw std::domain_error("fit_power_law: samples must be positive");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-30) throw std::domain_error("fit_power_law: degenerate abscissas");
    PowerFit f;
    f.exponent = (n * sxy - sx * sy) / det;
    f.log_prefactor = (sy - f.exponent * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double pred = f.log_prefactor + f.exponent * std::log(x[i]);
        f.max_residual = std::max(f.max_residual, std::abs(std::log(y[i]) - pred));
    }
    return f;
}

ScalingResult ball_scaling(double s, const std::vector<double>& radii,
                           const ScalingConfig& cfg) {
    if (!(s > 0 && s < 0.5))
        throw std::domain_error("ball_scaling: power law regime needs 0 < s < 1/2");
    if (radii.size() < 2) throw std::invalid_argument("ball_scaling: degenerate radii list");
    for (double r : radii)
        if (!(r > 0 && r <= 1.0)) throw std::domain_error("ball_scaling: radii must lie in (0,1]");

    SpectralGrid grid(cfg.L, cfg.N, s);
    SolveOptions opts;
    opts.tol = cfg.tol;

    ScalingResult out;
    std::vector<double> caps;
    for (double r : radii) {
        auto mask = interval_mask(grid, cfg.center - r, cfg.center + r,
                                  ConstraintMask::Kind::AtLeastOne, cfg.padding);
        auto rep = solve_cap(grid, mask, opts);
        if (!rep.converged) throw std::runtime_error("ball_scaling: solver did not converge");
        out.rows.push_back({r, rep.value, rep.iterations});
        caps.push_back(rep.value);
    }
    out.fit = fit_power_law(radii, caps);
    return out;
}

double ball_scaling_exponent(double s, const std::vector<double>& radii,
                             const ScalingConfig& cfg) {
    if (radii.size() < 4)
        throw std::invalid_argument("ball_scaling_exponent: need >= 4 radii");
    double lo = radii[0], hi = radii[0];
    for (double r : radii) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (!(hi / lo >= 10.0))
        throw std::invalid_argument("ball_scaling_exponent: radii must span >= 1 decade");
    return ball_scaling(s, radii, cfg).fit.exponent;
}

ABRatioEstimate estimate_AB_ratio(double s, const ScalingConfig& cfg, std::vector<double> radii) {
    if (radii.empty()) radii = {0.5, 0.25, 0.125, 0.0625, 0.03125};
    auto res = ball_scaling(s, radii, cfg);
    ABRatioEstimate est{1.0, 0, 0};
    bool first = true;
    for (const auto& row : res.rows) {
        const double q = row.cap / std::pow(row.r, 1.0 - 2.0 * s);
        if (first) {
            est.q_min = est.q_max = q;
            first = false;
        } else {
            est.q_min = std::min(est.q_min, q);
            est.q_max = std::max(est.q_max, q);
        }
    }
    est.ratio = est.q_min / est.q_max;
    return est;
}

} // namespace sobnull::capacity
