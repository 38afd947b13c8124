#include "sobnull/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sobnull::nullity {

namespace {

// Least-squares fit of r_j = a + b/j over the window; returns a.
double extrapolated_limit(const std::vector<std::pair<long, double>>& pts) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [j, r] : pts) {
        double x = 1.0 / static_cast<double>(j);
        sw += 1;
        sx += x;
        sy += r;
        sxx += x * x;
        sxy += x * r;
    }
    double det = sw * sxx - sx * sx;
    if (std::abs(det) < 1e-30) return pts.back().second;
    return (sxx * sy - sx * sxy) / det;
}

} // namespace

ConvergenceVerdict series_probe_log2(const std::function<double(long)>& log2_term,
                                     const ProbeConfig& cfg) {
    if (cfg.max_index < cfg.window + 2)
        throw std::invalid_argument("series_probe: max_index too small for window");

    const long J = cfg.max_index;
    std::vector<std::pair<long, double>> ratios; // (j, term_{j+1}/term_j)
    std::vector<double> tail_log2;               // log2 term over the window
    double prev = log2_term(J - cfg.window - 1);
    for (long j = J - cfg.window; j <= J; ++j) {
        double cur = log2_term(j);
        if (std::isnan(cur)) throw std::domain_error("series_probe: invalid term");
        ratios.emplace_back(j, std::exp2(cur - prev));
        tail_log2.push_back(cur);
        prev = cur;
    }

    ConvergenceVerdict v;
    v.last_index = J;
    double rhat = extrapolated_limit(ratios);
    v.measured_ratio = rhat;
    if (rhat < 1.0 - cfg.ratio_tol) {
        v.result = Convergence::Converges;
        v.test_used = "ratio";
        return v;
    }
    if (rhat > 1.0 + cfg.ratio_tol) {
        v.result = Convergence::Diverges;
        v.test_used = "ratio";
        return v;
    }

    // Ratio is indistinguishable from 1: compare against the boundary scales.
    v.test_used = "log-comparison";
    bool dominated = true; // t_j * j * log^2 j non-increasing -> converges
    bool minorized = true; // t_j * j non-decreasing -> diverges
    const double slack = 1e-12;
    for (std::size_t i = 1; i < tail_log2.size(); ++i) {
        long j0 = J - cfg.window + static_cast<long>(i) - 1;
        long j1 = j0 + 1;
        auto wlog = [](long j) {
            double x = static_cast<double>(j < 2 ? 2 : j);
            return std::log2(x) + 2.0 * std::log2(std::log(x) < 1e-300 ? 1e-300 : std::log(x));
        };
        double w0 = tail_log2[i - 1] + wlog(j0);
        double w1 = tail_log2[i] + wlog(j1);
        if (w1 > w0 + slack) dominated = false;
        double h0 = tail_log2[i - 1] + std::log2(static_cast<double>(j0));
        double h1 = tail_log2[i] + std::log2(static_cast<double>(j1));
        if (h1 < h0 - slack) minorized = false;
    }
    if (dominated && !minorized) {
        v.result = Convergence::Converges;
        return v;
    }
    if (minorized && !dominated) {
        v.result = Convergence::Diverges;
        return v;
    }
    v.result = Convergence::Inconclusive;
    return v;
}

ConvergenceVerdict series_probe(const std::function<double(long)>& term, const ProbeConfig& cfg) {
    return series_probe_log2(
        [&term](long j) {
            double t = term(j);
            if (!(t > 0)) throw std::domain_error("series_probe: non-positive term");
            return std::log2(t);
        },
        cfg);
}

} // namespace sobnull::nullity
