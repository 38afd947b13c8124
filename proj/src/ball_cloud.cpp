#include "sobnull/ball_cloud.hpp"

#include <cmath>
#include <stdexcept>

namespace sobnull::sets {

double Box::volume() const {
    double v = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
}

double unit_ball_volume(int n) {
    return std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

double BallCloud::ball_volume_sum() const {
    const double omega = unit_ball_volume(n);
    double s = 0;
    for (const auto& g : balls) s += static_cast<double>(g.count) * omega * std::pow(g.radius, n);
    return s;
}

std::size_t BallCloud::ball_count() const {
    std::size_t c = 0;
    for (const auto& g : balls) c += static_cast<std::size_t>(g.count);
    return c;
}

BallCloud make_swiss_cheese(Box domain, std::vector<BallGroup> balls,
                            std::vector<double> inner_center, double inner_radius,
                            bool dense_centers_hint) {
    const int n = static_cast<int>(domain.lo.size());
    if (n < 1 || domain.hi.size() != domain.lo.size())
        throw std::invalid_argument("swiss_cheese: malformed domain box");
    for (int i = 0; i < n; ++i)
        if (!(domain.lo[i] < domain.hi[i]))
            throw std::invalid_argument("swiss_cheese: empty domain box");
    for (const auto& g : balls) {
        if (!(g.radius > 0)) throw std::invalid_argument("swiss_cheese: non-positive radius");
        if (g.radius > 1) throw std::invalid_argument("swiss_cheese: radius exceeds 1");
        if (g.count < 1) throw std::invalid_argument("swiss_cheese: non-positive multiplicity");
    }
    if (!(inner_radius > 0 && inner_radius <= 1))
        throw std::invalid_argument("swiss_cheese: inner radius must lie in (0,1]");
    if (static_cast<int>(inner_center.size()) != n)
        throw std::invalid_argument("swiss_cheese: inner center dimension mismatch");
    for (int i = 0; i < n; ++i)
        if (inner_center[i] - inner_radius < domain.lo[i] ||
            inner_center[i] + inner_radius > domain.hi[i])
            throw std::invalid_argument("swiss_cheese: inner ball leaves the domain");

    BallCloud c;
    c.n = n;
    c.domain = std::move(domain);
    c.balls = std::move(balls);
    c.inner_center = std::move(inner_center);
    c.inner_radius = inner_radius;
    c.dense_centers_hint = dense_centers_hint;
    c.positive_measure = c.ball_volume_sum() < c.domain.volume();
    return c;
}

BallCloud fat_cantor_cheese(const Rational& alpha, const Rational& beta, long J) {
    if (J < 1) throw std::invalid_argument("fat_cantor_cheese: J >= 1 required");
    CantorSpec spec = make_fat_cantor(alpha, beta, 1, std::max(32, static_cast<int>(J)));

    std::vector<BallGroup> balls;
    const bool with_centers = J <= 16;
    for (long j = 1; j <= J; ++j) {
        const double r = to_double(spec.gap_exact(j) / 2);
        if (with_centers) {
            // one ball per removed middle interval: midpoints of the parent
            // components
            IntervalSet parent = level_set(spec, j - 1);
            for (const auto& [a, b] : parent.intervals())
                balls.push_back(BallGroup{{to_double((a + b) / 2)}, r, 1});
        } else {
            balls.push_back(BallGroup{{}, r, 1LL << (j - 1)});
        }
    }
    return make_swiss_cheese(Box{{0.0}, {1.0}}, std::move(balls), {0.5}, 0.5, true);
}

} // namespace sobnull::sets
