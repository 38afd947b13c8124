#include "sobnull/restriction_norm.hpp"

#include "sobnull/fourier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sobnull::capacity {

double h22_even_interval_norm_sq(const SmoothTrial& trial, double a, int quad_points) {
    if (!(a > 0)) throw std::domain_error("h22 norm: requires a > 0");
    std::vector<double> nodes, weights;
    spectral::legendre_rule(quad_points, nodes, weights);
    double integral = 0;
    const double h = 0.5 * a;
    for (int q = 0; q < quad_points; ++q) {
        const double t = h * (nodes[static_cast<std::size_t>(q)] + 1.0);
        const double u = trial.u(t), du = trial.du(t), d2u = trial.d2u(t);
        integral += weights[static_cast<std::size_t>(q)] * (u * u + 2.0 * du * du + d2u * d2u);
    }
    integral *= h;
    const double ua = trial.u(a), dua = trial.du(a);
    return 2.0 * (ua * ua + dua * dua + (ua + dua) * (ua + dua) + integral);
}

Rational h22_norm_const_one(const Rational& a) {
    if (!(a > 0)) throw std::domain_error("h22 norm: requires a > 0");
    return 4 + 2 * a;
}

Rational trial_quadratic(const Rational& a, const Rational& eps) {
    if (!(a > 0) || !(a * a < 3))
        throw std::domain_error("trial_quadratic: requires 0 < a < sqrt(3)");
    if (!(eps > 0)) throw std::domain_error("trial_quadratic: requires eps > 0");
    const Rational a2 = a * a, a3 = a2 * a, a5 = a3 * a2;
    return (4 + 2 * a) - eps * 8 * a * (1 - a2 / 3) +
           eps * eps * 2 * (8 * a2 + Rational(8, 15) * a5 + Rational(8, 3) * a3 + 4 * a);
}

Rational trial_cubicgap(const Rational& a, const Rational& eps) {
    if (!(a > 1)) throw std::domain_error("trial_cubicgap: requires a > 1");
    if (!(eps > 0)) throw std::domain_error("trial_cubicgap: requires eps > 0");
    return (4 + 2 * a) - Rational(11, 3) * eps + (12 + Rational(58, 105)) * eps * eps;
}

} // namespace sobnull::capacity
