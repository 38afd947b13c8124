#ifndef SOBNULL_RESTRICTION_NORM_HPP
#define SOBNULL_RESTRICTION_NORM_HPP

#include "sobnull/numeric.hpp"

#include <functional>

namespace sobnull::capacity {

// Exact H^{2,2}((-a,a)) restriction norm of an even, twice differentiable u:
//   ||u||^2 = 2 ( |u(a)|^2 + |u'(a)|^2 + |u(a)+u'(a)|^2
//               + int_0^a (|u|^2 + 2|u'|^2 + |u''|^2) dt ).
// Trial functions that are >= 1 on (-a,a) give upper bounds for cap_{2,2};
// u = 1 gives Cap_{2,2} exactly.

struct SmoothTrial {
    std::function<double(double)> u, du, d2u;
};

double h22_even_interval_norm_sq(const SmoothTrial& trial, double a, int quad_points = 64);

// u = 1: the norm is 4 + 2a, exactly.
Rational h22_norm_const_one(const Rational& a);

// u = 1 + eps (a^2 - t^2), requires 0 < a < sqrt(3); exact polynomial value
//   (4+2a) - 8a(1 - a^2/3) eps + 2 (8a^2 + 8a^5/15 + 8a^3/3 + 4a) eps^2.
Rational trial_quadratic(const Rational& a, const Rational& eps);

// Piecewise cubic bump on a-1 <= |t| < a (u = 1 inside), requires a > 1:
//   (4+2a) - (11/3) eps + (12 + 58/105) eps^2.
Rational trial_cubicgap(const Rational& a, const Rational& eps);

} // namespace sobnull::capacity

#endif
