#ifndef SOBNULL_FOURIER_HPP
#define SOBNULL_FOURIER_HPP

#include "sobnull/cantor.hpp"
#include "sobnull/interval_set.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace sobnull::spectral {

// Fourier convention: u_hat(xi) = (2 pi)^(-1/2) int e^{-i xi x} u(x) dx.

struct QuadratureConfig {
    enum class Rule { GaussLegendreComposite, AdaptiveSimpson };

    double cutoff = 1048576.0; // frequency half-width, default 2^20
    int points_per_panel = 64;
    double panel_width = 0.0; // 0 -> 2 pi / (largest endpoint spread)
    Rule rule = Rule::GaussLegendreComposite;
    bool tail_estimate = true;
    double simpson_tol = 1e-9;
    int threads = 1;
};

struct NormEstimate {
    double value = 0;
    double tail_bound = 0;
    double cutoff = 0;
    bool divergent = false; // s >= 1/2: certified divergent, value not computed
};

// Transform of the indicator of an interval union; the removable singularity
// at xi = 0 is evaluated through a stable sinc form.
std::complex<double> chi_hat(const sets::IntervalSet& A, double xi);
double chi_hat_abs2(const sets::IntervalSet& A, double xi);

// Cantor prefractal transforms factor over construction levels:
//   chi_hat(xi) = (2pi)^{-1/2} e^{-i xi l_J/2} l_J sinc(xi l_J/2)
//                 * prod_k (1 + e^{-i xi c_k}),  c_k = l_{k-1} - l_k,
// so |chi_hat|^2 of a 2^J-component set costs O(J) per evaluation.
struct PrefractalTransform {
    double l_level = 1;           // l_J
    std::vector<double> offsets;  // c_1..c_J
    static PrefractalTransform from_spec(const sets::CantorSpec& spec, long J);
    std::complex<double> value(double xi) const;
    double abs2(double xi) const;
    double component_count() const; // 2^J as double
};

// ||chi_A||^2_{H^{s,2}} = int (1+xi^2)^s |chi_hat|^2 dxi, truncated at the
// cutoff with an analytic tail bound from |chi_hat| <= 2K/(sqrt(2pi)|xi|).
// For s >= 1/2 the integral diverges for any nonempty finite interval union
// and the result is flagged divergent instead of being chased numerically.
NormEstimate hs2_norm_sq(const sets::IntervalSet& A, double s, const QuadratureConfig& quad);
NormEstimate hs2_norm_sq(const PrefractalTransform& T, double s, double span,
                         const QuadratureConfig& quad);

// One quadrature pass evaluating the whole prefractal ladder J = j_min..j_max.
std::vector<NormEstimate> hs2_norm_sq_sweep(const sets::CantorSpec& spec, double s,
                                            long j_min, long j_max,
                                            const QuadratureConfig& quad);

// ||chi_A - chi_{A+t}||^2_{L^2}, exact interval arithmetic.
Rational shift_diff_norm_sq(const sets::IntervalSet& A, const Rational& t);
// Same quantity through the Fourier identity 2 int (1-cos(t xi)) |chi_hat|^2.
double shift_diff_norm_sq_fourier(const sets::IntervalSet& A, double t,
                                  const QuadratureConfig& quad);

// Weighted quadrature backbone: 2 * int_0^cutoff (1+xi^2)^s f(xi) dxi for an
// even integrand factor f (deterministic panel order, compensated sum).
double integrate_even_weighted(const std::function<double(double)>& f, double s,
                               double span_hint, const QuadratureConfig& quad);

// Gauss-Legendre nodes/weights on [-1,1] (Newton on the Legendre recurrence).
void legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace sobnull::spectral

#endif
