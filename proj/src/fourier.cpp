#include "sobnull/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sobnull::spectral {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779; // (2 pi)^{-1/2}

// sin(x)/x with a series branch for small arguments (cancellation-free).
double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        // degree-8 Taylor; error below 1e-40 at |x| = 1e-4
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
    }
    return std::sin(x) / x;
}

struct PanelScheme {
    double width;
    long count;
};

PanelScheme plan_panels(double span_hint, const QuadratureConfig& quad) {
    if (!(quad.cutoff > 0)) throw std::invalid_argument("quadrature: cutoff must be positive");
    if (quad.points_per_panel < 2)
        throw std::invalid_argument("quadrature: panel count must be >= 2 points");
    double w = quad.panel_width;
    if (w <= 0) {
        double span = span_hint > 0 ? span_hint : 1.0;
        w = 2.0 * M_PI / span;
    }
    long count = static_cast<long>(std::ceil(quad.cutoff / w));
    return {quad.cutoff / static_cast<double>(count), count};
}

double kahan_total(const std::vector<double>& parts) {
    double s = 0, c = 0;
    for (double v : parts) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

void legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

std::complex<double> chi_hat(const sets::IntervalSet& A, double xi) {
    std::complex<double> acc(0, 0);
    for (const auto& [aq, bq] : A.intervals()) {
        const double a = to_double(aq), b = to_double(bq);
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        // (e^{-i xi a} - e^{-i xi b}) / (i xi) = e^{-i xi c} * (b-a) sinc(xi h)
        acc += std::polar((b - a) * sinc(xi * h), -xi * c);
    }
    return kInvSqrt2Pi * acc;
}

double chi_hat_abs2(const sets::IntervalSet& A, double xi) {
    return std::norm(chi_hat(A, xi));
}

PrefractalTransform PrefractalTransform::from_spec(const sets::CantorSpec& spec, long J) {
    PrefractalTransform t;
    t.offsets.reserve(static_cast<std::size_t>(J));
    if (spec.rational_backed()) {
        for (long k = 1; k <= J; ++k)
            t.offsets.push_back(to_double(spec.l_exact(k - 1) - spec.l_exact(k)));
        t.l_level = to_double(spec.l_exact(J));
    } else {
        for (long k = 1; k <= J; ++k) {
            double lk1 = std::exp2(spec.log2_l(k - 1)), lk = std::exp2(spec.log2_l(k));
            t.offsets.push_back(lk1 - lk);
        }
        t.l_level = std::exp2(spec.log2_l(J));
    }
    return t;
}

std::complex<double> PrefractalTransform::value(double xi) const {
    std::complex<double> acc =
        std::polar(l_level * sinc(0.5 * xi * l_level), -0.5 * xi * l_level);
    for (double c : offsets) acc *= 1.0 + std::polar(1.0, -xi * c);
    return kInvSqrt2Pi * acc;
}

double PrefractalTransform::abs2(double xi) const {
    double v = l_level * sinc(0.5 * xi * l_level);
    double prod = v * v;
    for (double c : offsets) {
        double co = std::cos(0.5 * xi * c);
        prod *= 4.0 * co * co;
    }
    return kInvSqrt2Pi * kInvSqrt2Pi * prod;
}

double PrefractalTransform::component_count() const {
    return std::ldexp(1.0, static_cast<int>(offsets.size()));
}

double integrate_even_weighted(const std::function<double(double)>& f, double s,
                               double span_hint, const QuadratureConfig& quad) {
    const auto weighted = [&f, s](double xi) {
        return std::pow(1.0 + xi * xi, s) * f(xi);
    };
    if (quad.rule == QuadratureConfig::Rule::AdaptiveSimpson) {
        const double a = 0, b = quad.cutoff;
        const double fa = weighted(a), fb = weighted(b), fm = weighted(0.5 * (a + b));
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return 2.0 *
               adaptive_simpson(weighted, a, b, fa, fm, fb, whole, quad.simpson_tol, 48);
    }

    const PanelScheme panels = plan_panels(span_hint, quad);
    std::vector<double> nodes, weights;
    legendre_rule(quad.points_per_panel, nodes, weights);

    std::vector<double> partial(static_cast<std::size_t>(panels.count), 0.0);
    auto run = [&](long lo, long hi) {
        for (long k = lo; k < hi; ++k) {
            const double x0 = static_cast<double>(k) * panels.width;
            const double h = 0.5 * panels.width;
            double acc = 0;
            for (int q = 0; q < quad.points_per_panel; ++q)
                acc += weights[static_cast<std::size_t>(q)] *
                       weighted(x0 + h * (nodes[static_cast<std::size_t>(q)] + 1.0));
            partial[static_cast<std::size_t>(k)] = acc * h;
        }
    };
    const int nthreads = std::max(1, quad.threads);
    if (nthreads == 1 || panels.count < 4 * nthreads) {
        run(0, panels.count);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (panels.count + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            long lo = t * chunk, hi = std::min<long>(panels.count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return 2.0 * kahan_total(partial);
}

namespace {

double tail_bound_value(double s, double K, double cutoff) {
    // int_{|xi|>cutoff} (1+xi^2)^s (2K)^2/(2 pi xi^2) dxi, closed form with
    // (1+xi^2)^s <= 2^s xi^{2s} (s>=0) or xi^{2s} (s<0); needs cutoff >= 1.
    if (cutoff < 1.0) throw std::invalid_argument("tail bound: cutoff must be >= 1");
    const double cs = s >= 0 ? std::exp2(s) : 1.0;
    return 4.0 * K * K / M_PI * cs * std::pow(cutoff, 2.0 * s - 1.0) / (1.0 - 2.0 * s);
}

NormEstimate norm_from_eval(const std::function<double(double)>& abs2, double s, double K,
                            double span, const QuadratureConfig& quad) {
    NormEstimate out;
    out.cutoff = quad.cutoff;
    if (s >= 0.5) {
        // |chi_hat| of a finite interval union decays exactly like 1/xi, so
        // the weighted integral diverges; certified, not measured.
        out.divergent = true;
        return out;
    }
    out.value = integrate_even_weighted(abs2, s, span, quad);
    if (quad.tail_estimate) out.tail_bound = tail_bound_value(s, K, quad.cutoff);
    return out;
}

} // namespace

NormEstimate hs2_norm_sq(const sets::IntervalSet& A, double s, const QuadratureConfig& quad) {
    if (A.empty()) return NormEstimate{0, 0, quad.cutoff, false};
    return norm_from_eval([&A](double xi) { return chi_hat_abs2(A, xi); }, s,
                          static_cast<double>(A.size()), to_double(A.span()), quad);
}

NormEstimate hs2_norm_sq(const PrefractalTransform& T, double s, double span,
                         const QuadratureConfig& quad) {
    return norm_from_eval([&T](double xi) { return T.abs2(xi); }, s, T.component_count(),
                          span, quad);
}

std::vector<NormEstimate> hs2_norm_sq_sweep(const sets::CantorSpec& spec, double s, long j_min,
                                            long j_max, const QuadratureConfig& quad) {
    if (j_min < 0 || j_max < j_min) throw std::invalid_argument("norm sweep: bad level range");
    if (s >= 0.5) {
        std::vector<NormEstimate> out(static_cast<std::size_t>(j_max - j_min + 1));
        for (auto& e : out) {
            e.divergent = true;
            e.cutoff = quad.cutoff;
        }
        return out;
    }
    PrefractalTransform deep = PrefractalTransform::from_spec(spec, j_max);
    std::vector<double> level_l(static_cast<std::size_t>(j_max + 1));
    for (long j = 0; j <= j_max; ++j)
        level_l[static_cast<std::size_t>(j)] =
            spec.rational_backed() ? to_double(spec.l_exact(j)) : std::exp2(spec.log2_l(j));

    const std::size_t count = static_cast<std::size_t>(j_max - j_min + 1);
    const PanelScheme panels = plan_panels(1.0, quad);
    std::vector<double> nodes, weights;
    legendre_rule(quad.points_per_panel, nodes, weights);

    // partial[j][panel]
    std::vector<std::vector<double>> partial(count);
    for (auto& row : partial) row.assign(static_cast<std::size_t>(panels.count), 0.0);

    auto run = [&](long lo, long hi) {
        std::vector<double> acc(count);
        for (long k = lo; k < hi; ++k) {
            const double x0 = static_cast<double>(k) * panels.width;
            const double h = 0.5 * panels.width;
            std::fill(acc.begin(), acc.end(), 0.0);
            for (int q = 0; q < quad.points_per_panel; ++q) {
                const double xi = x0 + h * (nodes[static_cast<std::size_t>(q)] + 1.0);
                const double wq = weights[static_cast<std::size_t>(q)];
                const double weight = std::pow(1.0 + xi * xi, s);
                double prod = 1.0; // running prod of 4 cos^2(xi c_k / 2)
                long j = 0;
                for (std::size_t idx = 0; idx < count; ++idx) {
                    const long target = j_min + static_cast<long>(idx);
                    for (; j < target; ++j) {
                        double co = std::cos(0.5 * xi * deep.offsets[static_cast<std::size_t>(j)]);
                        prod *= 4.0 * co * co;
                    }
                    const double lJ = level_l[static_cast<std::size_t>(target)];
                    const double base = lJ * sinc(0.5 * xi * lJ);
                    acc[idx] += wq * weight * prod * base * base;
                }
            }
            for (std::size_t idx = 0; idx < count; ++idx)
                partial[idx][static_cast<std::size_t>(k)] =
                    acc[idx] * 0.5 * panels.width * kInvSqrt2Pi * kInvSqrt2Pi;
        }
    };
    const int nthreads = std::max(1, quad.threads);
    if (nthreads == 1 || panels.count < 4 * nthreads) {
        run(0, panels.count);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (panels.count + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            long lo = t * chunk, hi = std::min<long>(panels.count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<NormEstimate> out(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        out[idx].value = 2.0 * kahan_total(partial[idx]);
        out[idx].cutoff = quad.cutoff;
        if (quad.tail_estimate)
            out[idx].tail_bound = tail_bound_value(
                s, std::ldexp(1.0, static_cast<int>(j_min + static_cast<long>(idx))),
                quad.cutoff);
    }
    return out;
}

Rational shift_diff_norm_sq(const sets::IntervalSet& A, const Rational& t) {
    return symmetric_difference(A, A.shifted(t)).total_length();
}

double shift_diff_norm_sq_fourier(const sets::IntervalSet& A, double t,
                                  const QuadratureConfig& quad) {
    return integrate_even_weighted(
        [&A, t](double xi) { return 2.0 * (1.0 - std::cos(t * xi)) * chi_hat_abs2(A, xi); },
        0.0, to_double(A.span()) + std::abs(t), quad);
}

} // namespace sobnull::spectral
