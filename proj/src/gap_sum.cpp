#include "sobnull/gap_sum.hpp"

#include <cmath>
#include <stdexcept>

namespace sobnull::spectral {

using sets::CantorFamily;
using sets::CantorSpec;

namespace {

void validate_hypotheses(const CantorSpec& spec, long J) {
    if (spec.rational_backed()) {
        Rational prev_gap = spec.gap_exact(1);
        for (long j = 1; j <= J; ++j) {
            Rational g = spec.gap_exact(j);
            if (!(g < spec.l_exact(j)))
                throw std::domain_error("gap_sum: hypothesis Gap_j < l_j violated at j=" +
                                        std::to_string(j));
            if (j > 1 && !(g < prev_gap))
                throw std::domain_error("gap_sum: gaps not strictly decreasing at j=" +
                                        std::to_string(j));
            prev_gap = g;
        }
        return;
    }
    double prev_gap = spec.gap(1);
    for (long j = 1; j <= J; ++j) {
        double g = spec.gap(j);
        if (!(g < std::exp2(spec.log2_l(j))))
            throw std::domain_error("gap_sum: hypothesis Gap_j < l_j violated at j=" +
                                    std::to_string(j));
        if (j > 1 && !(g < prev_gap))
            throw std::domain_error("gap_sum: gaps not strictly decreasing at j=" +
                                    std::to_string(j));
        prev_gap = g;
    }
}

} // namespace

GapSumResult gap_sum_terms(const CantorSpec& spec, double s, long J) {
    if (!(s > 0)) throw std::domain_error("gap_sum: requires s > 0");
    if (J < 2) throw std::domain_error("gap_sum: requires J >= 2");
    validate_hypotheses(spec, J);

    const bool fat = spec.family == CantorFamily::FatCantor;
    const bool explicit_spec = spec.family == CantorFamily::Explicit;
    const long deepest = spec.max_level();
    if (explicit_spec && J > deepest)
        throw std::domain_error("gap_sum: J beyond the explicit list");

    // log2 of gaps and of l_{j-1}
    auto log2_gap = [&spec](long j) {
        if (spec.family == CantorFamily::FatCantor)
            return log2_rational(spec.beta) +
                   static_cast<double>(j - 1) * log2_rational(spec.alpha);
        if (spec.rational_backed()) return log2_rational(spec.gap_exact(j));
        return std::log2(spec.gap(j));
    };

    GapSumResult out;
    out.j_begin = 2;
    double running = 0;
    for (long j = 2; j <= J; ++j) {
        double log2_tail;
        double slack = 0;
        if (fat) {
            // sum_{k>=j} 2^k beta alpha^{k-1} = (beta/alpha) (2 alpha)^j / (1-2 alpha)
            const double l2a = log2_rational(spec.alpha);
            log2_tail = log2_rational(spec.beta) - l2a +
                        static_cast<double>(j) * (1.0 + l2a) -
                        std::log2(1.0 - 2.0 * to_double(spec.alpha));
        } else if (auto m = spec.measure_limit_exact(); m.has_value() && spec.n == 1) {
            // telescoping: sum_{k>=j} 2^k Gap_k = 2^j l_{j-1} - 2 m
            double tail = std::exp2(static_cast<double>(j) + spec.log2_l(j - 1)) -
                          2.0 * to_double(*m);
            log2_tail = std::log2(tail);
        } else {
            // truncate at the deepest available level; remainder 2^{K+1} l_K
            double tail = std::exp2(static_cast<double>(j) + spec.log2_l(j - 1)) -
                          2.0 * spec.measure_at_depth(deepest);
            slack = 2.0 * spec.measure_at_depth(deepest);
            log2_tail = std::log2(tail);
        }
        const double lg_prev = log2_gap(j - 1), lg_cur = log2_gap(j);
        const double term = std::exp2((2.0 - 2.0 * s) * lg_prev - 2.0 * lg_cur + log2_tail);
        running += term;
        out.terms.push_back(term);
        out.partial_sums.push_back(running);
        out.tail_slack.push_back(slack);
    }
    return out;
}

double fat_gap_sum_term(double alpha, double beta, double s, long j) {
    const double l2a = std::log2(alpha);
    const double log2_C =
        (1.0 - 2.0 * s) * std::log2(beta) + (4.0 * s - 3.0) * l2a - std::log2(1.0 - 2.0 * alpha);
    const double log2_r = 1.0 + (1.0 - 2.0 * s) * l2a;
    return std::exp2(log2_C + static_cast<double>(j) * log2_r);
}

double fat_gap_sum_ratio(double alpha, double s) {
    return std::exp2(1.0 + (1.0 - 2.0 * s) * std::log2(alpha));
}

double default_c1() { return 1.0 / (1.0 - std::cos(1.0)); }

MembershipBound fat_membership_bound(double alpha, double beta, double s, double c1) {
    if (!(alpha > 0 && alpha < 0.5 && beta > 0 && beta < 1.0 - 2.0 * alpha))
        throw std::domain_error("fat_membership_bound: invalid fat parameters");
    if (!(s > 0)) throw std::domain_error("fat_membership_bound: requires s > 0");
    MembershipBound out;
    out.c1 = c1 > 0 ? c1 : default_c1();
    const double r = fat_gap_sum_ratio(alpha, s);
    if (r >= 1.0) {
        out.divergent = true;
        return out;
    }
    const double pre = std::exp2(s + 1.0) * out.c1 *
                       std::pow(beta, 1.0 - 2.0 * s) /
                       (std::pow(alpha, 3.0 - 4.0 * s) * (1.0 - 2.0 * alpha));
    out.value = pre * r * r / (1.0 - r);
    return out;
}

} // namespace sobnull::spectral
