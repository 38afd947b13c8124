#ifndef SOBNULL_GAP_SUM_HPP
#define SOBNULL_GAP_SUM_HPP

#include "sobnull/cantor.hpp"

#include <vector>

namespace sobnull::spectral {

// Membership series for the indicator of a Cantor set in H^{s,2}:
//   term_j = Gap_{j-1}^{2-2s} / Gap_j^2 * sum_{k>=j} 2^k Gap_k,  j >= 2,
// under the hypotheses Gap_j < l_j and Gap_j strictly decreasing. The tail
// sum telescopes to 2^j l_{j-1} - 2 m(E), evaluated in closed form whenever
// the measure limit is known; otherwise truncated with an attached slack.
struct GapSumResult {
    long j_begin = 2;
    std::vector<double> terms;
    std::vector<double> partial_sums;
    // per-term slack when the tail had to be truncated (explicit specs)
    std::vector<double> tail_slack;
};

GapSumResult gap_sum_terms(const sets::CantorSpec& spec, double s, long J);

// Fat family closed forms: term_j = C (2 alpha^{1-2s})^j with
// C = beta^{1-2s} alpha^{4s-3} / (1-2 alpha).
double fat_gap_sum_term(double alpha, double beta, double s, long j);
// Consecutive-term ratio 2 alpha^{1-2s}; equals 1 exactly at s = s_{alpha,2}.
double fat_gap_sum_ratio(double alpha, double s);

// Closed-form majorant for ||chi_E||^2 over |xi| > 1/Gap_1:
//   2^{s+1} c1 beta^{1-2s} / (alpha^{3-4s} (1-2 alpha)) * sum_{j>=2} r^j,
// r = 2 alpha^{1-2s}; divergent when r >= 1. Default c1 = 1/(1 - cos 1).
struct MembershipBound {
    bool divergent = false;
    double value = 0;
    double c1 = 0;
};
double default_c1();
MembershipBound fat_membership_bound(double alpha, double beta, double s, double c1 = -1.0);

} // namespace sobnull::spectral

#endif
