#ifndef SOBNULL_SERIES_HPP
#define SOBNULL_SERIES_HPP

#include <functional>
#include <string>

namespace sobnull::nullity {

enum class Convergence { Converges, Diverges, Inconclusive };

struct ConvergenceVerdict {
    Convergence result = Convergence::Inconclusive;
    long last_index = 0;
    std::string test_used; // "ratio" or "log-comparison"
    double measured_ratio = 0;
};

struct ProbeConfig {
    long max_index = 4096;
    double ratio_tol = 1e-6;
    int window = 16;
};

// Numeric convergence probe for positive-term series. Extrapolates the tail
// ratio (fit r_j ~ a + b/j over the last window); a ratio within tol of 1
// falls through to comparison against sum 1/(j log^2 j) (convergent) and the
// harmonic series (divergent). Disagreement yields Inconclusive rather than a
// guess. Terms are consumed as log2 values so doubly-exponential families
// cannot underflow.
ConvergenceVerdict series_probe_log2(const std::function<double(long)>& log2_term,
                                     const ProbeConfig& cfg = {});

ConvergenceVerdict series_probe(const std::function<double(long)>& term,
                                const ProbeConfig& cfg = {});

} // namespace sobnull::nullity

#endif
