#ifndef SOBNULL_SOLVE_HPP
#define SOBNULL_SOLVE_HPP

#include "sobnull/grid.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sobnull::capacity {

// Obstacle mask on the grid: the constraint applies on the listed indices,
// padded by a number of grid cells on each side (the discrete realization of
// "in a neighbourhood of K").
struct ConstraintMask {
    enum class Kind { AtLeastOne, EqualOne };
    std::vector<std::size_t> indices;
    Kind kind = Kind::AtLeastOne;
    int padding = 1;
};

ConstraintMask interval_mask(const SpectralGrid& grid, double lo, double hi,
                             ConstraintMask::Kind kind, int padding = 1);

struct SolveReport {
    double value = 0;       // capacity estimate Q(u*)
    long iterations = 0;    // inner CG/gradient iterations, total
    double residual = 0;    // KKT residual (cap) or relative CG residual (Cap)
    std::size_t active_set_size = 0;
    bool converged = false;
    double L = 0;
    std::size_t N = 0;
    double s = 0;
    std::vector<double> minimizer; // grid samples of u*
};

struct SolveOptions {
    double tol = 1e-8;          // KKT / relative-residual stopping threshold
    long max_iterations = 100000;
    bool keep_minimizer = false;
};

// Equality-constrained problem (u = 1 on the padded mask): preconditioned
// conjugate gradients on the free variables, symbol preconditioner.
SolveReport solve_Cap(const SpectralGrid& grid, const ConstraintMask& mask,
                      const SolveOptions& opts = {});

// Obstacle problem (u >= 1 on the padded mask): projected gradient with the
// step set by the largest symbol value to stabilize the active set, then
// active-set polishing (equality solves on the working set until the KKT
// conditions hold).
SolveReport solve_cap(const SpectralGrid& grid, const ConstraintMask& mask,
                      const SolveOptions& opts = {});

} // namespace sobnull::capacity

#endif
