#include "sobnull/solve.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace sobnull::capacity {

namespace {

std::vector<std::size_t> padded_indices(const SpectralGrid& grid, const ConstraintMask& mask) {
    if (mask.indices.empty()) throw std::invalid_argument("ConstraintMask: empty index set");
    if (mask.padding < 0) throw std::invalid_argument("ConstraintMask: negative padding");
    std::set<std::size_t> s;
    const std::size_t N = grid.N();
    for (std::size_t i : mask.indices) {
        if (i >= N) throw std::invalid_argument("ConstraintMask: index out of range");
        const long lo = static_cast<long>(i) - mask.padding;
        const long hi = static_cast<long>(i) + mask.padding;
        for (long j = lo; j <= hi; ++j)
            if (j >= 0 && j < static_cast<long>(N)) s.insert(static_cast<std::size_t>(j));
    }
    return {s.begin(), s.end()};
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0, c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double y = a[i] * b[i] - c;
        double t = acc + y;
        c = (t - acc) - y;
        acc = t;
    }
    return acc;
}

// PCG for A_FF x_F = b_F where F is the complement of `fixed`; operator and
// preconditioner act on full grid vectors with the fixed entries zeroed.
struct EqualitySolver {
    const SpectralGrid& grid;
    std::vector<char> fixed; // 1 = constrained index

    void zero_fixed(std::vector<double>& v) const {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (fixed[i]) v[i] = 0.0;
    }

    // Solves for u: u = boundary on fixed entries, A u orthogonal to free set.
    // Returns iterations used; rel_res receives the final relative residual.
    long solve(const std::vector<double>& boundary, std::vector<double>& u, double tol,
               long max_iter, double& rel_res) const {
        const std::size_t N = grid.N();
        std::vector<double> g(N), r(N), z(N), p(N), ap(N);

        u = boundary; // start from the boundary extension (free part 0)
        grid.apply(u, g);
        for (std::size_t i = 0; i < N; ++i) r[i] = -g[i];
        zero_fixed(r);

        const double b_norm = std::sqrt(dot(r, r));
        rel_res = 0;
        if (b_norm == 0) return 0;

        grid.apply_inverse(r, z);
        zero_fixed(z);
        p = z;
        double rz = dot(r, z);
        long it = 0;
        for (; it < max_iter; ++it) {
            grid.apply(p, ap);
            zero_fixed(ap);
            const double pap = dot(p, ap);
            if (!(pap > 0)) break; // numerically singular direction
            const double alpha = rz / pap;
            for (std::size_t i = 0; i < N; ++i) u[i] += alpha * p[i];
            for (std::size_t i = 0; i < N; ++i) r[i] -= alpha * ap[i];
            rel_res = std::sqrt(dot(r, r)) / b_norm;
            if (rel_res < tol) {
                ++it;
                break;
            }
            grid.apply_inverse(r, z);
            zero_fixed(z);
            const double rz_new = dot(r, z);
            const double beta = rz_new / rz;
            rz = rz_new;
            for (std::size_t i = 0; i < N; ++i) p[i] = z[i] + beta * p[i];
        }
        return it;
    }
};

} // namespace

ConstraintMask interval_mask(const SpectralGrid& grid, double lo, double hi,
                             ConstraintMask::Kind kind, int padding) {
    ConstraintMask m;
    m.indices = grid.indices_in(lo, hi);
    if (m.indices.empty())
        throw std::invalid_argument("interval_mask: no grid points inside [lo, hi]");
    m.kind = kind;
    m.padding = padding;
    return m;
}

SolveReport solve_Cap(const SpectralGrid& grid, const ConstraintMask& mask,
                      const SolveOptions& opts) {
    if (mask.kind != ConstraintMask::Kind::EqualOne)
        throw std::invalid_argument("solve_Cap: mask kind must be EqualOne");
    const auto idx = padded_indices(grid, mask);
    const std::size_t N = grid.N();

    EqualitySolver eq{grid, std::vector<char>(N, 0)};
    for (std::size_t i : idx) eq.fixed[i] = 1;

    std::vector<double> boundary(N, 0.0);
    for (std::size_t i : idx) boundary[i] = 1.0;

    SolveReport rep;
    rep.L = grid.L();
    rep.N = N;
    rep.s = grid.s();
    rep.active_set_size = idx.size();

    std::vector<double> u;
    double rel_res = 0;
    rep.iterations = eq.solve(boundary, u, opts.tol, opts.max_iterations, rel_res);
    rep.residual = rel_res;
    rep.converged = rel_res < opts.tol || idx.size() == N;
    rep.value = grid.quadratic_form(u);
    if (opts.keep_minimizer) rep.minimizer = std::move(u);
    return rep;
}

SolveReport solve_cap(const SpectralGrid& grid, const ConstraintMask& mask,
                      const SolveOptions& opts) {
    if (mask.kind != ConstraintMask::Kind::AtLeastOne)
        throw std::invalid_argument("solve_cap: mask kind must be AtLeastOne");
    const auto idx = padded_indices(grid, mask);
    const std::size_t N = grid.N();
    std::vector<char> on_mask(N, 0);
    for (std::size_t i : idx) on_mask[i] = 1;

    SolveReport rep;
    rep.L = grid.L();
    rep.N = N;
    rep.s = grid.s();

    // Phase 1: projected gradient, step 1/lambda_max of the quadratic form's
    // Hessian 2A (lambda_max(A) = dx * max symbol). Used to seed the active
    // set; terminates early once the active set stops changing.
    std::vector<double> u(N, 0.0), g(N);
    for (std::size_t i : idx) u[i] = 1.0;
    const double step = 1.0 / (2.0 * grid.dx() * grid.symbol_max());
    std::vector<char> active(N, 0), prev_active(N, 2);
    long it = 0;
    const long pg_budget = std::min<long>(opts.max_iterations, 200);
    int stable = 0;
    for (; it < pg_budget && stable < 25; ++it) {
        grid.apply(u, g); // gradient of Q is 2 A u; fold the 2 into the step
        for (std::size_t i = 0; i < N; ++i) {
            u[i] -= 2.0 * step * g[i];
            if (on_mask[i] && u[i] < 1.0) u[i] = 1.0;
        }
        for (std::size_t i = 0; i < N; ++i) active[i] = on_mask[i] && u[i] <= 1.0;
        stable = (active == prev_active) ? stable + 1 : 0;
        prev_active = active;
    }

    // Phase 2: active-set polish. Solve the equality problem on the working
    // set, then exchange indices by the primal-dual rule
    //   W <- { i on mask : lambda_i + c (1 - u_i) > 0 },  lambda = 2 A u,
    // until the working set repeats, which is the KKT point.
    EqualitySolver eq{grid, {}};
    std::vector<double> boundary(N, 0.0);
    const double c_scale = 2.0 * grid.dx();
    long outer_limit = 200;
    std::vector<char> working = active;
    if (std::none_of(working.begin(), working.end(), [](char c) { return c != 0; }))
        working = on_mask; // PG left everything strictly feasible; start full

    double kkt = 0;
    bool converged = false;
    std::vector<char> previous_working;
    for (long outer = 0; outer < outer_limit; ++outer) {
        eq.fixed.assign(N, 0);
        std::fill(boundary.begin(), boundary.end(), 0.0);
        std::size_t active_count = 0;
        for (std::size_t i = 0; i < N; ++i)
            if (working[i]) {
                eq.fixed[i] = 1;
                boundary[i] = 1.0;
                ++active_count;
            }
        double rel_res = 0;
        it += eq.solve(boundary, u, opts.tol * 1e-2, opts.max_iterations, rel_res);
        grid.apply(u, g);

        // KKT residual: constraint violations on the mask, and negative
        // multipliers on the working set (normalized to u units by the same
        // scale used in the exchange rule). Stationarity off the working set
        // is enforced by the inner CG solve.
        kkt = 0;
        for (std::size_t i = 0; i < N; ++i) {
            if (working[i])
                kkt = std::max(kkt, std::max(0.0, -2.0 * g[i]) / c_scale);
            else if (on_mask[i])
                kkt = std::max(kkt, std::max(0.0, 1.0 - u[i]));
        }
        rep.active_set_size = active_count;
        if (kkt < opts.tol) {
            converged = true;
            break;
        }

        std::vector<char> next(N, 0);
        for (std::size_t i = 0; i < N; ++i) {
            if (!on_mask[i]) continue;
            const double lambda = working[i] ? 2.0 * g[i] : 0.0;
            next[i] = (lambda + c_scale * (1.0 - u[i]) > 0.0) ? 1 : 0;
        }
        if (next == working || next == previous_working) {
            // cycle guard: accept the better of the repeating sets
            converged = kkt < std::sqrt(opts.tol);
            break;
        }
        previous_working = working;
        working = next;
    }

    rep.iterations = it;
    rep.residual = kkt;
    rep.converged = converged;
    rep.value = grid.quadratic_form(u);
    if (opts.keep_minimizer) rep.minimizer = std::move(u);
    return rep;
}

} // namespace sobnull::capacity
