#ifndef SOBNULL_CANTOR_HPP
#define SOBNULL_CANTOR_HPP

#include "sobnull/interval_set.hpp"
#include "sobnull/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sobnull::sets {

// Generalized Cantor sets: nested interval unions governed by a sequence l_j
// with l_0 = 1 and 0 < l_{j+1} < l_j / 2. E_J is the level-J prefractal
// (2^J intervals of length l_J); E^(n) denotes the n-fold Cartesian product.
enum class CantorFamily {
    Explicit,    // caller-supplied rational l_j list
    Geometric,   // l_j = ratio^j ("ternary-like"), 0 < ratio < 1/2
    FatCantor,   // l_{j+1} = (l_j - beta*alpha^j)/2, positive measure
    SuperFat,    // l_j = 2^-j (1 - gamma + gamma^(delta^j))
    E_dpstar,    // dimension d in [0,n), threshold-null iff p <= pstar
    F_d1,        // 0 < d < n, never threshold-null
    F_dpstar,    // 0 < d < n, threshold-null iff p < pstar
    F_dinf,      // 0 < d < n, l_j = 2^(-jn/d), always threshold-null
    F_ninf,      // d = n, l_j = 2^-j/(j+1)
    F_01,        // d = 0, l_j = 2^(-j^2-1)
    F_0pstar,    // d = 0, doubly exponential with j0 scan
    F_0inf,      // d = 0, l_j = 2^(-2^(2^j))
};

const char* family_name(CantorFamily f);
std::optional<CantorFamily> family_from_name(const std::string& name);

struct CantorSpec {
    CantorFamily family;
    int n = 1;          // ambient product dimension
    int depth_cap = 32; // validated depth; level/gap queries beyond it fail

    // family parameters (only the relevant ones are set)
    std::vector<Rational> explicit_l; // Explicit, includes l_0 = 1
    Rational ratio;                   // Geometric
    Rational alpha, beta;             // FatCantor
    double gamma = 0, delta = 0;      // SuperFat
    double d = 0, pstar = 0;          // zoo rows
    long j0 = -1;                     // minimality scan result (F_0pstar, F_dpstar)
    long index_shift = 0;             // tail renormalization (see make notes)

    bool rational_backed() const;
    // Hausdorff dimension of the n-fold product, when known; nullopt for
    // Explicit specs (never computed from geometry).
    std::optional<double> hausdorff_dim() const;

    int max_level() const; // depth_cap, clamped by explicit list length

    // l_j accessors. log2_l is finite-double based and throws past the point
    // where even the logarithm leaves double range (F_0inf at large j).
    Rational l_exact(long j) const; // rational-backed families only
    double log2_l(long j) const;
    // log2(log(1/l_j) / log 2) = log2(-log2 l_j); robust for all families.
    double log2_neg_log2_l(long j) const;

    Rational gap_exact(long j) const; // Gap_j = l_{j-1} - 2 l_j, j >= 1
    double gap(long j) const;

    // (lim_j 2^j l_j)^n when a closed form exists.
    std::optional<Rational> measure_limit_exact() const;
    double measure_limit(int n_override = 0) const;
    // Depth-J value of (2^J l_J)^n: an upper bound for the limit, since
    // 2^j l_j is non-increasing.
    double measure_at_depth(long J) const;

    std::string describe() const;
};

// Factories. Each validates the family's parameter domain and checks
// 0 < l_{j+1} < l_j/2 up to depth (throws std::domain_error naming the
// violated constraint).
CantorSpec make_explicit(std::vector<Rational> l, int n, int depth = 32);
CantorSpec make_geometric(const Rational& ratio, int n, int depth = 32);
CantorSpec make_fat_cantor(const Rational& alpha, const Rational& beta, int n, int depth = 32);
CantorSpec make_superfat(double gamma, double delta, int n, int depth = 32);
// Zoo rows. d and pstar are ignored where the row fixes them (F_01, F_0inf,
// F_ninf). The scan cap for the j0 searches is 10^6.
CantorSpec make_zoo(CantorFamily row, double d, double pstar, int n, int depth = 32);

// Level-J prefractal. Exact when the family is rational-backed, otherwise a
// PrecisionError (std::domain_error) directs callers to level_set_float.
IntervalSet level_set(const CantorSpec& spec, long J);
FloatIntervalSet level_set_float(const CantorSpec& spec, long J);

Rational gap(const CantorSpec& spec, long j);
double measure_limit(const CantorSpec& spec, int n);

} // namespace sobnull::sets

#endif
