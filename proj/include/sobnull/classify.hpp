#ifndef SOBNULL_CLASSIFY_HPP
#define SOBNULL_CLASSIFY_HPP

#include "sobnull/ball_cloud.hpp"
#include "sobnull/cantor.hpp"
#include "sobnull/series.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sobnull::nullity {

// Regularity/integrability pair (s, p), 1 < p < infinity, with the Holder
// conjugate cached.
struct SobolevIndex {
    double s;
    double p;
    double p_conj;

    SobolevIndex(double s_, double p_);
};

enum class Verdict { Null, NotNull, Unknown };

enum class Justification {
    None, // Unknown carries no rule tag
    HausdorffBelow,
    HausdorffAbove,
    CantorSeries,
    ZooClosedForm,
    MeasurePositive,
    EmptyInteriorHighS,
    DeltaLowS,
    CheeseCertificate,
    BoundaryFact,
    ProductBound,
    Basic,
};

const char* verdict_name(Verdict v);
const char* justification_name(Justification j);

struct NullityVerdict {
    Verdict verdict = Verdict::Unknown;
    Justification justification = Justification::None;
    std::string detail;

    static NullityVerdict null(Justification j, std::string detail);
    static NullityVerdict not_null(Justification j, std::string detail);
    static NullityVerdict unknown(std::string detail);
};

// ---- threshold arithmetic ------------------------------------------------

// s_E(p) = (d - n)/p' for Borel E with m(E)=0 and Hausdorff dimension d.
double hausdorff_threshold(double d, int n, double p);

// Term of the Cantor nullity series at level j: for -n/p' < s < 0 the value
// (2^{-jn} l_j^{-(s p' + n)})^{p-1}; at s = -n/p' the logarithmic variant
// 2^{-jn(p-1)} log(1/l_j). Evaluated in log2 space.
double cantor_term_log2(const sets::CantorSpec& spec, int n, const SobolevIndex& idx, long j);
double cantor_term(const sets::CantorSpec& spec, int n, const SobolevIndex& idx, long j);

// Fat-Cantor regularity threshold s_{alpha,p} = (1/p)(1 + log 2 / log alpha).
double fat_threshold(double alpha, double p);

// Largest beta for which the ball-capacity certificate applies at (s,p):
// ratio_AB^(1/(1-sp)) (1 - 2 alpha^(1-sp))^(1/(1-sp)). ratio_AB is the
// caller-supplied A/B constant ratio in (0,1].
double fat_beta_range(double alpha, double s, double p, double ratio_AB);

// Parameter certificates for the super-fat family at s = 1/p: delta must
// exceed 2^(1/(p-1)); gamma_max(delta) = (2c)^(-(C^-2 (1-2 delta^(1-p)))^(1/(1-p))).
struct SuperFatParams {
    double p, c, C;
    double delta_min;
    double gamma_max(double delta) const;
};
SuperFatParams superfat_params(double p, double c, double C);

// Swiss-cheese non-nullity certificate. For 0 < s < n/p checks
// sum r_i^(n-sp) < (A/B) r^(n-sp); at s = n/p the logarithmic condition
// sum (log(c/r_i))^(1-p) < (log(c/r))^(1-p) / C^2. A true result certifies
// NotNull for the cheese set.
struct CheeseConstants {
    double ratio_AB = 1.0; // A/B for s < n/p
    double c = 2.0;        // s = n/p variant
    double C = 1.0;
};
bool cheese_certificate(const sets::BallCloud& cloud, const SobolevIndex& idx,
                        const CheeseConstants& constants);

// Cartesian-product threshold bounds (factors' thresholds in, bounds out).
struct ProductBounds {
    double s_minus, s_plus;
};
ProductBounds product_bounds(double s1, double s2, int n1, int n2, double p,
                             bool positive_measure);

// Sharp tensor-product regularity exponents: subset-sum min/max in closed form.
double tensor_lower(const std::vector<double>& s_list);
double tensor_upper(const std::vector<double>& s_list);

// Boundary regularity facts for E = boundary of an open set.
enum class BoundaryClass { C0, C0alpha, Lipschitz, ComplementHasInterior };
NullityVerdict boundary_verdict(BoundaryClass reg, double alpha, int n,
                                const SobolevIndex& idx);

// Elementary facts cascade.
enum class SetFlag { Nonempty, Countable, EmptyInterior, InnerMeasureZero, InnerMeasurePositive };
NullityVerdict basic_verdict(const std::set<SetFlag>& flags, int n, const SobolevIndex& idx);

// Full decision procedure for Cantor specs: elementary measure/interior facts
// first, then the family's closed-form series reduction; Explicit specs fall
// back to the numeric probe and may return Unknown.
NullityVerdict classify_cantor(const sets::CantorSpec& spec, int n, const SobolevIndex& idx);

// Threshold function S_E(r) = s_E(1/p) sampled at r values in (0,1).
struct CurvePoint {
    double r, S;
};
std::vector<CurvePoint> threshold_curve_dim(double d, int n, const std::vector<double>& rs);
// Lower-bound curve min{2 r s_{alpha,2}, s_{alpha,2}} for the fat family.
std::vector<CurvePoint> threshold_curve_fat_lower(double alpha, const std::vector<double>& rs);

} // namespace sobnull::nullity

#endif
