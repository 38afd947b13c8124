#include "sobnull/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sobnull::nullity {

using sets::CantorFamily;
using sets::CantorSpec;

SobolevIndex::SobolevIndex(double s_, double p_) : s(s_), p(p_) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw std::domain_error("SobolevIndex: requires 1 < p < infinity");
    if (!std::isfinite(s)) throw std::domain_error("SobolevIndex: s must be finite");
    p_conj = p / (p - 1.0);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Null: return "Null";
        case Verdict::NotNull: return "NotNull";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* justification_name(Justification j) {
    switch (j) {
        case Justification::None: return "None";
        case Justification::HausdorffBelow: return "HausdorffBelow";
        case Justification::HausdorffAbove: return "HausdorffAbove";
        case Justification::CantorSeries: return "CantorSeries";
        case Justification::ZooClosedForm: return "ZooClosedForm";
        case Justification::MeasurePositive: return "MeasurePositive";
        case Justification::EmptyInteriorHighS: return "EmptyInteriorHighS";
        case Justification::DeltaLowS: return "DeltaLowS";
        case Justification::CheeseCertificate: return "CheeseCertificate";
        case Justification::BoundaryFact: return "BoundaryFact";
        case Justification::ProductBound: return "ProductBound";
        case Justification::Basic: return "Basic";
    }
    return "?";
}

NullityVerdict NullityVerdict::null(Justification j, std::string detail) {
    return {Verdict::Null, j, std::move(detail)};
}
NullityVerdict NullityVerdict::not_null(Justification j, std::string detail) {
    return {Verdict::NotNull, j, std::move(detail)};
}
NullityVerdict NullityVerdict::unknown(std::string detail) {
    return {Verdict::Unknown, Justification::None, std::move(detail)};
}

double hausdorff_threshold(double d, int n, double p) {
    if (!(d >= 0.0 && d <= static_cast<double>(n)))
        throw std::domain_error("hausdorff_threshold: d outside [0, n]");
    const double p_conj = p / (p - 1.0);
    return (d - static_cast<double>(n)) / p_conj;
}

double cantor_term_log2(const CantorSpec& spec, int n, const SobolevIndex& idx, long j) {
    const double nn = n;
    const double low = -nn / idx.p_conj;
    if (!(idx.s >= low && idx.s < 0.0))
        throw std::domain_error("cantor_term: s outside [-n/p', 0)");
    const double pm1 = idx.p - 1.0;
    if (idx.s == low) {
        // logarithmic term 2^{-jn(p-1)} log(1/l_j)
        return -static_cast<double>(j) * nn * pm1 + spec.log2_neg_log2_l(j) + std::log2(M_LN2);
    }
    const double sigma = idx.s * idx.p_conj + nn; // in (0, n)
    return pm1 * (-static_cast<double>(j) * nn - sigma * spec.log2_l(j));
}

double cantor_term(const CantorSpec& spec, int n, const SobolevIndex& idx, long j) {
    return std::exp2(cantor_term_log2(spec, n, idx, j));
}

double fat_threshold(double alpha, double p) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::domain_error("fat_threshold: alpha outside (0, 1/2)");
    if (!(p > 1.0)) throw std::domain_error("fat_threshold: p must exceed 1");
    return (1.0 / p) * (1.0 + 1.0 / std::log2(alpha));
}

double fat_beta_range(double alpha, double s, double p, double ratio_AB) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::domain_error("fat_beta_range: alpha outside (0, 1/2)");
    if (!(ratio_AB > 0.0 && ratio_AB <= 1.0))
        throw std::domain_error("fat_beta_range: ratio A/B must lie in (0, 1]");
    if (!(s > 0.0 && s < fat_threshold(alpha, p)))
        throw std::domain_error("fat_beta_range: s must lie in (0, s_{alpha,p})");
    const double e = 1.0 - s * p;
    const double two_alpha_e = 2.0 * std::exp2(e * std::log2(alpha));
    if (!(two_alpha_e < 1.0))
        throw std::domain_error("fat_beta_range: certificate vacuous (2 alpha^{1-sp} >= 1)");
    return std::pow(ratio_AB * (1.0 - two_alpha_e), 1.0 / e);
}

SuperFatParams superfat_params(double p, double c, double C) {
    if (!(p > 1.0)) throw std::domain_error("superfat_params: p must exceed 1");
    if (!(c > 1.0)) throw std::domain_error("superfat_params: c must exceed 1");
    if (!(C > 1.0) && C != 1.0) throw std::domain_error("superfat_params: C must be >= 1");
    SuperFatParams out{p, c, C, std::exp2(1.0 / (p - 1.0))};
    return out;
}

double SuperFatParams::gamma_max(double delta) const {
    if (!(delta > delta_min))
        throw std::domain_error("superfat gamma_max: requires delta > 2^{1/(p-1)}");
    // exponent K = (C^-2 (1 - 2 delta^{1-p}))^{1/(1-p)} > 0; gamma_max = (2c)^-K
    const double inner = (1.0 - 2.0 * std::pow(delta, 1.0 - p)) / (C * C);
    const double K = std::pow(inner, 1.0 / (1.0 - p));
    const double g = std::pow(2.0 * c, -K);
    if (!(g < 1.0)) throw std::logic_error("superfat gamma_max: bound failed to be < 1");
    return g;
}

bool cheese_certificate(const sets::BallCloud& cloud, const SobolevIndex& idx,
                        const CheeseConstants& constants) {
    const double n = cloud.n;
    const double s = idx.s, p = idx.p;
    if (!(s > 0.0 && s <= n / p))
        throw std::domain_error("cheese_certificate: s outside (0, n/p]");
    const double r = cloud.inner_radius;
    if (s == n / p) {
        if (!(constants.c > 1.0))
            throw std::domain_error("cheese_certificate: logarithmic variant needs c > 1");
        double lhs = 0;
        for (const auto& g : cloud.balls)
            lhs += static_cast<double>(g.count) *
                   std::pow(std::log(constants.c / g.radius), 1.0 - p);
        const double rhs =
            std::pow(std::log(constants.c / r), 1.0 - p) / (constants.C * constants.C);
        return lhs < rhs;
    }
    const double e = n - s * p;
    double lhs = 0;
    for (const auto& g : cloud.balls)
        lhs += static_cast<double>(g.count) * std::pow(g.radius, e);
    const double rhs = constants.ratio_AB * std::pow(r, e);
    return lhs < rhs;
}

ProductBounds product_bounds(double s1, double s2, int n1, int n2, double p,
                             bool positive_measure) {
    ProductBounds b{};
    b.s_minus = std::min({s1, s2, s1 + s2});
    if (positive_measure)
        b.s_plus = std::min(s1 + static_cast<double>(n2) / p, s2 + static_cast<double>(n1) / p);
    else
        b.s_plus = std::min(s1, s2);
    return b;
}

double tensor_lower(const std::vector<double>& s_list) {
    if (s_list.empty()) throw std::invalid_argument("tensor_lower: empty list");
    double mn = s_list[0], neg = 0;
    for (double s : s_list) {
        mn = std::min(mn, s);
        neg += std::min(0.0, s);
    }
    return std::max(0.0, mn) + neg;
}

double tensor_upper(const std::vector<double>& s_list) {
    if (s_list.empty()) throw std::invalid_argument("tensor_upper: empty list");
    double mx = s_list[0], pos = 0;
    for (double s : s_list) {
        mx = std::max(mx, s);
        pos += std::max(0.0, s);
    }
    return std::min(0.0, mx) + pos;
}

NullityVerdict boundary_verdict(BoundaryClass reg, double alpha, int n,
                                const SobolevIndex& idx) {
    const double s = idx.s;
    const double lip = -1.0 / idx.p_conj;
    switch (reg) {
        case BoundaryClass::Lipschitz:
            if (s >= lip) return NullityVerdict::null(Justification::BoundaryFact,
                                                      "Lipschitz boundary: null iff s >= -1/p'");
            return NullityVerdict::not_null(Justification::BoundaryFact,
                                            "Lipschitz boundary: not null for s < -1/p'");
        case BoundaryClass::C0:
            if (s >= 0.0)
                return NullityVerdict::null(Justification::BoundaryFact,
                                            "C0 boundary has zero measure: null for s >= 0");
            if (s < lip)
                return NullityVerdict::not_null(
                    Justification::BoundaryFact,
                    "complement has interior: boundary dimension >= n-1");
            return NullityVerdict::unknown("C0 boundary: gap [-1/p', 0) undecided");
        case BoundaryClass::C0alpha:
            if (!(alpha > 0.0 && alpha < 1.0))
                throw std::domain_error("boundary_verdict: Holder exponent outside (0,1)");
            if (s > -alpha / idx.p_conj)
                return NullityVerdict::null(Justification::BoundaryFact,
                                            "C0alpha boundary: null for s > -alpha/p'");
            if (s < lip)
                return NullityVerdict::not_null(
                    Justification::BoundaryFact,
                    "complement has interior: boundary dimension >= n-1");
            return NullityVerdict::unknown("C0alpha boundary: gap [-1/p', -alpha/p'] undecided");
        case BoundaryClass::ComplementHasInterior:
            if (s < lip)
                return NullityVerdict::not_null(
                    Justification::BoundaryFact,
                    "complement has interior: boundary dimension >= n-1");
            return NullityVerdict::unknown("only the s < -1/p' direction is decided");
    }
    throw std::logic_error("boundary_verdict: unreachable");
}

NullityVerdict basic_verdict(const std::set<SetFlag>& flags, int n, const SobolevIndex& idx) {
    const auto has = [&flags](SetFlag f) { return flags.count(f) > 0; };
    if (has(SetFlag::InnerMeasureZero) && has(SetFlag::InnerMeasurePositive))
        throw std::invalid_argument("basic_verdict: contradictory measure flags");
    if (has(SetFlag::Countable) && has(SetFlag::InnerMeasurePositive))
        throw std::invalid_argument("basic_verdict: countable set with positive measure");

    const double s = idx.s;
    const double nn = n;
    const double low = -nn / idx.p_conj;
    if (s < low && has(SetFlag::Nonempty))
        return NullityVerdict::not_null(Justification::DeltaLowS,
                                        "point mass lies in H^{s,p} for s < -n/p'");
    if (has(SetFlag::Countable)) {
        if (s >= low)
            return NullityVerdict::null(Justification::Basic,
                                        "countable sets are null exactly for s >= -n/p'");
        return NullityVerdict::unknown("countable, s < -n/p', emptiness not known");
    }
    if (s > nn / idx.p) {
        if (has(SetFlag::EmptyInterior))
            return NullityVerdict::null(Justification::EmptyInteriorHighS,
                                        "empty interior decides nullity for s > n/p");
        return NullityVerdict::unknown("s > n/p needs the empty-interior flag");
    }
    if (s == 0.0) {
        if (has(SetFlag::InnerMeasureZero))
            return NullityVerdict::null(Justification::Basic, "inner measure zero at s = 0");
        if (has(SetFlag::InnerMeasurePositive))
            return NullityVerdict::not_null(Justification::MeasurePositive,
                                            "positive inner measure at s = 0");
        return NullityVerdict::unknown("s = 0 needs a measure flag");
    }
    if (has(SetFlag::InnerMeasurePositive) && s <= 0.0)
        return NullityVerdict::not_null(Justification::MeasurePositive,
                                        "positive inner measure: not null for s <= 0");
    return NullityVerdict::unknown("no elementary rule applies");
}

namespace {

std::string fmt(double v) { return format_double17(v); }

// Closed-form verdict for the Table rows at the exact threshold s = (d-n)/p'.
NullityVerdict zoo_marginal(const CantorSpec& spec, const SobolevIndex& idx) {
    std::ostringstream os;
    switch (spec.family) {
        case CantorFamily::E_dpstar: {
            const double x = (idx.p - 1.0) / (spec.pstar - 1.0);
            os << "threshold series ~ sum j^{-x}, x=(p-1)/(p*-1)=" << fmt(x);
            if (idx.p <= spec.pstar)
                return NullityVerdict::null(Justification::ZooClosedForm,
                                            os.str() + ": diverges (x <= 1)");
            return NullityVerdict::not_null(Justification::ZooClosedForm,
                                            os.str() + ": converges (x > 1)");
        }
        case CantorFamily::F_dpstar:
        case CantorFamily::F_0pstar: {
            const double x = (idx.p - 1.0) / (spec.pstar - 1.0);
            os << "threshold series ~ sum j^{-x} log^{-2x} j, x=" << fmt(x);
            if (idx.p < spec.pstar)
                return NullityVerdict::null(Justification::ZooClosedForm,
                                            os.str() + ": diverges (x < 1)");
            return NullityVerdict::not_null(Justification::ZooClosedForm,
                                            os.str() + ": converges (x >= 1)");
        }
        case CantorFamily::F_d1:
            return NullityVerdict::not_null(
                Justification::ZooClosedForm,
                "threshold series ~ sum y^{sqrt j} with y < 1: converges");
        case CantorFamily::F_01:
            return NullityVerdict::not_null(
                Justification::ZooClosedForm,
                "threshold series ~ sum 2^{-jn(p-1)} j^2: converges");
        case CantorFamily::F_dinf:
            return NullityVerdict::null(Justification::ZooClosedForm,
                                        "threshold series has constant terms: diverges");
        case CantorFamily::F_0inf:
            return NullityVerdict::null(
                Justification::ZooClosedForm,
                "threshold series ~ sum 2^{-jn(p-1)} 2^{2^j}: diverges");
        case CantorFamily::F_ninf:
            // threshold is s = 0, outside the series range; never reached here
            return NullityVerdict::null(Justification::ZooClosedForm, "zero measure at s = 0");
        default:
            break;
    }
    throw std::logic_error("zoo_marginal: not a zoo family");
}

bool is_zoo(CantorFamily f) {
    switch (f) {
        case CantorFamily::E_dpstar:
        case CantorFamily::F_d1:
        case CantorFamily::F_dpstar:
        case CantorFamily::F_dinf:
        case CantorFamily::F_ninf:
        case CantorFamily::F_01:
        case CantorFamily::F_0pstar:
        case CantorFamily::F_0inf:
            return true;
        default:
            return false;
    }
}

} // namespace

NullityVerdict classify_cantor(const CantorSpec& spec, int n, const SobolevIndex& idx) {
    const double s = idx.s, p = idx.p;
    const double nn = n;
    const double low = -nn / idx.p_conj;

    // Elementary facts first, so the series criterion only ever sees its own
    // admissible range [-n/p', 0).
    if (s < low)
        return NullityVerdict::not_null(Justification::DeltaLowS,
                                        "nonempty set, s < -n/p'");
    if (s > nn / p)
        return NullityVerdict::null(Justification::EmptyInteriorHighS,
                                    "Cantor sets have empty interior");

    const bool measure_known = spec.family != CantorFamily::Explicit;
    const double m = measure_known ? spec.measure_limit(n) : -1.0;

    if (s >= 0.0) {
        if (measure_known && m == 0.0)
            return NullityVerdict::null(Justification::Basic,
                                        "zero measure: null for every s >= 0");
        if (measure_known && m > 0.0) {
            if (s == 0.0)
                return NullityVerdict::not_null(Justification::MeasurePositive,
                                                "positive measure at s = 0");
            if (spec.family == CantorFamily::FatCantor) {
                const double a = to_double(spec.alpha);
                const double s2 = fat_threshold(a, 2.0);
                const double bound = std::min(2.0 * s2 / p, s2);
                if (s < bound) {
                    std::ostringstream os;
                    os << "characteristic function lies in H^{s,p} below "
                       << "min{2 s_{a,2}/p, s_{a,2}} = " << fmt(bound);
                    return NullityVerdict::not_null(Justification::ZooClosedForm, os.str());
                }
                return NullityVerdict::unknown(
                    "fat Cantor: nullity in [lower bound, n/p] is open");
            }
            return NullityVerdict::unknown(
                "positive measure: certificate needs capacity constants");
        }
        return NullityVerdict::unknown("explicit spec: measure limit not determined");
    }

    // -n/p' <= s < 0
    if (measure_known && m > 0.0)
        return NullityVerdict::not_null(Justification::MeasurePositive,
                                        "positive inner measure: not null for s <= 0");

    if (is_zoo(spec.family)) {
        const double t = hausdorff_threshold(spec.d, n, p);
        std::ostringstream os;
        os << "dim " << fmt(spec.d) << ", threshold " << fmt(t);
        if (s > t)
            return NullityVerdict::null(Justification::ZooClosedForm,
                                        os.str() + ": series diverges above threshold");
        if (s < t)
            return NullityVerdict::not_null(Justification::ZooClosedForm,
                                            os.str() + ": series converges below threshold");
        return zoo_marginal(spec, idx);
    }

    if (spec.family == CantorFamily::Geometric) {
        const double d = *spec.hausdorff_dim();
        const double t = hausdorff_threshold(d, n, p);
        if (s > t)
            return NullityVerdict::null(Justification::HausdorffBelow,
                                        "dimension below the critical value n + p's");
        if (s < t)
            return NullityVerdict::not_null(Justification::HausdorffAbove,
                                            "dimension above the critical value n + p's");
        return NullityVerdict::null(Justification::CantorSeries,
                                    "geometric family: constant-term series diverges");
    }

    // Explicit: numeric probe over the available levels.
    const long levels = spec.max_level();
    ProbeConfig cfg;
    if (levels < cfg.window + 2)
        return NullityVerdict::unknown("explicit spec too short for the series probe");
    cfg.max_index = levels;
    auto verdict = series_probe_log2(
        [&](long j) { return cantor_term_log2(spec, n, idx, j); }, cfg);
    std::ostringstream os;
    os << "series probe (" << verdict.test_used << ", ratio " << fmt(verdict.measured_ratio)
       << ", j <= " << verdict.last_index << ")";
    switch (verdict.result) {
        case Convergence::Diverges:
            return NullityVerdict::null(Justification::CantorSeries, os.str());
        case Convergence::Converges:
            return NullityVerdict::not_null(Justification::CantorSeries, os.str());
        case Convergence::Inconclusive:
            return NullityVerdict::unknown(os.str());
    }
    throw std::logic_error("classify_cantor: unreachable");
}

std::vector<CurvePoint> threshold_curve_dim(double d, int n, const std::vector<double>& rs) {
    std::vector<CurvePoint> out;
    out.reserve(rs.size());
    for (double r : rs) {
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("threshold_curve: r samples must lie in (0,1)");
        // S_E(r) = s_E(1/r) = (n - d)(r - 1) for zero-measure sets
        out.push_back({r, (static_cast<double>(n) - d) * (r - 1.0)});
    }
    return out;
}

std::vector<CurvePoint> threshold_curve_fat_lower(double alpha, const std::vector<double>& rs) {
    const double s2 = fat_threshold(alpha, 2.0);
    std::vector<CurvePoint> out;
    out.reserve(rs.size());
    for (double r : rs) {
        if (!(r > 0.0 && r < 1.0))
            throw std::domain_error("threshold_curve: r samples must lie in (0,1)");
        out.push_back({r, std::min(2.0 * r * s2, s2)});
    }
    return out;
}

} // namespace sobnull::nullity
