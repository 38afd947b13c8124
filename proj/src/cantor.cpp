#include "sobnull/cantor.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sobnull::sets {

namespace {

constexpr long kScanCap = 1000000; // j0 / renormalization scan limit
constexpr long kMaterializeCap = 24;

double sq(double x) { return x * x; }

[[noreturn]] void reject(const std::string& what) { throw std::domain_error(what); }

} // namespace

const char* family_name(CantorFamily f) {
    switch (f) {
        case CantorFamily::Explicit: return "explicit";
        case CantorFamily::Geometric: return "geometric";
        case CantorFamily::FatCantor: return "fat_cantor";
        case CantorFamily::SuperFat: return "superfat_cantor";
        case CantorFamily::E_dpstar: return "E_dpstar";
        case CantorFamily::F_d1: return "F_d1";
        case CantorFamily::F_dpstar: return "F_dpstar";
        case CantorFamily::F_dinf: return "F_dinf";
        case CantorFamily::F_ninf: return "F_ninf";
        case CantorFamily::F_01: return "F_01";
        case CantorFamily::F_0pstar: return "F_0pstar";
        case CantorFamily::F_0inf: return "F_0inf";
    }
    return "?";
}

std::optional<CantorFamily> family_from_name(const std::string& name) {
    for (CantorFamily f :
         {CantorFamily::Explicit, CantorFamily::Geometric, CantorFamily::FatCantor,
          CantorFamily::SuperFat, CantorFamily::E_dpstar, CantorFamily::F_d1,
          CantorFamily::F_dpstar, CantorFamily::F_dinf, CantorFamily::F_ninf, CantorFamily::F_01,
          CantorFamily::F_0pstar, CantorFamily::F_0inf})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

bool CantorSpec::rational_backed() const {
    switch (family) {
        case CantorFamily::Explicit:
        case CantorFamily::Geometric:
        case CantorFamily::FatCantor:
        case CantorFamily::F_ninf:
            return true;
        default:
            return false;
    }
}

int CantorSpec::max_level() const {
    if (family == CantorFamily::Explicit)
        return static_cast<int>(explicit_l.size()) - 1;
    return depth_cap;
}

namespace {

// Raw log2 l_j of the Table rows, before tail renormalization. j >= 0,
// raw l_0 = 1. Natural log is used inside the log^2 factors.
double raw_log2_l(const CantorSpec& s, long j) {
    if (j == 0) return 0.0;
    const double n = s.n;
    switch (s.family) {
        case CantorFamily::E_dpstar: {
            if (s.d == 0.0) {
                const double A = n * (s.pstar - 1.0);
                // -2 (2^{jA} - 1) / (2^A - 1)
                return -2.0 * std::expm1(static_cast<double>(j) * A * M_LN2) /
                       std::expm1(A * M_LN2);
            }
            const double B = (n - s.d) * (s.pstar - 1.0);
            const double arg = 1.0 + 0.5 * static_cast<double>(j - 1) * std::expm1(B * M_LN2);
            return -static_cast<double>(j) * n / s.d +
                   std::log2(arg) / (s.d * (s.pstar - 1.0));
        }
        case CantorFamily::F_01:
            return -(static_cast<double>(j) * static_cast<double>(j) + 1.0);
        case CantorFamily::F_0pstar: {
            const double A = n * (s.pstar - 1.0);
            const double m = static_cast<double>(j + s.j0);
            return -std::exp2(m * A) / sq(m);
        }
        case CantorFamily::F_0inf: {
            if (j > 10) return -std::numeric_limits<double>::infinity();
            return -std::exp2(std::exp2(static_cast<double>(j)));
        }
        case CantorFamily::F_d1:
            return -static_cast<double>(j) * n / s.d +
                   (n / s.d - 1.0) * std::sqrt(static_cast<double>(j)) / 2.0;
        case CantorFamily::F_dpstar: {
            const double m = static_cast<double>(j + s.j0);
            return -static_cast<double>(j) * n / s.d +
                   std::log2(m * sq(std::log(m))) / (s.d * (s.pstar - 1.0));
        }
        case CantorFamily::F_dinf:
            return -static_cast<double>(j) * n / s.d;
        case CantorFamily::F_ninf:
            return -static_cast<double>(j) - std::log2(static_cast<double>(j) + 1.0);
        default:
            break;
    }
    reject("raw_log2_l: not a zoo family");
}

// Raw l_j as a BigFloat (zoo + superfat materialization path).
BigFloat raw_l_big(const CantorSpec& s, long j) {
    using boost::multiprecision::pow;
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    const BigFloat two = 2;
    const BigFloat ln2 = log(two);
    if (j == 0) return 1;
    const BigFloat n = s.n;
    const BigFloat J = j;
    switch (s.family) {
        case CantorFamily::E_dpstar: {
            if (s.d == 0.0) {
                const BigFloat A = n * (BigFloat(s.pstar) - 1);
                BigFloat e = -2 * (pow(two, J * A) - 1) / (pow(two, A) - 1);
                return pow(two, e);
            }
            const BigFloat B = (n - BigFloat(s.d)) * (BigFloat(s.pstar) - 1);
            BigFloat arg = 1 + (J - 1) / 2 * (pow(two, B) - 1);
            return pow(two, -J * n / BigFloat(s.d)) *
                   pow(arg, 1 / (BigFloat(s.d) * (BigFloat(s.pstar) - 1)));
        }
        case CantorFamily::F_01:
            return pow(two, -(J * J + 1));
        case CantorFamily::F_0pstar: {
            const BigFloat A = n * (BigFloat(s.pstar) - 1);
            const BigFloat m = J + s.j0;
            return pow(two, -pow(two, m * A) / (m * m));
        }
        case CantorFamily::F_0inf:
            return pow(two, -pow(two, pow(two, J)));
        case CantorFamily::F_d1:
            return pow(two, -J * n / BigFloat(s.d) +
                                (n / BigFloat(s.d) - 1) * sqrt(J) / 2);
        case CantorFamily::F_dpstar: {
            const BigFloat m = J + s.j0;
            BigFloat lg = log(m);
            return pow(two, -J * n / BigFloat(s.d)) *
                   pow(m * lg * lg, 1 / (BigFloat(s.d) * (BigFloat(s.pstar) - 1)));
        }
        case CantorFamily::F_dinf:
            return pow(two, -J * n / BigFloat(s.d));
        case CantorFamily::F_ninf:
            return pow(two, -J) / (J + 1);
        case CantorFamily::SuperFat:
            return pow(two, -J) *
                   (1 - BigFloat(s.gamma) + pow(BigFloat(s.gamma), pow(BigFloat(s.delta), J)));
        default:
            break;
    }
    reject("raw_l_big: family has exact accessor");
}

} // namespace

Rational CantorSpec::l_exact(long j) const {
    if (j < 0) reject("l_exact: negative level");
    switch (family) {
        case CantorFamily::Explicit:
            if (j >= static_cast<long>(explicit_l.size()))
                reject("l_exact: beyond explicit list");
            return explicit_l[static_cast<std::size_t>(j)];
        case CantorFamily::Geometric:
            return rational_pow(ratio, j);
        case CantorFamily::FatCantor: {
            // 2^j l_j = 1 - beta (1 - (2 alpha)^j) / (1 - 2 alpha)
            Rational twoalpha = 2 * alpha;
            Rational mass = 1 - beta * (1 - rational_pow(twoalpha, j)) / (1 - twoalpha);
            return mass / pow2_rational(j);
        }
        case CantorFamily::F_ninf: {
            long m = j + index_shift;
            Rational raw = Rational(1, (m + 1)) / pow2_rational(m);
            if (index_shift == 0) return raw;
            Rational base = Rational(1, (index_shift + 1)) / pow2_rational(index_shift);
            return raw / base;
        }
        default:
            reject("l_exact: family is float-backed (use log2_l / level_set_float)");
    }
}

double CantorSpec::log2_l(long j) const {
    if (j < 0) reject("log2_l: negative level");
    switch (family) {
        case CantorFamily::Explicit:
        case CantorFamily::Geometric:
        case CantorFamily::FatCantor:
            return log2_rational(l_exact(j));
        case CantorFamily::SuperFat: {
            if (j == 0) return 0.0;
            double g_pow = std::pow(gamma, std::pow(delta, static_cast<double>(j)));
            return -static_cast<double>(j) + std::log2(1.0 - gamma + g_pow);
        }
        default: {
            double v = raw_log2_l(*this, j + index_shift) - raw_log2_l(*this, index_shift);
            if (!std::isfinite(v))
                reject("log2_l: level exceeds representable depth for this family");
            return v;
        }
    }
}

double CantorSpec::log2_neg_log2_l(long j) const {
    if (j <= 0) reject("log2_neg_log2_l: needs j >= 1");
    if (family == CantorFamily::F_0inf) {
        // -log2 l_j = 2^(2^j) exactly, so log2 of it is 2^j; this avoids the
        // overflow in log2_l at large j.
        return std::exp2(static_cast<double>(j));
    }
    return std::log2(-log2_l(j));
}

Rational CantorSpec::gap_exact(long j) const {
    if (j < 1) reject("gap: needs j >= 1");
    if (family == CantorFamily::FatCantor) return beta * rational_pow(alpha, j - 1);
    return l_exact(j - 1) - 2 * l_exact(j);
}

double CantorSpec::gap(long j) const {
    if (j < 1) reject("gap: needs j >= 1");
    if (rational_backed()) return to_double(gap_exact(j));
    if (family == CantorFamily::SuperFat) {
        // 2^-j (gamma^(delta^(j-1)) - gamma^(delta^j))
        double a = std::pow(gamma, std::pow(delta, static_cast<double>(j - 1)));
        double b = std::pow(gamma, std::pow(delta, static_cast<double>(j)));
        return std::ldexp(a - b, static_cast<int>(-j));
    }
    // l_{j-1} (1 - 2^(1 + log2 l_j - log2 l_{j-1})); stable, no cancellation
    double lj1 = log2_l(j - 1), lj = log2_l(j);
    return std::exp2(lj1) * (1.0 - std::exp2(1.0 + lj - lj1));
}

std::optional<Rational> CantorSpec::measure_limit_exact() const {
    switch (family) {
        case CantorFamily::FatCantor: {
            Rational m1 = 1 - beta / (1 - 2 * alpha);
            return rational_pow(m1, n);
        }
        case CantorFamily::Geometric:
        case CantorFamily::F_ninf:
            return Rational(0);
        default:
            if (family == CantorFamily::Explicit || family == CantorFamily::SuperFat)
                return std::nullopt;
            return Rational(0); // all zoo rows have vanishing 2^j l_j
    }
}

double CantorSpec::measure_limit(int n_override) const {
    const int nn = n_override > 0 ? n_override : n;
    switch (family) {
        case CantorFamily::FatCantor:
            return std::pow(to_double(1 - beta / (1 - 2 * alpha)), nn);
        case CantorFamily::SuperFat:
            return std::pow(1.0 - gamma, nn);
        case CantorFamily::Explicit:
            return measure_at_depth(max_level());
        default:
            return 0.0; // geometric and all zoo rows: 2^j l_j -> 0
    }
}

double CantorSpec::measure_at_depth(long J) const {
    // (2^J l_J)^n, non-increasing in J
    double l2 = log2_l(J);
    return std::exp2(static_cast<double>(n) * (static_cast<double>(J) + l2));
}

std::string CantorSpec::describe() const {
    std::ostringstream os;
    os << family_name(family) << "(n=" << n;
    switch (family) {
        case CantorFamily::Geometric: os << ", ratio=" << to_fraction_string(ratio); break;
        case CantorFamily::FatCantor:
            os << ", alpha=" << to_fraction_string(alpha) << ", beta=" << to_fraction_string(beta);
            break;
        case CantorFamily::SuperFat: os << ", gamma=" << gamma << ", delta=" << delta; break;
        case CantorFamily::Explicit: os << ", levels=" << explicit_l.size() - 1; break;
        default:
            os << ", d=" << d;
            if (pstar > 0) os << ", pstar=" << pstar;
            if (j0 >= 0) os << ", j0=" << j0;
            if (index_shift > 0) os << ", shift=" << index_shift;
            break;
    }
    os << ")";
    return os.str();
}

std::optional<double> CantorSpec::hausdorff_dim() const {
    switch (family) {
        case CantorFamily::Explicit:
            return std::nullopt;
        case CantorFamily::Geometric:
            // n-fold product of the 1-D set with l_j = ratio^j
            return static_cast<double>(n) * (M_LN2 / -std::log(to_double(ratio)));
        case CantorFamily::FatCantor:
        case CantorFamily::SuperFat:
        case CantorFamily::F_ninf:
            return static_cast<double>(n); // positive measure or d = n rows
        default:
            return d;
    }
}

namespace {

void check_common(int n, int depth) {
    if (n < 1) reject("CantorSpec: ambient dimension n must be >= 1");
    if (depth < 1 || depth > 64) reject("CantorSpec: depth cap out of range");
}

// Finds the smallest raw index K such that log2 l is strictly decreasing by
// more than 1 per step over [K, K+depth]. The Table rows define valid tails;
// a few of them (notably the d>0, finite-pstar row) start above l_0/2 and are
// renormalized to l_j <- l_{j+K} / l_K, which changes neither the dimension
// nor any series verdict.
long renormalization_shift(const CantorSpec& s, int depth) {
    long K = 0;
    for (long m = 0; m < kScanCap + depth; ++m) {
        double a = raw_log2_l(s, m);
        double b = raw_log2_l(s, m + 1);
        bool ok;
        if (std::isinf(b) && !std::isinf(a))
            ok = true; // fell below log range: certainly < l/2
        else if (std::isinf(a) && std::isinf(b))
            ok = true; // doubly exponential tail, monotone by form
        else
            ok = b < a - 1.0;
        if (!ok) {
            K = m + 1;
            continue;
        }
        if (m + 1 - K >= depth) return K;
    }
    reject("CantorSpec: no valid tail found within scan cap");
}

} // namespace

CantorSpec make_explicit(std::vector<Rational> l, int n, int depth) {
    check_common(n, depth);
    if (l.empty() || l[0] != 1) reject("explicit: l_0 must equal 1");
    for (std::size_t j = 0; j + 1 < l.size(); ++j) {
        if (!(l[j + 1] > 0)) reject("explicit: l_j must stay positive");
        if (!(2 * l[j + 1] < l[j])) reject("explicit: l_{j+1} < l_j/2 violated");
    }
    CantorSpec s;
    s.family = CantorFamily::Explicit;
    s.n = n;
    s.depth_cap = depth;
    s.explicit_l = std::move(l);
    return s;
}

CantorSpec make_geometric(const Rational& ratio, int n, int depth) {
    check_common(n, depth);
    if (!(ratio > 0 && 2 * ratio < 1)) reject("geometric: ratio must lie in (0, 1/2)");
    CantorSpec s;
    s.family = CantorFamily::Geometric;
    s.n = n;
    s.depth_cap = depth;
    s.ratio = ratio;
    return s;
}

CantorSpec make_fat_cantor(const Rational& alpha, const Rational& beta, int n, int depth) {
    check_common(n, depth);
    if (!(alpha > 0 && 2 * alpha < 1)) reject("fat_cantor: requires 0 < alpha < 1/2");
    if (!(beta > 0 && beta < 1 - 2 * alpha)) reject("fat_cantor: requires 0 < beta < 1 - 2 alpha");
    CantorSpec s;
    s.family = CantorFamily::FatCantor;
    s.n = n;
    s.depth_cap = depth;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

CantorSpec make_superfat(double gamma, double delta, int n, int depth) {
    check_common(n, depth);
    if (!(gamma > 0 && gamma < 1)) reject("superfat: requires 0 < gamma < 1");
    if (!(delta > 1)) reject("superfat: requires delta > 1");
    CantorSpec s;
    s.family = CantorFamily::SuperFat;
    s.n = n;
    s.depth_cap = depth;
    s.gamma = gamma;
    s.delta = delta;
    return s;
}

CantorSpec make_zoo(CantorFamily row, double d, double pstar, int n, int depth) {
    check_common(n, depth);
    CantorSpec s;
    s.family = row;
    s.n = n;
    s.depth_cap = depth;
    const double nn = n;
    switch (row) {
        case CantorFamily::E_dpstar:
            if (!(d >= 0 && d < nn)) reject("E_dpstar: requires 0 <= d < n");
            if (!(pstar > 1) || std::isinf(pstar)) reject("E_dpstar: requires 1 < pstar < inf");
            s.d = d;
            s.pstar = pstar;
            break;
        case CantorFamily::F_d1:
            if (!(d > 0 && d < nn)) reject("F_d1: requires 0 < d < n");
            s.d = d;
            s.pstar = 1;
            break;
        case CantorFamily::F_dpstar: {
            if (!(d > 0 && d < nn)) reject("F_dpstar: requires 0 < d < n");
            if (!(pstar > 1) || std::isinf(pstar)) reject("F_dpstar: requires 1 < pstar < inf");
            s.d = d;
            s.pstar = pstar;
            const double bound = std::exp2((nn - d) * (pstar - 1.0));
            long j0 = -1;
            for (long j = 2; j <= kScanCap; ++j) {
                double wj = static_cast<double>(j) * sq(std::log(static_cast<double>(j)));
                double wj1 =
                    static_cast<double>(j + 1) * sq(std::log(static_cast<double>(j + 1)));
                if (wj1 / wj < bound &&
                    std::exp2(-static_cast<double>(j) * nn * (pstar - 1.0)) * wj1 < bound) {
                    j0 = j;
                    break;
                }
            }
            if (j0 < 0) reject("F_dpstar: j0 scan exceeded cap 10^6");
            s.j0 = j0;
            break;
        }
        case CantorFamily::F_dinf:
            if (!(d > 0 && d < nn)) reject("F_dinf: requires 0 < d < n");
            s.d = d;
            s.pstar = std::numeric_limits<double>::infinity();
            break;
        case CantorFamily::F_ninf:
            s.d = nn;
            s.pstar = std::numeric_limits<double>::infinity();
            break;
        case CantorFamily::F_01:
            s.d = 0;
            s.pstar = 1;
            break;
        case CantorFamily::F_0pstar: {
            if (!(pstar > 1) || std::isinf(pstar)) reject("F_0pstar: requires 1 < pstar < inf");
            s.d = 0;
            s.pstar = pstar;
            const double A = nn * (pstar - 1.0);
            long j0 = -1;
            for (long j = 1; j <= kScanCap; ++j) {
                double fj = std::exp2(static_cast<double>(j) * A) / sq(static_cast<double>(j));
                double fj1 =
                    std::exp2(static_cast<double>(j + 1) * A) / sq(static_cast<double>(j + 1));
                if (fj1 - fj > 1.0) {
                    j0 = j;
                    break;
                }
            }
            if (j0 < 0) reject("F_0pstar: j0 scan exceeded cap 10^6");
            s.j0 = j0;
            break;
        }
        case CantorFamily::F_0inf:
            s.d = 0;
            s.pstar = std::numeric_limits<double>::infinity();
            break;
        default:
            reject("make_zoo: not a Table row");
    }
    s.index_shift = (row == CantorFamily::F_0inf) ? 0 : renormalization_shift(s, depth);
    return s;
}

IntervalSet level_set(const CantorSpec& spec, long J) {
    if (J < 0) reject("level_set: negative level");
    if (J > spec.max_level()) reject("level_set: level exceeds configured depth");
    if (!spec.rational_backed())
        reject("level_set: family is float-backed; use level_set_float");
    if (J > kMaterializeCap) reject("level_set: materialization capped at 2^24 components");

    std::vector<Rational> lefts{Rational(0)};
    for (long k = 1; k <= J; ++k) {
        Rational off = spec.l_exact(k - 1) - spec.l_exact(k);
        std::vector<Rational> next;
        next.reserve(lefts.size() * 2);
        for (const auto& a : lefts) {
            next.push_back(a);
            next.push_back(a + off);
        }
        lefts = std::move(next);
    }
    Rational lJ = spec.l_exact(J);
    std::vector<IntervalSet::Interval> iv;
    iv.reserve(lefts.size());
    for (const auto& a : lefts) iv.emplace_back(a, a + lJ);
    return IntervalSet::from_intervals(std::move(iv));
}

FloatIntervalSet level_set_float(const CantorSpec& spec, long J) {
    if (J < 0) reject("level_set_float: negative level");
    if (J > spec.max_level()) reject("level_set_float: level exceeds configured depth");
    if (J > kMaterializeCap) reject("level_set_float: materialization capped");

    auto l_big = [&](long j) -> BigFloat {
        if (spec.rational_backed()) return BigFloat(spec.l_exact(j));
        BigFloat raw = raw_l_big(spec, j + spec.index_shift);
        if (spec.index_shift) raw /= raw_l_big(spec, spec.index_shift);
        if (raw == 0)
            reject("level_set_float: endpoints not representable at this depth");
        return raw;
    };

    std::vector<BigFloat> lefts{BigFloat(0)};
    for (long k = 1; k <= J; ++k) {
        BigFloat off = l_big(k - 1) - l_big(k);
        std::vector<BigFloat> next;
        next.reserve(lefts.size() * 2);
        for (const auto& a : lefts) {
            next.push_back(a);
            next.push_back(a + off);
        }
        lefts = std::move(next);
    }
    BigFloat lJ = l_big(J);
    FloatIntervalSet out;
    out.intervals.reserve(lefts.size());
    for (const auto& a : lefts) out.intervals.emplace_back(a, a + lJ);
    return out;
}

Rational gap(const CantorSpec& spec, long j) { return spec.gap_exact(j); }

double measure_limit(const CantorSpec& spec, int n) { return spec.measure_limit(n); }

} // namespace sobnull::sets
